#include "mvop/measures.hpp"

#include <algorithm>
#include <stdexcept>

#include "mvop/combinatorics.hpp"
#include "mvop/parallel.hpp"
#include "mvop/rates.hpp"

namespace mvop {

namespace {

void require_family(const FamilyParams& params, Family family, const char* what) {
  if (params.family != family) {
    throw std::invalid_argument(std::string(what) + ": wrong parameter family");
  }
}

void require_dim(const LatticePoint& x, const FamilyParams& params, const char* what) {
  if (static_cast<int>(x.size()) != params.dim()) {
    throw std::invalid_argument(std::string(what) + ": point dimension mismatch");
  }
}

bool beta_is_integer(const FamilyParams& params) { return params.beta.is_integer(); }

}  // namespace

Rational hahn_weight(const LatticePoint& x, const FamilyParams& params) {
  require_family(params, Family::hahn, "hahn_weight");
  require_dim(x, params, "hahn_weight");
  Rational w(multinomial(params.N, x.span()));
  for (int j = 1; j <= params.dim(); ++j) {
    w *= rising_factorial(params.a_at(j), x[static_cast<std::size_t>(j - 1)]);
  }
  w *= rising_factorial(params.b, params.N - x.total());
  w /= rising_factorial(params.a_total() + params.b, params.N);
  return w;
}

Rational krawtchouk_weight(const LatticePoint& x, const FamilyParams& params) {
  require_family(params, Family::krawtchouk, "krawtchouk_weight");
  require_dim(x, params, "krawtchouk_weight");
  Rational w(multinomial(params.N, x.span()));
  for (int j = 1; j <= params.dim(); ++j) {
    w *= pow(params.a_at(j), x[static_cast<std::size_t>(j - 1)]);
  }
  w /= pow(Rational(1) + params.a_total(), params.N);
  return w;
}

MeixnerWeight meixner_weight(const LatticePoint& x, const FamilyParams& params) {
  require_family(params, Family::meixner, "meixner_weight");
  require_dim(x, params, "meixner_weight");
  if (params.a_total() >= Rational(1)) {
    throw std::invalid_argument("meixner_weight: |a| must be < 1");
  }
  MeixnerWeight out;
  out.value = rising_factorial(params.beta, x.total());
  for (int j = 1; j <= params.dim(); ++j) {
    const int xj = x[static_cast<std::size_t>(j - 1)];
    if (xj < 0) {
      throw std::invalid_argument("meixner_weight: negative coordinate");
    }
    out.value *= pow(params.a_at(j), xj) / Rational(factorial(xj));
  }
  out.normalized = beta_is_integer(params);
  if (out.normalized) {
    out.value *= pow(Rational(1) - params.a_total(), params.beta.numerator().get_si());
  }
  return out;
}

Rational family_weight(const LatticePoint& x, const FamilyParams& params) {
  switch (params.family) {
    case Family::hahn:
      return hahn_weight(x, params);
    case Family::krawtchouk:
      return krawtchouk_weight(x, params);
    case Family::meixner:
      return meixner_weight(x, params).value;
  }
  return {};
}

bool weight_is_normalized(const FamilyParams& params) {
  return params.bounded() || beta_is_integer(params);
}

Rational WeightTable::sum() const {
  Rational s;
  for (const auto& v : values) {
    s += v;
  }
  return s;
}

WeightTable make_weight_table(const FamilyParams& params, std::optional<int> x_max) {
  params.validate();
  WeightTable table;
  table.params = params;
  table.lattice = domain_lattice(params, x_max);
  table.values.resize(table.lattice->size());
  const Lattice& lat = *table.lattice;
  parallel_for(table.values.size(),
               [&](std::size_t i) { table.values[i] = family_weight(lat.point(i), params); });
  table.normalized = weight_is_normalized(params);
  if (!params.bounded()) {
    table.tail_mass_bound = meixner_tail_bound(params, lat.bound());
  }
  return table;
}

Rational inner_product(const LatticeFunction& f, const LatticeFunction& g, const WeightTable& w) {
  require_same_lattice(f.lattice(), g.lattice(), "inner_product");
  require_same_lattice(f.lattice(), *w.lattice, "inner_product");
  Rational sum;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f.valid(i) || !g.valid(i)) {
      throw std::invalid_argument("inner_product: invalid entry in operand");
    }
    sum += f[i] * g[i] * w.values[i];
  }
  return sum;
}

Rational meixner_shell_mass(const FamilyParams& params, int s) {
  require_family(params, Family::meixner, "meixner_shell_mass");
  Rational mass = rising_factorial(params.beta, s) * pow(params.a_total(), s) / Rational(factorial(s));
  if (beta_is_integer(params)) {
    mass *= pow(Rational(1) - params.a_total(), params.beta.numerator().get_si());
  }
  return mass;
}

std::optional<Rational> meixner_tail_bound(const FamilyParams& params, int x_max) {
  const std::vector<Rational> one{Rational(1)};
  return meixner_tail_bound(params, x_max, one, one);
}

namespace {

Rational binomial_series(std::span<const Rational> g, int s) {
  Rational out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    out += g[k] * Rational(binomial(s, static_cast<int>(k)));
  }
  return out;
}

}  // namespace

std::optional<Rational> meixner_tail_bound(const FamilyParams& params, int x_max, std::span<const Rational> g,
                                           std::span<const Rational> h) {
  require_family(params, Family::meixner, "meixner_tail_bound");
  if (x_max < 0 || g.empty() || h.empty()) {
    throw std::invalid_argument("meixner_tail_bound: negative bound or empty majorant");
  }
  const int dg = static_cast<int>(g.size()) - 1;
  const int dh = static_cast<int>(h.size()) - 1;
  const Rational a = params.a_total();
  auto ratio_bound = [&](int s) {
    Rational q = Rational(s + 1) / Rational(s + 1 - dg) * Rational(s + 1) / Rational(s + 1 - dh) * a;
    const Rational poch = (params.beta + Rational(s)) / Rational(s + 1);
    return poch > Rational(1) ? q * poch : q;
  };
  constexpr int kMaxShells = 400;
  const int settle = std::max(x_max + 1, 4 * (dg + dh) + 1);
  Rational sum;
  int s = x_max + 1;
  while (s < settle || ratio_bound(s) >= Rational(1)) {
    if (s - x_max > kMaxShells) {
      return std::nullopt;
    }
    sum += binomial_series(g, s) * binomial_series(h, s) * meixner_shell_mass(params, s);
    ++s;
  }
  const Rational term = binomial_series(g, s) * binomial_series(h, s) * meixner_shell_mass(params, s);
  return sum + term / (Rational(1) - ratio_bound(s));
}

Rational rate_ratio(const FamilyParams& params, const LatticePoint& x, int j) {
  const BirthDeathRates rates(params);
  std::vector<int> up = x.entries();
  up[static_cast<std::size_t>(j - 1)] += 1;
  return rates.birth(x.span(), j) / rates.death(up, j);
}

}  // namespace mvop
