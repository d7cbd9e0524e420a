#include "mvop/polynomials.hpp"

#include <stdexcept>
#include <string>

#include "mvop/combinatorics.hpp"

namespace mvop {

namespace {

/// sum_{k=0}^{m} (-m)_k prod (up)_k / (prod (low)_k k!) z^k, built term by
/// term. The sum stops at the first vanishing numerator factor.
Rational terminating_series(int m, std::initializer_list<Rational> up,
                            std::initializer_list<Rational> low, const Rational& z, const char* what) {
  if (m < 0) {
    throw std::invalid_argument(std::string(what) + ": negative degree");
  }
  Rational sum(1);
  Rational term(1);
  for (int k = 0; k < m; ++k) {
    Rational num = Rational(k - m) * z;
    for (const auto& u : up) {
      num *= u + Rational(k);
    }
    if (num.is_zero()) {
      break;
    }
    Rational den(k + 1);
    for (const auto& l : low) {
      den *= l + Rational(k);
    }
    if (den.is_zero()) {
      throw std::domain_error(std::string(what) + ": lower parameter vanishes before termination");
    }
    term *= num / den;
    sum += term;
  }
  return sum;
}

int total(std::span<const int> v) {
  int s = 0;
  for (int e : v) {
    s += e;
  }
  return s;
}

void check_args(std::span<const int> m, std::span<const int> x, const FamilyParams& params,
                Family family, const char* what) {
  if (params.family != family) {
    throw std::invalid_argument(std::string(what) + ": wrong parameter family");
  }
  const auto n = static_cast<std::size_t>(params.dim());
  if (m.size() != n || x.size() != n) {
    throw std::invalid_argument(std::string(what) + ": m and x must have n entries");
  }
  for (int e : m) {
    if (e < 0) {
      throw std::invalid_argument(std::string(what) + ": negative degree");
    }
  }
  if (params.bounded() && total(m) > params.N) {
    throw std::invalid_argument(std::string(what) + ": |m| exceeds N");
  }
}

/// m_{j+1} + ... + m_{n-1}
int degree_tail(std::span<const int> m, int j) {
  int s = 0;
  for (std::size_t k = static_cast<std::size_t>(j) + 1; k < m.size(); ++k) {
    s += m[k];
  }
  return s;
}

}  // namespace

Rational hahn_1v(int m, int x, const Rational& a, const Rational& b, const Rational& N) {
  return terminating_series(m, {a + b + Rational(m - 1), Rational(-x)}, {a, -N}, Rational(1), "hahn_1v");
}

Rational krawtchouk_1v(int m, int x, const Rational& p, const Rational& N) {
  if (p.is_zero()) {
    throw std::invalid_argument("krawtchouk_1v: p must be nonzero");
  }
  return terminating_series(m, {Rational(-x)}, {-N}, Rational(1) / p, "krawtchouk_1v");
}

Rational meixner_1v(int m, int x, const Rational& c, const Rational& beta) {
  if (c.is_zero()) {
    throw std::invalid_argument("meixner_1v: c must be nonzero");
  }
  return terminating_series(m, {Rational(-x)}, {beta}, Rational(1) - Rational(1) / c, "meixner_1v");
}

Rational type2_hahn(const Type2Args& args) {
  if (args.m < 0) {
    throw std::invalid_argument("type2_hahn: negative degree");
  }
  const int m = args.m;
  Rational sum;
  for (int k = 0; k <= m; ++k) {
    Rational term(binomial(m, k));
    term *= rising_factorial(Rational(-args.u), m - k);
    if (term.is_zero()) {
      continue;
    }
    term *= rising_factorial(Rational(-args.v), k);
    term *= rising_factorial(args.gamma + Rational(k), m - k);
    term *= rising_factorial(args.alpha + Rational(m - k), k);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

Rational type2_km(const Type2Args& args) {
  if (args.m < 0) {
    throw std::invalid_argument("type2_km: negative degree");
  }
  if (args.alpha.is_zero()) {
    throw std::invalid_argument("type2_km: alpha must be nonzero");
  }
  const int m = args.m;
  const Rational ratio = args.gamma / args.alpha;
  Rational sum;
  for (int k = 0; k <= m; ++k) {
    Rational term(binomial(m, k));
    term *= rising_factorial(Rational(-args.u), k);
    if (term.is_zero()) {
      break;
    }
    term *= rising_factorial(Rational(-args.v), m - k) * pow(ratio, k);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

Rational r_product(const FamilyParams& params, int i, std::span<const int> m, std::span<const int> x) {
  const int n = params.dim();
  if (i < 1 || i > n - 1) {
    throw std::invalid_argument("r_product: i must lie in [1, n-1]");
  }
  Rational product(1);
  for (int j = i; j <= n - 1; ++j) {
    const int shift = degree_tail(m, j);
    Type2Args args;
    args.i = j;
    args.m = m[static_cast<std::size_t>(j)];
    args.u = x[static_cast<std::size_t>(j - 1)];
    args.v = tail_sum(x, j) - shift;
    args.alpha = params.a_at(j);
    args.gamma = params.a_tail(j);
    if (params.family == Family::hahn) {
      args.gamma += Rational(2 * shift);
      product *= type2_hahn(args);
    } else {
      product *= type2_km(args);
    }
    if (product.is_zero()) {
      break;
    }
  }
  return product;
}

Rational mv_hahn(std::span<const int> m, std::span<const int> x, const FamilyParams& params) {
  check_args(m, x, params, Family::hahn, "mv_hahn");
  const int s = total(m) - m[0];
  const Rational r = r_product(params, 1, m, x);
  if (r.is_zero()) {
    return r;
  }
  return r * hahn_1v(m[0], total(x) - s, params.a_total() + Rational(2 * s), params.b,
                     Rational(params.N - s));
}

Rational mv_krawtchouk(std::span<const int> m, std::span<const int> x, const FamilyParams& params) {
  check_args(m, x, params, Family::krawtchouk, "mv_krawtchouk");
  const int s = total(m) - m[0];
  const Rational r = r_product(params, 1, m, x);
  if (r.is_zero()) {
    return r;
  }
  const Rational A = params.a_total();
  return r * krawtchouk_1v(m[0], total(x) - s, A / (A + Rational(1)), Rational(params.N - s));
}

Rational mv_meixner(std::span<const int> m, std::span<const int> x, const FamilyParams& params) {
  check_args(m, x, params, Family::meixner, "mv_meixner");
  const int s = total(m) - m[0];
  const Rational r = r_product(params, 1, m, x);
  if (r.is_zero()) {
    return r;
  }
  return r * meixner_1v(m[0], total(x) - s, params.a_total(), params.beta + Rational(s));
}

Rational eigenpolynomial(std::span<const int> m, std::span<const int> x, const FamilyParams& params) {
  switch (params.family) {
    case Family::hahn:
      return mv_hahn(m, x, params);
    case Family::krawtchouk:
      return mv_krawtchouk(m, x, params);
    case Family::meixner:
      return mv_meixner(m, x, params);
  }
  return {};
}

LatticeFunction eigenpolynomial_table(std::span<const int> m, const FamilyParams& params,
                                      LatticePtr lattice) {
  const std::vector<int> degrees(m.begin(), m.end());
  return LatticeFunction::tabulate(std::move(lattice), [&](const LatticePoint& x) {
    return eigenpolynomial(degrees, x.span(), params);
  });
}

Rational type_one(std::span<const int> J, int m, std::span<const int> x, const FamilyParams& params) {
  if (J.empty()) {
    throw std::invalid_argument("type_one: J must be nonempty");
  }
  int xJ = 0;
  for (int j : J) {
    if (j < 1 || j > params.dim()) {
      throw std::invalid_argument("type_one: index outside [1, n]");
    }
    xJ += x[static_cast<std::size_t>(j - 1)];
  }
  const Rational aJ = params.a_subset(J);
  const Rational A = params.a_total();
  switch (params.family) {
    case Family::hahn:
      return hahn_1v(m, xJ, aJ, A + params.b - aJ, Rational(params.N));
    case Family::krawtchouk:
      return krawtchouk_1v(m, xJ, aJ / (Rational(1) + A), Rational(params.N));
    case Family::meixner:
      return meixner_1v(m, xJ, aJ / (Rational(1) - A + aJ), params.beta);
  }
  return {};
}

std::vector<std::vector<int>> degree_multi_indices(int n, int max_degree) {
  std::vector<std::vector<int>> out;
  for (const auto& p : enumerate_lattice(n, max_degree)) {
    out.push_back(p.entries());
  }
  return out;
}

LatticeFunction rodrigues_type2(int m, const Rational& alpha, const Rational& gamma, int bound) {
  if (m < 0) {
    throw std::invalid_argument("rodrigues_type2: negative degree");
  }
  LatticePtr lattice = make_lattice(2, bound);
  LatticeFunction p = LatticeFunction::constant(lattice, Rational(1));
  for (int s = m - 1; s >= 0; --s) {
    const Rational a = alpha + Rational(s);
    const Rational g = gamma + Rational(s);
    std::vector<Rational> next(lattice->size());
    for (std::size_t idx = 0; idx < lattice->size(); ++idx) {
      const int u = lattice->point(idx)[0];
      const int v = lattice->point(idx)[1];
      Rational value;
      if (v > 0) {
        value += Rational(v) * (Rational(u) + a) * *p.at(std::vector<int>{u, v - 1});
      }
      if (u > 0) {
        value -= Rational(u) * (Rational(v) + g) * *p.at(std::vector<int>{u - 1, v});
      }
      next[idx] = std::move(value);
    }
    p = LatticeFunction(lattice, std::move(next));
  }
  return p;
}

Rational alternative_hahn_form(int m, int u, int v, const Rational& alpha, const Rational& gamma) {
  const Rational scale = rising_factorial(alpha, m) * rising_factorial(Rational(-u - v), m);
  if (scale.is_zero()) {
    return scale;
  }
  return scale * hahn_1v(m, u, alpha, gamma, Rational(u + v));
}

std::vector<Rational> binomial_majorant(std::span<const int> m, const FamilyParams& params) {
  const int n = params.dim();
  if (static_cast<int>(m.size()) != n) {
    throw std::invalid_argument("binomial_majorant: label length must equal n");
  }
  const int d = total(m);
  const Lattice simplex(n, d);
  std::vector<Rational> values(simplex.size());
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    values[i] = eigenpolynomial(m, simplex.point(i).span(), params);
  }
  // Forward differences one axis at a time: after pass j, entry alpha holds
  // the mixed difference of orders alpha_1..alpha_j evaluated at (0,..,0,alpha_{j+1},..).
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> next(values.size());
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      const LatticePoint alpha = simplex.point(i);
      const int order = alpha[static_cast<std::size_t>(j)];
      LatticePoint probe = alpha;
      Rational acc;
      for (int t = 0; t <= order; ++t) {
        probe[static_cast<std::size_t>(j)] = t;
        const Rational c(binomial(order, t));
        acc += (order - t) % 2 == 0 ? c * values[*simplex.index_of(probe)] : -(c * values[*simplex.index_of(probe)]);
      }
      next[i] = acc;
    }
    values = std::move(next);
  }
  std::vector<Rational> g(static_cast<std::size_t>(d + 1));
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    const auto k = static_cast<std::size_t>(total(simplex.point(i).span()));
    const Rational v = values[i].abs();
    if (v > g[k]) {
      g[k] = v;
    }
  }
  return g;
}

}  // namespace mvop
