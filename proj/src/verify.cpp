#include "mvop/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mvop/combinatorics.hpp"
#include "mvop/measures.hpp"
#include "mvop/parallel.hpp"
#include "mvop/polynomials.hpp"
#include "mvop/rates.hpp"

namespace mvop {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  Clock::time_point start_ = Clock::now();
};

/// Tracks the largest |defect| seen and finalizes an exact report.
struct Tally {
  Rational max_defect;
  std::size_t failures = 0;
  std::string first_failure;

  void record(const Rational& defect, const std::string& where) {
    const Rational d = defect.abs();
    if (!d.is_zero()) {
      if (failures++ == 0) {
        first_failure = where + ": " + defect.str();
      }
    }
    if (d > max_defect) {
      max_defect = d;
    }
  }

  CheckReport finish(std::string name, std::string instance, const Stopwatch& clock,
                     std::string note = {}) const {
    CheckReport r;
    r.name = std::move(name);
    r.instance = std::move(instance);
    r.max_defect = max_defect;
    r.status = failures == 0 ? CheckStatus::pass : CheckStatus::fail;
    r.seconds = clock.seconds();
    r.note = std::move(note);
    if (failures) {
      r.note += (r.note.empty() ? "" : "; ") + std::to_string(failures) + " nonzero, first at " +
                first_failure;
    }
    return r;
  }
};

CheckReport skipped(std::string name, std::string instance, std::string reason) {
  CheckReport r;
  r.name = std::move(name);
  r.instance = std::move(instance);
  r.status = CheckStatus::skipped;
  r.note = std::move(reason);
  return r;
}

CheckReport failed(std::string name, std::string instance, std::string reason) {
  CheckReport r;
  r.name = std::move(name);
  r.instance = std::move(instance);
  r.status = CheckStatus::fail;
  r.note = std::move(reason);
  return r;
}

std::string join(std::span<const int> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? "," : "") + std::to_string(v[i]);
  }
  return out + ")";
}

int total(std::span<const int> v) {
  int s = 0;
  for (int e : v) {
    s += e;
  }
  return s;
}

/// Merges reports of one group into a single line.
CheckReport sector(int i, CheckReport r) {
  r.name += " i=" + std::to_string(i);
  return r;
}

CheckReport merge(std::string name, std::string instance, const std::vector<CheckReport>& parts) {
  CheckReport r;
  r.name = std::move(name);
  r.instance = std::move(instance);
  r.status = CheckStatus::pass;
  std::size_t failures = 0;
  std::size_t skips = 0;
  for (const auto& p : parts) {
    r.seconds += p.seconds;
    if (p.max_defect > r.max_defect) {
      r.max_defect = p.max_defect;
    }
    if (p.tolerance && (!r.tolerance || *p.tolerance > *r.tolerance)) {
      r.tolerance = p.tolerance;
    }
    if (p.status == CheckStatus::fail) {
      if (failures++ == 0) {
        r.note = p.name + " " + p.instance + (p.note.empty() ? "" : ": " + p.note);
      }
      r.status = CheckStatus::fail;
    } else if (p.status == CheckStatus::skipped) {
      ++skips;
    }
  }
  if (!parts.empty() && skips == parts.size()) {
    r.status = CheckStatus::skipped;
    r.note = parts.front().note;
  } else if (failures > 1) {
    r.note = std::to_string(failures) + " of " + std::to_string(parts.size()) + " failed; first: " + r.note;
  } else if (failures == 0) {
    r.note = std::to_string(parts.size()) + " cases";
  }
  return r;
}

LatticePtr lattice_for(const FamilyParams& params, std::optional<int> x_max) {
  return domain_lattice(params, x_max);
}

}  // namespace

// ---------------------------------------------------------------------------
// Random parameters

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(1, 20);
  const int p = dist(rng);
  const int q = dist(rng);
  return Rational(p, q);
}

FamilyParams random_hahn(std::mt19937_64& rng, int n, int N) {
  std::vector<Rational> a;
  for (int i = 0; i < n; ++i) {
    a.push_back(random_rational(rng));
  }
  const Rational b = random_rational(rng);
  return FamilyParams::hahn(std::move(a), b, N);
}

FamilyParams random_krawtchouk(std::mt19937_64& rng, int n, int N) {
  std::vector<Rational> a;
  for (int i = 0; i < n; ++i) {
    a.push_back(random_rational(rng));
  }
  return FamilyParams::krawtchouk(std::move(a), N);
}

FamilyParams random_meixner(std::mt19937_64& rng, int n, const Rational& beta) {
  std::uniform_int_distribution<int> dist(1, 20);
  for (;;) {
    std::vector<Rational> a;
    Rational sum;
    for (int i = 0; i < n; ++i) {
      const int q = dist(rng);
      const int p = std::uniform_int_distribution<int>(1, std::max(1, q - 1))(rng);
      a.emplace_back(p, q);
      sum += a.back();
    }
    if (sum < Rational(1)) {
      return FamilyParams::meixner(std::move(a), beta);
    }
  }
}

// ---------------------------------------------------------------------------
// Measures

CheckReport normalization_check(const FamilyParams& params, std::optional<int> x_max) {
  Stopwatch clock;
  const WeightTable w = make_weight_table(params, x_max);
  const std::string instance = params.describe();
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    if (w.values[i].sign() <= 0) {
      return failed("normalization", instance, "non-positive weight at " + w.lattice->point(i).str());
    }
  }
  const Rational sum = w.sum();
  if (params.bounded()) {
    Tally t;
    t.record(sum - Rational(1), "sum of weights minus 1");
    return t.finish("normalization", instance, clock);
  }
  if (!w.normalized) {
    return skipped("normalization", instance, "beta is not an integer; weights are unnormalized");
  }
  CheckReport r;
  r.name = "normalization";
  r.instance = instance + " x_max=" + std::to_string(w.lattice->bound());
  r.max_defect = Rational(1) - sum;
  r.tolerance = w.tail_mass_bound;
  r.seconds = clock.seconds();
  const bool below = sum < Rational(1);
  const bool covered = w.tail_mass_bound && sum + *w.tail_mass_bound >= Rational(1);
  r.status = below && covered ? CheckStatus::pass : CheckStatus::fail;
  r.note = "partial sum " + std::to_string(sum.to_double());
  if (!w.tail_mass_bound) {
    r.note += "; no tail bound at this truncation";
  }
  return r;
}

CheckReport weight_ratio_check(const FamilyParams& params, std::optional<int> x_max) {
  Stopwatch clock;
  const WeightTable w = make_weight_table(params, x_max);
  const Lattice& lat = *w.lattice;
  Tally t;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const auto& x = lat.point(i);
    for (int j = 1; j <= lat.dim(); ++j) {
      std::vector<int> up = x.entries();
      up[static_cast<std::size_t>(j - 1)] += 1;
      const auto idx = lat.index_of(up);
      if (!idx) {
        continue;
      }
      t.record(w.values[*idx] / w.values[i] - rate_ratio(params, x, j), x.str() + " j=" + std::to_string(j));
    }
  }
  return t.finish("weight_ratio", params.describe(), clock);
}

CheckReport compatibility_check(const FamilyParams& params, std::optional<int> x_max) {
  Stopwatch clock;
  const LatticePtr lattice = lattice_for(params, x_max);
  const BirthDeathRates rates(params);
  const int n = params.dim();
  Tally t;
  for (const auto& x : lattice->points()) {
    for (int j = 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        std::vector<int> xj = x.entries();
        xj[static_cast<std::size_t>(j - 1)] += 1;
        std::vector<int> xk = x.entries();
        xk[static_cast<std::size_t>(k - 1)] += 1;
        std::vector<int> xjk = xj;
        xjk[static_cast<std::size_t>(k - 1)] += 1;
        if (!lattice->contains(xjk)) {
          continue;
        }
        const Rational via_j = rates.birth(x.span(), j) / rates.death(xj, j) * rates.birth(xj, k) /
                               rates.death(xjk, k);
        const Rational via_k = rates.birth(x.span(), k) / rates.death(xk, k) * rates.birth(xk, j) /
                               rates.death(xjk, j);
        t.record(via_j - via_k, x.str() + " j=" + std::to_string(j) + " k=" + std::to_string(k));
      }
    }
  }
  return t.finish("compatibility", params.describe(), clock);
}

// ---------------------------------------------------------------------------
// Operators

CheckReport zero_mode_check(const FamilyParams& params, LatticePtr lattice) {
  Stopwatch clock;
  Tally t;
  const int n = params.dim();
  auto record = [&](const OperatorSpec& op, const LatticeFunction& f, const std::string& what) {
    const LatticeFunction img = apply_operator(op, f);
    t.record(img.max_abs(), "H_" + op.name() + " " + what);
  };
  const auto one = LatticeFunction::constant(lattice, Rational(1));
  for (const auto& op : operator_family(params)) {
    record(op, one, "1");
  }
  // H_i kills any function of x_1, ..., x_{i-1}; test monomials up to degree 3.
  for (int i = 2; i <= n - 1; ++i) {
    for (const auto& e : monomial_exponents(i - 1, 3)) {
      const auto f = LatticeFunction::tabulate(lattice, [&](const LatticePoint& x) {
        return monomial_value(e, x.span().first(static_cast<std::size_t>(i - 1)));
      });
      record(OperatorSpec::partial(params, i), f, "x^" + join(e));
    }
  }
  return t.finish("zero_modes", params.describe(), clock);
}

CheckReport decomposition_check(const FamilyParams& params, LatticePtr lattice, std::uint64_t seed) {
  Stopwatch clock;
  std::mt19937_64 rng(seed);
  Tally t;
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Rational> values;
    for (std::size_t i = 0; i < lattice->size(); ++i) {
      values.push_back(random_rational(rng));
    }
    const LatticeFunction f(lattice, std::move(values));
    const auto total_img = apply_operator(OperatorSpec::total(params), f);
    const auto split = apply_operator(OperatorSpec::naive0(params), f) +
                       apply_operator(OperatorSpec::partial(params, 1), f);
    t.record((total_img - split).max_abs(), "H_T - H_0 - H_1, trial " + std::to_string(trial));
    for (const auto& op : operator_family(params)) {
      const auto direct = reference::apply_operator(op, f);
      t.record((apply_operator(op, f) - direct).max_abs(), "parallel vs reference H_" + op.name());
    }
  }
  return t.finish("decomposition", params.describe(), clock);
}

CheckReport sign_relation_check(const FamilyParams& params, LatticePtr lattice) {
  Stopwatch clock;
  if (params.family == Family::hahn) {
    return skipped("sign_relation", params.describe(), "Krawtchouk/Meixner only");
  }
  // Meixner and Krawtchouk share a but differ in the other parameters; only
  // the partial operators are compared, and those depend on a alone.
  const FamilyParams kraw = FamilyParams::krawtchouk(params.a, std::max(lattice->bound(), 1));
  FamilyParams meix = params;
  meix.family = Family::meixner;
  meix.beta = Rational(1);
  Tally t;
  const LatticePtr box = make_lattice(params.dim(), lattice->bound());
  for (int i = 1; i < params.dim(); ++i) {
    const auto k = operator_matrix(OperatorSpec::partial(kraw, i), box);
    const auto m = operator_matrix(OperatorSpec::partial(meix, i), box);
    for (std::size_t r = 0; r < k.size(); ++r) {
      std::map<std::size_t, Rational> sum;
      for (const auto& [c, v] : k.row(r)) {
        sum[c] += v;
      }
      for (const auto& [c, v] : m.row(r)) {
        sum[c] += v;
      }
      for (const auto& [c, v] : sum) {
        t.record(v, "H_K" + std::to_string(i) + " + H_M" + std::to_string(i) + " row " + std::to_string(r));
      }
    }
  }
  return t.finish("sign_relation", params.describe(), clock);
}

CheckReport adjointness_check(const OperatorSpec& op, const WeightTable& w) {
  Stopwatch clock;
  const DefectResult d = adjointness_defect(op, w);
  Tally t;
  t.record(d.max_defect, "max pair");
  return t.finish("adjointness H_" + op.name(), op.params.describe(), clock,
                  std::to_string(d.compared) + " pairs");
}

CheckReport commutator_check(const OperatorSpec& op1, const OperatorSpec& op2, LatticePtr lattice) {
  Stopwatch clock;
  const DefectResult d = commutator_defect(op1, op2, lattice);
  Tally t;
  t.record(d.max_defect, "max entry");
  return t.finish("commutator [H_" + op1.name() + ",H_" + op2.name() + "]", op1.params.describe(), clock,
                  std::to_string(d.compared) + " rows");
}

CheckReport degree_invariance_report(const OperatorSpec& op, int degree, LatticePtr lattice) {
  Stopwatch clock;
  CheckReport r;
  r.name = "degree_invariance H_" + op.name();
  r.instance = op.params.describe() + " M=" + std::to_string(degree);
  r.status = degree_invariance_check(op, degree, std::move(lattice)) ? CheckStatus::pass : CheckStatus::fail;
  r.seconds = clock.seconds();
  if (r.status == CheckStatus::fail) {
    r.note = "an image leaves the degree <= M span";
  }
  return r;
}

// ---------------------------------------------------------------------------
// Eigen equations

Rational eigenvalue(const OperatorSpec& op, std::span<const int> m) {
  const FamilyParams& p = op.params;
  const int n = p.dim();
  if (static_cast<int>(m.size()) != n) {
    throw std::invalid_argument("eigenvalue: m must have n entries");
  }
  auto tail_degree = [&](int i) {
    int s = 0;
    for (int k = i; k <= n - 1; ++k) {
      s += m[static_cast<std::size_t>(k)];
    }
    return Rational(s);
  };
  auto partial_value = [&](int i) {
    const Rational Mi = tail_degree(i);
    switch (p.family) {
      case Family::hahn:
        return Mi * (Mi + p.a_from(i) - Rational(1));
      case Family::krawtchouk:
        return Mi * p.a_from(i);
      case Family::meixner:
        return -(Mi * p.a_from(i));
    }
    return Rational();
  };
  const Rational M(total(m));
  Rational total_value;
  switch (p.family) {
    case Family::hahn:
      total_value = M * (M + p.a_total() + p.b - Rational(1));
      break;
    case Family::krawtchouk:
      total_value = M * (p.a_total() + Rational(1));
      break;
    case Family::meixner:
      total_value = M * (Rational(1) - p.a_total());
      break;
  }
  switch (op.kind) {
    case OperatorKind::total:
      return total_value;
    case OperatorKind::naive0:
      return total_value - partial_value(1);
    case OperatorKind::partial:
      return partial_value(op.index);
  }
  return {};
}

EigenOutcome eigen_check(const OperatorSpec& op, std::span<const int> m, LatticePtr lattice) {
  Stopwatch clock;
  const LatticeFunction p = eigenpolynomial_table(m, op.params, lattice);
  const LatticeFunction hp = apply_operator(op, p);
  const Rational e = eigenvalue(op, m);
  EigenOutcome out;
  Tally t;
  std::size_t checked = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!hp.valid(i)) {
      continue;
    }
    ++checked;
    t.record(hp[i] - e * p[i], lattice->point(i).str());
    if (!out.observed && !p[i].is_zero()) {
      out.observed = hp[i] / p[i];
    }
  }
  out.report = t.finish("eigen H_" + op.name() + " m=" + join(m), op.params.describe(), clock,
                        "E=" + e.str() + ", " + std::to_string(checked) + " points");
  if (checked == 0) {
    out.report.status = CheckStatus::fail;
    out.report.note = "no interior point to check";
  }
  return out;
}

CheckReport type_one_check(std::span<const int> J, int m, const FamilyParams& params, LatticePtr lattice) {
  Stopwatch clock;
  const std::vector<int> subset(J.begin(), J.end());
  const auto f = LatticeFunction::tabulate(
      lattice, [&](const LatticePoint& x) { return type_one(subset, m, x.span(), params); });
  const OperatorSpec op = OperatorSpec::total(params);
  std::vector<int> label(static_cast<std::size_t>(params.dim()), 0);
  label[0] = m;
  const Rational e = eigenvalue(op, label);
  const auto hf = apply_operator(op, f);
  Tally t;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (hf.valid(i)) {
      t.record(hf[i] - e * f[i], lattice->point(i).str());
    }
  }
  return t.finish("type_one J=" + join(subset) + " m=" + std::to_string(m), params.describe(), clock,
                  "E=" + e.str());
}

std::vector<std::vector<int>> nonempty_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int j = 0; j < n; ++j) {
      if (mask & (1u << j)) {
        s.push_back(j + 1);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

CheckReport type_one_nonorthogonality_check(const FamilyParams& params, int m) {
  Stopwatch clock;
  const std::string name = "type_one_nonorthogonal m=" + std::to_string(m);
  if (!params.bounded()) {
    return skipped(name, params.describe(), "bounded families only");
  }
  const WeightTable w = make_weight_table(params);
  const auto subsets = nonempty_subsets(params.dim());
  std::vector<LatticeFunction> tables;
  for (const auto& J : subsets) {
    tables.push_back(LatticeFunction::tabulate(
        w.lattice, [&](const LatticePoint& x) { return type_one(J, m, x.span(), params); }));
  }
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      const Rational ip = inner_product(tables[i], tables[j], w);
      if (!ip.is_zero()) {
        CheckReport r;
        r.name = name;
        r.instance = params.describe();
        r.status = CheckStatus::pass;
        r.seconds = clock.seconds();
        r.note = "(p(x_J), p(x_J')) = " + ip.str() + " for J=" + join(subsets[i]) + ", J'=" + join(subsets[j]);
        return r;
      }
    }
  }
  return failed(name, params.describe(), "every same-degree pair is orthogonal on this instance");
}

CheckReport glue_check(int i, int m_i, int m_prev, const FamilyParams& params) {
  Stopwatch clock;
  const std::string name = "glue i=" + std::to_string(i) + " (" + std::to_string(m_i) + "," +
                           std::to_string(m_prev) + ")";
  if (params.family != Family::hahn) {
    return skipped(name, params.describe(), "Hahn only");
  }
  if (i < 2 || i > params.dim() - 1) {
    throw std::invalid_argument("glue_check: i must lie in [2, n-1]");
  }
  const LatticePtr lattice = domain_lattice(params);
  const auto f = LatticeFunction::tabulate(lattice, [&](const LatticePoint& x) {
    Type2Args upper{i, m_i, x[static_cast<std::size_t>(i - 1)], tail_sum(x.span(), i), params.a_at(i),
                    params.a_tail(i)};
    Type2Args lower{i - 1,
                    m_prev,
                    x[static_cast<std::size_t>(i - 2)],
                    tail_sum(x.span(), i - 1) - m_i,
                    params.a_at(i - 1),
                    params.a_tail(i - 1) + Rational(2 * m_i)};
    return type2_hahn(upper) * type2_hahn(lower);
  });
  const OperatorSpec op = OperatorSpec::partial(params, i - 1);
  const Rational s(m_i + m_prev);
  const Rational e = s * (s + params.a_from(i - 1) - Rational(1));
  const auto hf = apply_operator(op, f);
  Tally t;
  for (std::size_t k = 0; k < f.size(); ++k) {
    t.record(hf[k] - e * f[k], lattice->point(k).str());
  }
  return t.finish(name, params.describe(), clock, "E=" + e.str());
}

// ---------------------------------------------------------------------------
// Polynomial identities

CheckReport single_variable_check(const Rational& a, const Rational& b, int N, int max_degree) {
  Stopwatch clock;
  Tally t;
  const Rational Nq(N);
  const Rational a1 = a + Rational(1);
  const Rational b1 = b + Rational(1);
  const Rational N1(N - 1);
  for (int m = 0; m <= std::min(max_degree, N); ++m) {
    const Rational e = Rational(m) * (Rational(m) + a + b - Rational(1));
    for (int x = 0; x <= N; ++x) {
      const std::string at = "m=" + std::to_string(m) + " x=" + std::to_string(x);
      const Rational h = hahn_1v(m, x, a, b, Nq);
      // Difference equation.
      const Rational B = Rational(N - x) * (Rational(x) + a);
      const Rational D = Rational(x) * (Rational(N - x) + b);
      Rational lhs;
      if (!B.is_zero()) {
        lhs += B * (h - hahn_1v(m, x + 1, a, b, Nq));
      }
      if (!D.is_zero()) {
        lhs += D * (h - hahn_1v(m, x - 1, a, b, Nq));
      }
      t.record(lhs - e * h, "eigen " + at);
      // Forward shift: H_m(x) - H_m(x+1) = m(m+a+b-1)/(aN) H_{m-1}(x; a+1, b+1, N-1).
      if (m >= 1 && x < N) {
        const Rational rhs = e / (a * Nq) * hahn_1v(m - 1, x, a1, b1, N1);
        t.record(h - hahn_1v(m, x + 1, a, b, Nq) - rhs, "forward " + at);
      }
      // Backward shift.
      if (m + 1 <= N) {
        Rational back;
        if (x < N) {
          back += B * hahn_1v(m, x, a1, b1, N1);
        }
        if (x > 0) {
          back -= D * hahn_1v(m, x - 1, a1, b1, N1);
        }
        t.record(back - a * Nq * hahn_1v(m + 1, x, a, b, Nq), "backward " + at);
      }
    }
  }
  return t.finish("single_variable", "a=" + a.str() + " b=" + b.str() + " N=" + std::to_string(N), clock);
}

namespace {

using Type2Fn = Rational (*)(const Type2Args&);

Rational t2(Type2Fn fn, int m, int u, int v, const Rational& alpha, const Rational& gamma) {
  return fn(Type2Args{1, m, u, v, alpha, gamma});
}

std::string pair_instance(const Rational& alpha, const Rational& gamma) {
  return "alpha=" + alpha.str() + " gamma=" + gamma.str();
}

}  // namespace

CheckReport type2_shift_check(Family family, const Rational& alpha, const Rational& gamma, int max_degree,
                              int bound) {
  Stopwatch clock;
  Tally t;
  const bool hahn = family == Family::hahn;
  const Type2Fn fn = hahn ? type2_hahn : type2_km;
  const Rational a1 = alpha + Rational(1);
  const Rational g1 = gamma + Rational(1);
  for (int m = 0; m <= max_degree; ++m) {
    for (const auto& p : enumerate_lattice(2, bound)) {
      const int u = p[0];
      const int v = p[1];
      const std::string at = "m=" + std::to_string(m) + " " + p.str();
      const Rational U(u);
      const Rational V(v);
      if (m >= 1) {
        const Rational diff = t2(fn, m, u, v + 1, alpha, gamma) - t2(fn, m, u + 1, v, alpha, gamma);
        const Rational rhs =
            hahn ? Rational(m) * (Rational(m) + alpha + gamma - Rational(1)) * t2(fn, m - 1, u, v, a1, g1)
                 : -(Rational(m) * (alpha + gamma) / alpha) * t2(fn, m - 1, u, v, alpha, gamma);
        t.record(diff - rhs, "forward " + at);
      }
      Rational back;
      Rational rhs;
      if (hahn) {
        back = V * (U + alpha) * t2(fn, m, u, v - 1, a1, g1) - U * (V + gamma) * t2(fn, m, u - 1, v, a1, g1);
        rhs = t2(fn, m + 1, u, v, alpha, gamma);
      } else {
        back = V * alpha * t2(fn, m, u, v - 1, alpha, gamma) - U * gamma * t2(fn, m, u - 1, v, alpha, gamma);
        rhs = -(alpha * t2(fn, m + 1, u, v, alpha, gamma));
      }
      t.record(back - rhs, "backward " + at);
    }
  }
  return t.finish(hahn ? "type2_shifts" : "type2_shifts_K", pair_instance(alpha, gamma), clock);
}

CheckReport type2_recursion_check(Family family, const Rational& alpha, const Rational& gamma,
                                  int max_degree, int bound) {
  Stopwatch clock;
  Tally t;
  const bool hahn = family == Family::hahn;
  const Type2Fn fn = hahn ? type2_hahn : type2_km;
  for (int m = 0; m <= max_degree; ++m) {
    for (const auto& p : enumerate_lattice(2, bound)) {
      const int u = p[0];
      const int v = p[1];
      const Rational U(u);
      const Rational V(v);
      const std::string at = "m=" + std::to_string(m) + " " + p.str();
      const Rational here = t2(fn, m, u, v, alpha, gamma);
      const Rational up_u = t2(fn, m, u + 1, v, alpha, gamma);
      const Rational up_v = t2(fn, m, u, v + 1, alpha, gamma);
      if (hahn) {
        t.record((U + alpha) * up_u + (V + gamma) * up_v - (U + V + alpha + gamma + Rational(m)) * here,
                 "forward " + at);
      } else {
        t.record(alpha * up_u + gamma * up_v - (alpha + gamma) * here, "forward " + at);
      }
      const Rational back = U * t2(fn, m, u - 1, v, alpha, gamma) + V * t2(fn, m, u, v - 1, alpha, gamma);
      t.record(back - (U + V - Rational(m)) * here, "backward " + at);
    }
  }
  return t.finish(hahn ? "type2_recursions" : "type2_recursions_K", pair_instance(alpha, gamma), clock);
}

CheckReport g_recursion_check(const FamilyParams& params, int max_degree, int bound) {
  Stopwatch clock;
  const int n = params.dim();
  const bool hahn = params.family == Family::hahn;
  Tally t;
  // Labels (0, m_1, ..., m_{n-1}); m_0 does not enter R^{(i)}.
  std::vector<std::vector<int>> labels;
  for (const auto& tail : enumerate_lattice(n - 1, max_degree)) {
    std::vector<int> m{0};
    m.insert(m.end(), tail.begin(), tail.end());
    labels.push_back(std::move(m));
  }
  const auto points = enumerate_lattice(n, bound);
  std::vector<Tally> per_label(labels.size());
  parallel_for(labels.size(), [&](std::size_t li) {
    const auto& m = labels[li];
    for (int i = 1; i <= n - 1; ++i) {
      int mi_sum = 0;
      for (int k = i; k <= n - 1; ++k) {
        mi_sum += m[static_cast<std::size_t>(k)];
      }
      for (const auto& p : points) {
        std::vector<int> x = p.entries();
        const Rational here = r_product(params, i, m, x);
        Rational fwd;
        Rational fwd_coeff;
        Rational bwd;
        Rational x_sum;
        for (int k = i; k <= n; ++k) {
          auto& xk = x[static_cast<std::size_t>(k - 1)];
          const Rational X(xk);
          const Rational& ak = params.a_at(k);
          xk += 1;
          const Rational up = r_product(params, i, m, x);
          xk -= 2;
          const Rational down = X.is_zero() ? Rational() : r_product(params, i, m, x);
          xk += 1;
          if (hahn) {
            fwd += (X + ak) * up;
            fwd_coeff += X + ak;
          } else {
            fwd += ak * up;
            fwd_coeff += ak;
          }
          bwd += X * down;
          x_sum += X;
        }
        if (hahn) {
          fwd_coeff += Rational(mi_sum);
        }
        const std::string at = "i=" + std::to_string(i) + " m=" + join(m) + " x=" + p.str();
        per_label[li].record(fwd - fwd_coeff * here, "forward " + at);
        per_label[li].record(bwd - (x_sum - Rational(mi_sum)) * here, "backward " + at);
      }
    }
  });
  for (const auto& pl : per_label) {
    if (pl.max_defect > t.max_defect) {
      t.max_defect = pl.max_defect;
    }
    if (pl.failures && t.failures == 0) {
      t.first_failure = pl.first_failure;
    }
    t.failures += pl.failures;
  }
  return t.finish(hahn ? "g_recursions" : "g_recursions_K",
                  params.describe() + " |x|<=" + std::to_string(bound), clock);
}

CheckReport rodrigues_check(const Rational& alpha, const Rational& gamma, int max_degree, int bound) {
  Stopwatch clock;
  Tally t;
  for (int m = 0; m <= max_degree; ++m) {
    const LatticeFunction table = rodrigues_type2(m, alpha, gamma, bound);
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto& p = table.lattice().point(i);
      t.record(table[i] - t2(type2_hahn, m, p[0], p[1], alpha, gamma), "m=" + std::to_string(m) + " " + p.str());
    }
  }
  return t.finish("rodrigues", pair_instance(alpha, gamma), clock);
}

CheckReport special_value_check(Family family, const Rational& alpha, const Rational& gamma, int max_degree) {
  Stopwatch clock;
  Tally t;
  for (int m = 0; m <= max_degree; ++m) {
    const Rational sign = m % 2 == 0 ? Rational(1) : Rational(-1);
    const Rational fact(factorial(m));
    if (family == Family::hahn) {
      t.record(t2(type2_hahn, m, m, 0, alpha, gamma) - sign * fact * rising_factorial(gamma, m),
               "m=" + std::to_string(m));
    } else {
      t.record(t2(type2_km, m, 0, m, alpha, gamma) - sign * fact, "m=" + std::to_string(m));
    }
  }
  return t.finish(family == Family::hahn ? "special_values" : "special_values_K", pair_instance(alpha, gamma),
                  clock);
}

CheckReport alternative_form_check(const Rational& alpha, const Rational& gamma, int max_degree, int bound) {
  Stopwatch clock;
  Tally t;
  std::string constants;
  bool sign_convention = true;
  for (int m = 0; m <= max_degree; ++m) {
    std::optional<Rational> c;
    for (const auto& p : enumerate_lattice(2, bound)) {
      const Rational lhs = t2(type2_hahn, m, p[0], p[1], alpha, gamma);
      const Rational rhs = alternative_hahn_form(m, p[0], p[1], alpha, gamma);
      if (!c && !rhs.is_zero()) {
        c = lhs / rhs;
      }
      t.record(c ? lhs - *c * rhs : lhs, "m=" + std::to_string(m) + " " + p.str());
    }
    constants += (m ? ", " : "") + std::to_string(m) + ":" + (c ? c->str() : "none");
    const Rational expected = m % 2 == 0 ? Rational(1) : Rational(-1);
    sign_convention = sign_convention && c && *c == expected;
  }
  return t.finish("alternative_form", pair_instance(alpha, gamma), clock,
                  "constants {" + constants + "}" + (sign_convention ? " = (-1)^m" : " differ from (-1)^m"));
}

// ---------------------------------------------------------------------------
// Gram matrices

GramResult gram_check(const FamilyParams& params, int m_max, std::optional<int> x_max) {
  Stopwatch clock;
  GramResult out;
  const WeightTable w = make_weight_table(params, x_max);
  out.indices = degree_multi_indices(params.dim(), m_max);
  const std::size_t k = out.indices.size();
  std::vector<LatticeFunction> tables;
  for (const auto& m : out.indices) {
    tables.push_back(eigenpolynomial_table(m, params, w.lattice));
  }
  out.matrix.assign(k, std::vector<Rational>(k));
  parallel_for(k, [&](std::size_t i) {
    for (std::size_t j = i; j < k; ++j) {
      out.matrix[i][j] = inner_product(tables[i], tables[j], w);
    }
  });
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      out.matrix[i][j] = out.matrix[j][i];
    }
  }

  bool bounds_ok = true;
  if (!params.bounded()) {
    std::vector<std::vector<Rational>> majorants;
    for (const auto& m : out.indices) {
      majorants.push_back(binomial_majorant(m, params));
    }
    out.tail_bounds.assign(k, std::vector<Rational>(k));
    std::vector<std::optional<Rational>> bounds(k * k);
    parallel_for(k, [&](std::size_t i) {
      for (std::size_t j = i; j < k; ++j) {
        bounds[i * k + j] = meixner_tail_bound(params, w.lattice->bound(), majorants[i], majorants[j]);
      }
    });
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        const auto& tail = bounds[i * k + j];
        if (!tail) {
          bounds_ok = false;
          continue;
        }
        out.tail_bounds[i][j] = out.tail_bounds[j][i] = *tail;
        if (!out.max_tail_bound || *tail > *out.max_tail_bound) {
          out.max_tail_bound = *tail;
        }
      }
    }
  }

  CheckReport& r = out.report;
  r.name = "gram";
  r.instance = params.describe() + " m_max=" + std::to_string(m_max) +
               (params.bounded() ? "" : " x_max=" + std::to_string(w.lattice->bound()));
  std::size_t violations = 0;
  std::string first;
  for (std::size_t i = 0; i < k; ++i) {
    const Rational& d = out.matrix[i][i];
    if (i == 0 || d < out.min_diagonal) {
      out.min_diagonal = d;
    }
    if (d.sign() <= 0) {
      if (violations++ == 0) {
        first = "diagonal " + join(out.indices[i]) + " = " + d.str();
      }
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      const Rational off = out.matrix[i][j].abs();
      if (off > out.max_off_diagonal) {
        out.max_off_diagonal = off;
      }
      const bool ok = params.bounded() ? off.is_zero() : bounds_ok && off <= out.tail_bounds[i][j];
      if (!ok && violations++ == 0) {
        first = "(" + join(out.indices[i]) + "," + join(out.indices[j]) + ") = " + out.matrix[i][j].str();
      }
    }
  }
  r.max_defect = out.max_off_diagonal;
  r.tolerance = out.max_tail_bound;
  r.status = violations == 0 && bounds_ok ? CheckStatus::pass : CheckStatus::fail;
  r.note = std::to_string(k) + " polynomials, min diagonal " + out.min_diagonal.str();
  if (!bounds_ok) {
    r.note += "; tail bound unavailable at this truncation";
  }
  if (violations) {
    r.note += "; " + std::to_string(violations) + " violations, first " + first;
  }
  r.seconds = clock.seconds();
  return out;
}

CheckReport completeness_check(const FamilyParams& params) {
  Stopwatch clock;
  if (!params.bounded()) {
    return skipped("completeness", params.describe(), "bounded families only");
  }
  const std::size_t count = degree_multi_indices(params.dim(), params.N).size();
  const std::size_t points = lattice_size(params.dim(), params.N);
  const GramResult g = gram_check(params, params.N);
  const std::size_t r = rank(g.matrix);
  CheckReport out;
  out.name = "completeness";
  out.instance = params.describe();
  out.status = count == points && r == count ? CheckStatus::pass : CheckStatus::fail;
  out.note = std::to_string(count) + " labels, " + std::to_string(points) + " points, Gram rank " +
             std::to_string(r);
  out.seconds = clock.seconds();
  return out;
}

CheckReport degeneracy_check(const FamilyParams& params, int m_max, LatticePtr lattice) {
  Stopwatch clock;
  const OperatorSpec op = OperatorSpec::total(params);
  std::map<int, std::optional<Rational>> by_degree;
  Tally t;
  for (const auto& m : degree_multi_indices(params.dim(), m_max)) {
    const EigenOutcome e = eigen_check(op, m, lattice);
    const int d = total(m);
    if (!e.observed) {
      t.record(Rational(1), "no nonzero value for m=" + join(m));
      continue;
    }
    t.record(e.report.max_defect, "residual m=" + join(m));
    auto& slot = by_degree[d];
    if (!slot) {
      slot = e.observed;
    }
    t.record(*e.observed - *slot, "eigenvalue spread at |m|=" + std::to_string(d) + " m=" + join(m));
  }
  return t.finish("degeneracy", params.describe(), clock, std::to_string(by_degree.size()) + " total degrees");
}

CheckReport sector_orthogonality_check(const FamilyParams& params, int max_degree) {
  Stopwatch clock;
  if (!params.bounded()) {
    return skipped("sector_orthogonality", params.describe(), "bounded families only");
  }
  if (params.dim() < 3) {
    return skipped("sector_orthogonality", params.describe(), "needs n >= 3");
  }
  const WeightTable w = make_weight_table(params);
  const Type2Fn fn = params.family == Family::hahn ? type2_hahn : type2_km;
  Tally t;
  for (int m = 1; m <= std::min(max_degree, params.N); ++m) {
    std::vector<LatticeFunction> sectors;
    for (int i = 1; i <= params.dim() - 1; ++i) {
      sectors.push_back(LatticeFunction::tabulate(w.lattice, [&](const LatticePoint& x) {
        return t2(fn, m, x[static_cast<std::size_t>(i - 1)], tail_sum(x.span(), i), params.a_at(i),
                  params.a_tail(i));
      }));
    }
    for (std::size_t i = 0; i < sectors.size(); ++i) {
      for (std::size_t j = i + 1; j < sectors.size(); ++j) {
        t.record(inner_product(sectors[i], sectors[j], w),
                 "m=" + std::to_string(m) + " sectors " + std::to_string(i + 1) + "," + std::to_string(j + 1));
      }
    }
  }
  return t.finish("sector_orthogonality", params.describe(), clock, "full weight W");
}

// ---------------------------------------------------------------------------
// Limits

Rational rescaled_hahn(std::span<const int> m, std::span<const int> x, std::span<const Rational> a,
                       const Rational& b, const Rational& N) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(m.size()) != n || static_cast<int>(x.size()) != n) {
    throw std::invalid_argument("rescaled_hahn: m, x and a must have n entries");
  }
  auto a_tail = [&](int j) {
    Rational s;
    for (int k = j + 1; k <= n; ++k) {
      s += a[static_cast<std::size_t>(k - 1)];
    }
    return s;
  };
  Rational value(1);
  int shift_total = 0;
  for (int j = 1; j <= n - 1; ++j) {
    int shift = 0;
    for (int k = j + 1; k <= n - 1; ++k) {
      shift += m[static_cast<std::size_t>(k)];
    }
    const int mj = m[static_cast<std::size_t>(j)];
    shift_total += mj;
    const Rational& aj = a[static_cast<std::size_t>(j - 1)];
    Type2Args args{j, mj, x[static_cast<std::size_t>(j - 1)], tail_sum(x, j) - shift, aj,
                   a_tail(j) + Rational(2 * shift)};
    const Rational sign = mj % 2 == 0 ? Rational(1) : Rational(-1);
    value *= sign * type2_hahn(args) / rising_factorial(aj, mj);
  }
  const Rational A = a_tail(0);
  return value * hahn_1v(m[0], total(x) - shift_total, A + Rational(2 * shift_total), b, N - Rational(shift_total));
}

namespace {

CheckReport convergence_report(std::string name, std::string instance, const std::vector<Rational>& t_values,
                               const std::vector<Rational>& deviations, const Stopwatch& clock) {
  CheckReport r;
  r.name = std::move(name);
  r.instance = std::move(instance);
  r.status = CheckStatus::pass;
  r.max_defect = deviations.back();
  std::ostringstream note;
  note << "deviations";
  for (std::size_t k = 0; k < deviations.size(); ++k) {
    note << (k ? ", " : " ") << deviations[k].to_double();
  }
  for (std::size_t k = 0; k + 1 < deviations.size(); ++k) {
    const Rational allowed = deviations[k] * Rational(2) * t_values[k] / t_values[k + 1];
    if (deviations[k + 1] > allowed) {
      r.status = CheckStatus::fail;
      note << "; step " << k << " shrinks too slowly";
    }
  }
  r.note = note.str();
  r.seconds = clock.seconds();
  return r;
}

void require_increasing(const std::vector<Rational>& t_values) {
  if (t_values.size() < 2) {
    throw std::invalid_argument("limit check: at least two t values required");
  }
  for (std::size_t k = 0; k < t_values.size(); ++k) {
    if (t_values[k] <= Rational(1) || (k && t_values[k] <= t_values[k - 1])) {
      throw std::invalid_argument("limit check: t values must increase and exceed 1");
    }
  }
}

}  // namespace

CheckReport limit_check_krawtchouk(const std::vector<Rational>& t_values, std::span<const int> m,
                                   std::span<const int> x, const std::vector<Rational>& a, int N) {
  Stopwatch clock;
  require_increasing(t_values);
  const FamilyParams kp = FamilyParams::krawtchouk(a, N);
  const std::string instance = kp.describe() + " m=" + join(m) + " x=" + join(x);
  try {
    const Rational target = mv_krawtchouk(m, x, kp);
    std::vector<Rational> dev;
    for (const auto& t : t_values) {
      std::vector<Rational> scaled;
      for (const auto& ai : a) {
        scaled.push_back(ai * t);
      }
      dev.push_back((rescaled_hahn(m, x, scaled, t, Rational(N)) - target).abs());
    }
    return convergence_report("limit_krawtchouk", instance, t_values, dev, clock);
  } catch (const std::domain_error& e) {
    return failed("limit_krawtchouk", instance, e.what());
  }
}

CheckReport limit_check_meixner(const std::vector<Rational>& t_values, std::span<const int> m,
                                std::span<const int> x, const std::vector<Rational>& a, const Rational& beta) {
  Stopwatch clock;
  require_increasing(t_values);
  const FamilyParams mp = FamilyParams::meixner(a, beta);
  const std::string instance = mp.describe() + " m=" + join(m) + " x=" + join(x);
  try {
    const Rational target = mv_meixner(m, x, mp);
    std::vector<Rational> dev;
    for (const auto& t : t_values) {
      std::vector<Rational> scaled;
      for (const auto& ai : a) {
        scaled.push_back(-(ai * t));
      }
      dev.push_back((rescaled_hahn(m, x, scaled, t, -beta) - target).abs());
    }
    return convergence_report("limit_meixner", instance, t_values, dev, clock);
  } catch (const std::domain_error& e) {
    return failed("limit_meixner", instance, e.what());
  }
}

CheckReport limit_check_single_variable(const std::vector<Rational>& t_values, int m, int x, const Rational& p,
                                        int N) {
  Stopwatch clock;
  require_increasing(t_values);
  const std::string instance =
      "p=" + p.str() + " N=" + std::to_string(N) + " m=" + std::to_string(m) + " x=" + std::to_string(x);
  const Rational target = krawtchouk_1v(m, x, p, Rational(N));
  std::vector<Rational> dev;
  for (const auto& t : t_values) {
    dev.push_back((hahn_1v(m, x, p * t, (Rational(1) - p) * t, Rational(N)) - target).abs());
  }
  return convergence_report("limit_single_variable", instance, t_values, dev, clock);
}

// ---------------------------------------------------------------------------
// Suite

const std::vector<std::string>& suite_check_names() {
  static const std::vector<std::string> names{
      "normalization", "weight_ratio",   "compatibility",  "adjointness",  "commutators",
      "zero_modes",    "decomposition",  "sign_relation",  "degree_invariance", "eigen",
      "degeneracy",    "type_one",       "shifts",         "recursions",   "g_recursions",
      "rodrigues",     "special_values", "alternative_form", "glue",       "gram",
      "completeness",  "sector_orthogonality", "limits"};
  return names;
}

std::vector<CheckReport> run_suite(const FamilyParams& params, int m_max, const SuiteOptions& options) {
  params.validate();
  for (const auto& c : options.checks) {
    const auto& names = suite_check_names();
    if (std::find(names.begin(), names.end(), c) == names.end()) {
      throw std::invalid_argument("unknown check '" + c + "'");
    }
  }
  if (params.bounded() && m_max > params.N) {
    throw std::invalid_argument("m_max must not exceed N");
  }
  auto wanted = [&](const std::string& name) { return options.checks.empty() || options.checks.count(name); };

  const LatticePtr lattice = domain_lattice(params, options.x_max);
  const std::string instance = params.describe() + (params.bounded() ? "" : " x_max=" + std::to_string(lattice->bound()));
  const Family family = params.family;
  const int n = params.dim();
  std::mt19937_64 rng(options.seed);
  std::vector<CheckReport> out;

  if (wanted("normalization")) {
    out.push_back(normalization_check(params, options.x_max));
  }
  if (wanted("weight_ratio")) {
    out.push_back(weight_ratio_check(params, options.x_max));
  }
  if (wanted("compatibility")) {
    out.push_back(compatibility_check(params, options.x_max));
  }
  const auto ops = operator_family(params);
  if (wanted("adjointness")) {
    const WeightTable w = make_weight_table(params, options.x_max);
    for (const auto& op : ops) {
      out.push_back(adjointness_check(op, w));
    }
  }
  if (wanted("commutators")) {
    std::vector<CheckReport> parts;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      for (std::size_t j = i + 1; j < ops.size(); ++j) {
        parts.push_back(commutator_check(ops[i], ops[j], lattice));
      }
    }
    out.push_back(merge("commutators", instance, parts));
  }
  if (wanted("zero_modes")) {
    out.push_back(zero_mode_check(params, lattice));
  }
  if (wanted("decomposition")) {
    out.push_back(decomposition_check(params, lattice, options.seed));
  }
  if (wanted("sign_relation") && family != Family::hahn) {
    out.push_back(sign_relation_check(params, lattice));
  }
  if (wanted("degree_invariance")) {
    const int top = params.bounded() ? params.N : m_max;
    for (const auto& op : ops) {
      std::vector<CheckReport> parts;
      for (int M = 0; M <= top; ++M) {
        parts.push_back(degree_invariance_report(op, M, lattice));
      }
      out.push_back(merge("degree_invariance H_" + op.name(), instance + " M<=" + std::to_string(top), parts));
    }
  }
  const auto labels = degree_multi_indices(n, m_max);
  if (wanted("eigen")) {
    for (const auto& op : ops) {
      std::vector<CheckReport> parts(labels.size());
      for (std::size_t k = 0; k < labels.size(); ++k) {
        parts[k] = eigen_check(op, labels[k], lattice).report;
      }
      out.push_back(merge("eigen H_" + op.name(), instance + " |m|<=" + std::to_string(m_max), parts));
    }
  }
  if (wanted("degeneracy")) {
    out.push_back(degeneracy_check(params, m_max, lattice));
  }
  if (wanted("type_one")) {
    for (const auto& J : nonempty_subsets(n)) {
      std::vector<CheckReport> parts;
      for (int m = 0; m <= m_max; ++m) {
        parts.push_back(type_one_check(J, m, params, lattice));
      }
      out.push_back(merge("type_one J=" + join(J), instance + " m<=" + std::to_string(m_max), parts));
    }
    if (params.bounded() && m_max >= 1) {
      out.push_back(type_one_nonorthogonality_check(params, 1));
    }
  }
  // Type-two identities use the sector parameters (a_i, a_{>i}).
  const Family poly_family = family == Family::hahn ? Family::hahn : Family::krawtchouk;
  if (wanted("shifts")) {
    if (family == Family::hahn) {
      out.push_back(single_variable_check(params.a_at(1), params.b, params.N, options.shift_degree));
    }
    for (int i = 1; i <= n - 1; ++i) {
      out.push_back(sector(i, type2_shift_check(poly_family, params.a_at(i), params.a_tail(i),
                                                options.shift_degree, options.box_bound)));
    }
  }
  if (wanted("recursions")) {
    for (int i = 1; i <= n - 1; ++i) {
      out.push_back(sector(i, type2_recursion_check(poly_family, params.a_at(i), params.a_tail(i),
                                                    options.shift_degree, options.box_bound)));
    }
  }
  if (wanted("g_recursions")) {
    out.push_back(g_recursion_check(params, options.shift_degree, std::min(options.box_bound, 6)));
  }
  if (wanted("rodrigues") && family == Family::hahn) {
    for (int i = 1; i <= n - 1; ++i) {
      out.push_back(sector(i, rodrigues_check(params.a_at(i), params.a_tail(i), 6, options.box_bound)));
    }
  }
  if (wanted("special_values")) {
    for (int i = 1; i <= n - 1; ++i) {
      out.push_back(sector(i, special_value_check(poly_family, params.a_at(i), params.a_tail(i), 8)));
    }
  }
  if (wanted("alternative_form") && family == Family::hahn) {
    out.push_back(alternative_form_check(params.a_at(1), params.a_tail(1), options.shift_degree, options.box_bound));
  }
  if (wanted("glue") && family == Family::hahn && n >= 3) {
    std::vector<CheckReport> parts;
    for (int i = 2; i <= n - 1; ++i) {
      for (int s = 0; s <= std::min(m_max, params.N); ++s) {
        for (int mi = 0; mi <= s; ++mi) {
          parts.push_back(glue_check(i, mi, s - mi, params));
        }
      }
    }
    out.push_back(merge("glue", instance, parts));
  }
  if (wanted("gram")) {
    out.push_back(gram_check(params, m_max, options.x_max).report);
  }
  if (wanted("completeness") && params.bounded()) {
    out.push_back(completeness_check(params));
  }
  if (wanted("sector_orthogonality") && params.bounded() && n >= 3) {
    out.push_back(sector_orthogonality_check(params, std::min(m_max, 3)));
  }
  if (wanted("limits")) {
    const std::vector<Rational> ts{Rational(100), Rational(10000), Rational(1000000)};
    std::vector<CheckReport> parts;
    std::uniform_int_distribution<int> small(0, 3);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<int> m(static_cast<std::size_t>(n));
      std::vector<int> x(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        m[static_cast<std::size_t>(j)] = small(rng) % 2 + (j == trial % n ? 1 : 0);
        x[static_cast<std::size_t>(j)] = small(rng);
      }
      if (params.bounded()) {
        const int cap = params.N;
        while (total(m) > cap) {
          --*std::max_element(m.begin(), m.end());
        }
        while (total(x) > cap) {
          --*std::max_element(x.begin(), x.end());
        }
        parts.push_back(limit_check_krawtchouk(ts, m, x, params.a, params.N));
        const Rational A = params.a_total();
        parts.push_back(limit_check_single_variable(ts, std::min(m[0] + 1, cap), x[0], A / (A + Rational(1)), cap));
      } else {
        parts.push_back(limit_check_meixner(ts, m, x, params.a, params.beta));
      }
    }
    out.push_back(merge("limits", instance, parts));
  }
  for (const auto& name : options.checks) {
    const bool ran = std::any_of(out.begin(), out.end(), [&](const CheckReport& r) {
      if (name == "shifts") {
        return r.name == "single_variable" || r.name.starts_with("type2_shifts");
      }
      if (name == "recursions") {
        return r.name.starts_with("type2_recursions");
      }
      return r.name == name || r.name.starts_with(name + " ") || r.name.starts_with(name + "_");
    });
    if (!ran) {
      out.push_back(skipped(name, instance, "not applicable to this family or dimension"));
    }
  }
  return out;
}

}  // namespace mvop
