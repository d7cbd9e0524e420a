// Acceptance suite: one PASS/FAIL line per criterion, with wall time.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "mvop/measures.hpp"
#include "mvop/operators.hpp"
#include "mvop/polynomials.hpp"
#include "mvop/verify.hpp"

namespace {

using namespace mvop;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      detail = what;
    }
    pass = pass && ok;
  }
  void require(const CheckReport& r) {
    require(r.status == CheckStatus::pass, r.name + " " + r.instance + ": " + r.note);
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0 when the criterion states no limit
  std::function<Outcome()> run;
};

std::vector<Rational> rationals(std::initializer_list<Rational> v) { return v; }

std::string fixed(const Rational& r) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << r.to_double();
  return os.str();
}

Outcome c_normalization() {
  Outcome out;
  std::mt19937_64 rng(20240601);
  for (auto [n, N] : {std::pair{2, 6}, std::pair{3, 4}}) {
    for (int draw = 0; draw < 5; ++draw) {
      for (const auto& p : {random_hahn(rng, n, N), random_krawtchouk(rng, n, N)}) {
        out.require(make_weight_table(p).sum() == Rational(1), "sum != 1 for " + p.describe());
      }
    }
  }
  out.detail = out.pass ? "20 instances sum to 1" : out.detail;
  return out;
}

Outcome eigen_all(const FamilyParams& p, LatticePtr lattice, int m_max, bool include_naive0) {
  Outcome out;
  std::size_t cases = 0;
  for (const auto& op : operator_family(p)) {
    if (op.kind == OperatorKind::naive0 && !include_naive0) {
      continue;
    }
    for (const auto& m : degree_multi_indices(p.dim(), m_max)) {
      const auto r = eigen_check(op, m, lattice).report;
      out.require(r.status == CheckStatus::pass && r.max_defect.is_zero(), "H_" + op.name() + " m=" + r.instance);
      ++cases;
    }
  }
  if (out.pass) {
    out.detail = std::to_string(cases) + " residuals exactly zero";
  }
  return out;
}

Outcome c_hahn_eigen() {
  const auto p = FamilyParams::hahn(rationals({Rational(1, 2), Rational(3, 2), Rational(2)}), Rational(5, 4), 5);
  Outcome out = eigen_all(p, domain_lattice(p), 5, false);
  out.require(degree_multi_indices(3, 5).size() == 56, "expected 56 labels");
  return out;
}

Outcome c_km_eigen() {
  const auto k = FamilyParams::krawtchouk(rationals({Rational(1, 2), Rational(3, 2), Rational(2)}), 5);
  Outcome out = eigen_all(k, domain_lattice(k), 5, false);
  const auto m = FamilyParams::meixner(rationals({Rational(1, 4), Rational(1, 4)}), Rational(2));
  const Outcome mo = eigen_all(m, domain_lattice(m, 12), 4, false);
  out.require(mo.pass, "meixner: " + mo.detail);
  if (out.pass) {
    out.detail = "krawtchouk and meixner residuals exactly zero";
  }
  return out;
}

Outcome c_orthogonality() {
  Outcome out;
  const auto h = FamilyParams::hahn(rationals({Rational(1, 2), Rational(3, 2)}), Rational(5, 4), 6);
  const auto gh = gram_check(h, 6);
  out.require(gh.indices.size() == 28, "hahn: expected 28 polynomials");
  out.require(gh.report);
  const auto k = FamilyParams::krawtchouk(rationals({Rational(1, 2), Rational(3, 2)}), 6);
  const auto gk = gram_check(k, 6);
  out.require(gk.report);

  // The instance leaves a and the degree range open; see the README.
  const auto m = FamilyParams::meixner(rationals({Rational(1, 10), Rational(1, 10)}), Rational(2));
  const auto gm = gram_check(m, 3, 20);
  out.require(gm.report);
  out.require(gm.max_tail_bound.has_value(), "meixner: no tail bound");
  if (gm.max_tail_bound) {
    const Rational ratio = *gm.max_tail_bound / gm.min_diagonal;
    out.require(ratio < Rational(1, 1000), "meixner: bound/min diagonal = " + fixed(ratio));
    if (out.pass) {
      // Reported only: at a=(1/4,1/4) the off-diagonals themselves exceed 1e-3 once |m| >= 2.
      const auto wide = FamilyParams::meixner(rationals({Rational(1, 4), Rational(1, 4)}), Rational(2));
      const auto gw = gram_check(wide, 1, 20);
      const std::string wide_ratio = gw.max_tail_bound ? fixed(*gw.max_tail_bound / gw.min_diagonal) : "n/a";
      out.detail = "hahn, krawtchouk exact; meixner a=(1/10,1/10) |m|<=3 bound/min diag = " + fixed(ratio) +
                   ", max |off| = " + fixed(gm.max_off_diagonal) + " (a=(1/4,1/4) |m|<=1: " + wide_ratio + ")";
    }
  }
  return out;
}

Outcome c_commutativity() {
  Outcome out;
  std::mt19937_64 rng(20240601);
  const auto h = random_hahn(rng, 3, 4);
  const auto k = random_krawtchouk(rng, 3, 4);
  const auto m = random_meixner(rng, 3, Rational(2));
  std::size_t pairs = 0;
  for (const auto& [p, lattice] : {std::pair{h, domain_lattice(h)}, std::pair{k, domain_lattice(k)},
                                   std::pair{m, domain_lattice(m, 8)}}) {
    const auto ops = operator_family(p);
    for (std::size_t i = 0; i < ops.size(); ++i) {
      for (std::size_t j = i + 1; j < ops.size(); ++j) {
        out.require(commutator_check(ops[i], ops[j], lattice));
        ++pairs;
      }
    }
  }
  out.require(domain_lattice(h)->size() == 35, "expected 35 points");
  if (out.pass) {
    out.detail = std::to_string(pairs) + " pairs commute exactly";
  }
  return out;
}

Outcome c_adjointness() {
  Outcome out;
  std::mt19937_64 rng(20240601);
  for (const auto& p : {random_hahn(rng, 2, 5), random_krawtchouk(rng, 2, 5)}) {
    const WeightTable w = make_weight_table(p);
    for (const auto& op : operator_family(p)) {
      out.require(adjointness_check(op, w));
    }
  }
  if (out.pass) {
    out.detail = "all defects zero on the monomial basis";
  }
  return out;
}

Outcome c_shifts() {
  Outcome out;
  std::mt19937_64 rng(20240601);
  const int degree = 5;
  const int box = 8;
  for (int draw = 0; draw < 2; ++draw) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    out.require(single_variable_check(a, b, 7, degree));
    for (auto family : {Family::hahn, Family::krawtchouk}) {
      out.require(type2_shift_check(family, a, b, degree, box));
      out.require(type2_recursion_check(family, a, b, degree, box));
    }
  }
  out.require(g_recursion_check(random_hahn(rng, 3, 5), degree, 5));
  out.require(g_recursion_check(random_krawtchouk(rng, 3, 5), degree, 5));
  if (out.pass) {
    out.detail = "Hahn and Krawtchouk forms exact, degrees <= 5";
  }
  return out;
}

Outcome c_rodrigues() {
  Outcome out;
  std::mt19937_64 rng(20240601);
  for (int draw = 0; draw < 3; ++draw) {
    out.require(rodrigues_check(random_rational(rng), random_rational(rng), 6, 8));
  }
  if (out.pass) {
    out.detail = "3 parameter pairs, m <= 6";
  }
  return out;
}

Outcome c_glue() {
  Outcome out;
  std::mt19937_64 rng(20240601);
  const auto p = random_hahn(rng, 3, 4);
  int cases = 0;
  for (int s = 0; s <= 4; ++s) {
    for (int mi = 0; mi <= s; ++mi) {
      out.require(glue_check(2, mi, s - mi, p));
      ++cases;
    }
  }
  if (out.pass) {
    out.detail = std::to_string(cases) + " label pairs";
  }
  return out;
}

Outcome c_special_values() {
  Outcome out;
  std::mt19937_64 rng(20240601);
  for (auto family : {Family::hahn, Family::krawtchouk}) {
    out.require(special_value_check(family, random_rational(rng), random_rational(rng), 8));
  }
  if (out.pass) {
    out.detail = "m <= 8";
  }
  return out;
}

Outcome c_type_one() {
  Outcome out;
  std::mt19937_64 rng(20240601);
  const auto p = random_hahn(rng, 3, 4);
  const auto lattice = domain_lattice(p);
  const auto subsets = nonempty_subsets(3);
  out.require(subsets.size() == 7, "expected 7 subsets");
  for (const auto& J : subsets) {
    for (int m = 0; m <= 4; ++m) {
      out.require(type_one_check(J, m, p, lattice));
    }
  }
  const auto r = type_one_nonorthogonality_check(p, 1);
  out.require(r);
  if (out.pass) {
    out.detail = "35 residuals zero; " + r.note;
  }
  return out;
}

Outcome c_limits() {
  Outcome out;
  const std::vector<Rational> ts{Rational(100), Rational(10000), Rational(1000000)};
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> small(0, 2);
  const std::vector<Rational> ak{random_rational(rng), random_rational(rng)};
  const std::vector<Rational> am{Rational(1, 4), Rational(1, 4)};
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<int> m{small(rng), small(rng)};
    std::vector<int> x{small(rng), small(rng)};
    m[static_cast<std::size_t>(trial % 2)] += 1;
    out.require(limit_check_krawtchouk(ts, m, x, ak, 6));
    out.require(limit_check_meixner(ts, m, x, am, Rational(2)));
  }
  if (out.pass) {
    out.detail = "3 (m, x) pairs per family";
  }
  return out;
}

Outcome c_completeness() {
  Outcome out;
  std::mt19937_64 rng(20240601);
  const auto p = random_hahn(rng, 2, 4);
  out.require(degree_multi_indices(2, 4).size() == domain_lattice(p)->size(), "count mismatch");
  const auto r = completeness_check(p);
  out.require(r);
  if (out.pass) {
    out.detail = r.note;
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "normalization", 5, c_normalization},
      {2, "hahn eigen equations", 60, c_hahn_eigen},
      {3, "krawtchouk and meixner eigen equations", 60, c_km_eigen},
      {4, "orthogonality", 30, c_orthogonality},
      {5, "commutativity", 30, c_commutativity},
      {6, "self-adjointness", 0, c_adjointness},
      {7, "shift and recursion identities", 0, c_shifts},
      {8, "rodrigues chain", 0, c_rodrigues},
      {9, "glueing", 0, c_glue},
      {10, "special values", 0, c_special_values},
      {11, "type-one family", 0, c_type_one},
      {12, "limits", 0, c_limits},
      {13, "completeness", 0, c_completeness},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
      o.pass = false;
      o.detail = "over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget; " + o.detail;
    }
    failures += o.pass ? 0 : 1;
    std::printf("criterion %2d %s %8.3fs  %s: %s\n", c.id, o.pass ? "PASS" : "FAIL", secs, c.title.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
