#include <doctest.h>

#include <random>

#include "mvop/polynomials.hpp"
#include "mvop/verify.hpp"

using namespace mvop;

namespace {

bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    if (r.status == CheckStatus::fail) {
      INFO(r.name << " " << r.instance << " " << r.note);
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("random parameters are deterministic and small") {
  std::mt19937_64 a(20240601);
  std::mt19937_64 b(20240601);
  const auto p = random_hahn(a, 3, 4);
  const auto q = random_hahn(b, 3, 4);
  CHECK(p.describe() == q.describe());
  for (const auto& ai : p.a) {
    CHECK(ai.sign() > 0);
    CHECK(ai.numerator() <= 20);
    CHECK(ai.denominator() <= 20);
  }
  std::mt19937_64 c(1);
  const auto m = random_meixner(c, 3, Rational(2));
  CHECK(m.a_total() < Rational(1));
}

TEST_CASE("suite passes on the documented instances") {
  CHECK(all_pass(run_suite(FamilyParams::hahn({Rational(1), Rational(2)}, Rational(3), 4), 4, {})));
  std::mt19937_64 rng(31);
  CHECK(all_pass(run_suite(random_krawtchouk(rng, 3, 4), 4, {})));
  SuiteOptions meixner;
  meixner.x_max = 12;
  CHECK(all_pass(run_suite(FamilyParams::meixner({Rational(1, 4), Rational(1, 4)}, Rational(2)), 3, meixner)));
}

TEST_CASE("suite option handling") {
  const auto p = FamilyParams::hahn({Rational(1), Rational(2)}, Rational(3), 4);
  SuiteOptions only;
  only.checks = {"commutators"};
  const auto reports = run_suite(p, 4, only);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].name == "commutators");
  SuiteOptions bad;
  bad.checks = {"nonsense"};
  CHECK_THROWS_AS(run_suite(p, 4, bad), std::invalid_argument);
  CHECK_THROWS_AS(run_suite(p, 5, {}), std::invalid_argument);
  SuiteOptions glue;
  glue.checks = {"glue"};
  const auto skipped = run_suite(p, 4, glue);
  REQUIRE(skipped.size() == 1);
  CHECK(skipped[0].status == CheckStatus::skipped);
}

TEST_CASE("eigen check for m = 0 and |m| = 1") {
  std::mt19937_64 rng(32);
  const auto p = random_hahn(rng, 3, 4);
  const auto lat = domain_lattice(p);
  const std::vector<int> zero{0, 0, 0};
  for (const auto& op : operator_family(p)) {
    CHECK(eigen_check(op, zero, lat).report.max_defect.is_zero());
  }
  const std::vector<int> one{0, 1, 0};
  const auto out = eigen_check(OperatorSpec::total(p), one, lat);
  CHECK(out.report.status == CheckStatus::pass);
  REQUIRE(out.observed.has_value());
  CHECK(*out.observed == p.a_total() + p.b);
}

TEST_CASE("a wrong eigenvalue is detected") {
  const auto p = FamilyParams::hahn({Rational(1), Rational(2)}, Rational(3), 4);
  const auto lat = domain_lattice(p);
  // the radial polynomial has eigenvalue |a| + b = 6, not 1
  const std::vector<int> radial{1, 0};
  const auto table = eigenpolynomial_table(radial, p, lat);
  const auto image = apply_operator(OperatorSpec::total(p), table);
  CHECK_FALSE((image - table * Rational(1)).max_abs().is_zero());
}

TEST_CASE("glue check") {
  std::mt19937_64 rng(33);
  const auto p = random_hahn(rng, 3, 4);
  CHECK(glue_check(2, 0, 0, p).status == CheckStatus::pass);
  CHECK(glue_check(2, 1, 0, p).status == CheckStatus::pass);
  CHECK(glue_check(2, 1, 1, p).status == CheckStatus::pass);
  CHECK_THROWS_AS(glue_check(1, 1, 1, p), std::invalid_argument);
  CHECK_THROWS_AS(glue_check(3, 1, 1, p), std::invalid_argument);
}

TEST_CASE("gram matrices") {
  const auto h = FamilyParams::hahn({Rational(1), Rational(2)}, Rational(3), 4);
  const GramResult g = gram_check(h, 4);
  CHECK(g.indices.size() == 15);
  CHECK(g.max_off_diagonal.is_zero());
  CHECK(g.min_diagonal.sign() > 0);
  CHECK(g.report.status == CheckStatus::pass);

  const auto m = FamilyParams::meixner({Rational(1, 4), Rational(1, 4)}, Rational(2));
  const GramResult gm = gram_check(m, 2, 12);
  REQUIRE(gm.max_tail_bound.has_value());
  CHECK(gm.report.status == CheckStatus::pass);
  CHECK(gm.max_off_diagonal <= *gm.max_tail_bound);
  CHECK_FALSE(gm.max_off_diagonal.is_zero());
}

TEST_CASE("completeness, degeneracy and type one non orthogonality") {
  std::mt19937_64 rng(34);
  const auto p = random_hahn(rng, 2, 4);
  CHECK(completeness_check(p).status == CheckStatus::pass);
  CHECK(degeneracy_check(p, 4, domain_lattice(p)).status == CheckStatus::pass);
  const auto r = type_one_nonorthogonality_check(p, 1);
  CHECK(r.status == CheckStatus::pass);
  CHECK_FALSE(r.note.empty());
}

TEST_CASE("identity checks") {
  CHECK(single_variable_check(Rational(2, 3), Rational(5, 4), 6, 5).status == CheckStatus::pass);
  for (auto family : {Family::hahn, Family::krawtchouk}) {
    CHECK(type2_shift_check(family, Rational(1, 3), Rational(9, 7), 5, 6).status == CheckStatus::pass);
    CHECK(type2_recursion_check(family, Rational(1, 3), Rational(9, 7), 5, 6).status == CheckStatus::pass);
    CHECK(special_value_check(family, Rational(1, 3), Rational(9, 7), 8).status == CheckStatus::pass);
  }
  CHECK(rodrigues_check(Rational(1, 2), Rational(7, 3), 6, 6).status == CheckStatus::pass);
  const auto alt = alternative_form_check(Rational(1, 2), Rational(7, 3), 4, 6);
  CHECK(alt.status == CheckStatus::pass);
  CHECK(alt.note.find("(-1)^m") != std::string::npos);
  std::mt19937_64 rng(35);
  CHECK(g_recursion_check(random_hahn(rng, 3, 5), 3, 5).status == CheckStatus::pass);
  CHECK(g_recursion_check(random_krawtchouk(rng, 3, 5), 3, 5).status == CheckStatus::pass);
}

TEST_CASE("sector orthogonality under the full weight") {
  std::mt19937_64 rng(36);
  const auto r = sector_orthogonality_check(random_hahn(rng, 3, 4), 3);
  CHECK(r.status == CheckStatus::pass);
  CHECK(sector_orthogonality_check(random_hahn(rng, 2, 4), 3).status == CheckStatus::skipped);
}

TEST_CASE("limit transitions") {
  const std::vector<Rational> ts{Rational(100), Rational(10000), Rational(1000000)};
  const std::vector<Rational> a{Rational(1, 3), Rational(1, 2)};
  const std::vector<int> zero{0, 0};
  const std::vector<int> x{1, 2};
  const auto trivial = limit_check_krawtchouk(ts, zero, x, a, 4);
  CHECK(trivial.status == CheckStatus::pass);
  CHECK(trivial.max_defect.is_zero());
  const std::vector<int> m{1, 1};
  CHECK(limit_check_krawtchouk(ts, m, x, a, 4).status == CheckStatus::pass);
  const std::vector<Rational> am{Rational(1, 4), Rational(1, 4)};
  // the degree one radial polynomial is reached exactly at every t
  const std::vector<int> m10{1, 0};
  const auto exact = limit_check_meixner(ts, m10, x, am, Rational(2));
  CHECK(exact.status == CheckStatus::pass);
  CHECK(exact.max_defect.is_zero());
  const auto mx = limit_check_meixner(ts, m, x, am, Rational(2));
  CHECK(mx.status == CheckStatus::pass);
  CHECK_FALSE(mx.max_defect.is_zero());
  CHECK(limit_check_single_variable(ts, 2, 1, Rational(1, 3), 4).status == CheckStatus::pass);
}
