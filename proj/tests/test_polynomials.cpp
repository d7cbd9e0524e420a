#include <doctest.h>

#include <random>

#include "mvop/combinatorics.hpp"
#include "mvop/operators.hpp"
#include "mvop/polynomials.hpp"
#include "mvop/verify.hpp"

using namespace mvop;

TEST_CASE("single variable Hahn examples") {
  const Rational a(2, 3);
  const Rational b(5, 4);
  const Rational N(6);
  for (int x = 0; x <= 6; ++x) {
    CHECK(hahn_1v(0, x, a, b, N) == Rational(1));
    CHECK(hahn_1v(1, x, a, b, N) == Rational(1) - (a + b) * Rational(x) / (a * N));
  }
  CHECK(hahn_1v(2, 1, Rational(1), Rational(1), Rational(3)) == Rational(-1));
  // rational N is allowed as long as (-N)_k does not vanish early
  CHECK_NOTHROW(hahn_1v(2, 3, a, b, Rational(7, 2)));
  CHECK_THROWS_AS(hahn_1v(3, 3, a, b, Rational(1)), std::domain_error);
}

TEST_CASE("single variable Krawtchouk and Meixner examples") {
  const Rational p(2, 7);
  const Rational c(1, 3);
  const Rational beta(5, 2);
  for (int x = 0; x <= 5; ++x) {
    CHECK(krawtchouk_1v(0, x, p, Rational(5)) == Rational(1));
    CHECK(meixner_1v(0, x, c, beta) == Rational(1));
    CHECK(krawtchouk_1v(1, x, p, Rational(5)) == Rational(1) - Rational(x) / (p * Rational(5)));
    CHECK(meixner_1v(1, x, c, beta) == Rational(1) + Rational(x) * (Rational(1) - Rational(1) / c) / beta);
  }
}

TEST_CASE("Krawtchouk and Meixner are symmetric in degree and argument") {
  for (int m = 0; m <= 4; ++m) {
    for (int x = 0; x <= 4; ++x) {
      CHECK(krawtchouk_1v(m, x, Rational(1, 3), Rational(4)) == krawtchouk_1v(x, m, Rational(1, 3), Rational(4)));
      CHECK(meixner_1v(m, x, Rational(1, 3), Rational(2)) == meixner_1v(x, m, Rational(1, 3), Rational(2)));
    }
  }
}

TEST_CASE("type two Hahn examples") {
  const Rational alpha(3, 5);
  const Rational gamma(7, 2);
  for (int u = 0; u <= 4; ++u) {
    for (int v = 0; v <= 4; ++v) {
      CHECK(type2_hahn({1, 0, u, v, alpha, gamma}) == Rational(1));
      CHECK(type2_hahn({1, 1, u, v, alpha, gamma}) == alpha * Rational(v) - gamma * Rational(u));
    }
  }
  for (int m = 0; m <= 6; ++m) {
    const Rational sign = m % 2 == 0 ? Rational(1) : Rational(-1);
    CHECK(type2_hahn({1, m, m, 0, alpha, gamma}) == sign * Rational(factorial(m)) * rising_factorial(gamma, m));
  }
}

TEST_CASE("type two Krawtchouk examples") {
  const Rational alpha(3, 5);
  const Rational gamma(7, 2);
  for (int u = 0; u <= 4; ++u) {
    for (int v = 0; v <= 4; ++v) {
      CHECK(type2_km({1, 0, u, v, alpha, gamma}) == Rational(1));
      CHECK(type2_km({1, 1, u, v, alpha, gamma}) == -Rational(v) + gamma / alpha * Rational(u));
    }
  }
  for (int m = 0; m <= 8; ++m) {
    const Rational sign = m % 2 == 0 ? Rational(1) : Rational(-1);
    CHECK(type2_km({1, m, 0, m, alpha, gamma}) == sign * Rational(factorial(m)));
  }
  CHECK_THROWS(type2_km({1, 1, 1, 1, Rational(0), gamma}));
}

TEST_CASE("r_product composes shifted factors") {
  const auto p = FamilyParams::hahn({Rational(1, 2), Rational(2, 3), Rational(5, 4)}, Rational(3), 6);
  const std::vector<int> zero{0, 0, 0};
  const std::vector<int> x{1, 2, 2};
  CHECK(r_product(p, 1, zero, x) == Rational(1));
  const std::vector<int> m{0, 1, 1};
  // inner variable x_{>1} - m_2, parameter a_{>1} + 2 m_2
  const Rational expected = type2_hahn({1, 1, x[0], 4 - 1, p.a_at(1), p.a_tail(1) + Rational(2)}) *
                            type2_hahn({2, 1, x[1], x[2], p.a_at(2), p.a_tail(2)});
  CHECK(r_product(p, 1, m, x) == expected);
  CHECK(r_product(p, 2, m, x) == type2_hahn({2, 1, x[1], x[2], p.a_at(2), p.a_tail(2)}));

  const auto k = FamilyParams::krawtchouk({Rational(1, 2), Rational(2, 3), Rational(5, 4)}, 6);
  const Rational expected_k = type2_km({1, 1, x[0], 4 - 1, k.a_at(1), k.a_tail(1)}) *
                              type2_km({2, 1, x[1], x[2], k.a_at(2), k.a_tail(2)});
  CHECK(r_product(k, 1, m, x) == expected_k);
}

TEST_CASE("multivariate reductions") {
  std::mt19937_64 rng(21);
  const auto h = random_hahn(rng, 3, 5);
  const auto k = random_krawtchouk(rng, 3, 5);
  const auto mx = random_meixner(rng, 3, Rational(2));
  const std::vector<int> radial{1, 0, 0};
  const std::vector<int> last{0, 0, 1};
  const std::vector<int> zero{0, 0, 0};
  for (const auto& x : enumerate_lattice(3, 5)) {
    const Rational s(x.total());
    CHECK(mv_hahn(zero, x.span(), h) == Rational(1));
    CHECK(mv_hahn(radial, x.span(), h) == Rational(1) - (h.a_total() + h.b) * s / (h.a_total() * Rational(5)));
    CHECK(mv_hahn(last, x.span(), h) == h.a_at(2) * Rational(x[2]) - h.a_at(3) * Rational(x[1]));
    const Rational A = k.a_total();
    CHECK(mv_krawtchouk(radial, x.span(), k) == krawtchouk_1v(1, x.total(), A / (A + Rational(1)), Rational(5)));
    CHECK(mv_meixner(radial, x.span(), mx) == meixner_1v(1, x.total(), mx.a_total(), mx.beta));
    CHECK(mv_meixner(zero, x.span(), mx) == Rational(1));
  }
}

TEST_CASE("eigen equation example n=2, N=4, a=(1,2), b=3, m=(1,1)") {
  const auto p = FamilyParams::hahn({Rational(1), Rational(2)}, Rational(3), 4);
  const std::vector<int> m{1, 1};
  const auto op = OperatorSpec::total(p);
  CHECK(eigenvalue(op, m) == Rational(14));
  const auto out = eigen_check(op, m, domain_lattice(p));
  CHECK(out.report.status == CheckStatus::pass);
  CHECK(out.report.max_defect.is_zero());
}

TEST_CASE("eigenvalues per family") {
  const auto h = FamilyParams::hahn({Rational(1, 2), Rational(3, 2), Rational(2)}, Rational(5, 4), 5);
  const std::vector<int> m{1, 2, 1};
  CHECK(eigenvalue(OperatorSpec::total(h), m) == Rational(4) * (Rational(4) + Rational(4) + Rational(5, 4) - Rational(1)));
  // partial i uses M_i = m_i + ... + m_{n-1} and a_i + ... + a_n
  CHECK(eigenvalue(OperatorSpec::partial(h, 2), m) == Rational(1) * (Rational(1) + Rational(7, 2) - Rational(1)));
  const auto k = FamilyParams::krawtchouk({Rational(1, 2), Rational(3, 2), Rational(2)}, 5);
  CHECK(eigenvalue(OperatorSpec::total(k), m) == Rational(4) * Rational(5));
  CHECK(eigenvalue(OperatorSpec::partial(k, 1), m) == Rational(3) * Rational(4));
  const auto mx = FamilyParams::meixner({Rational(1, 4), Rational(1, 8), Rational(1, 8)}, Rational(2));
  CHECK(eigenvalue(OperatorSpec::total(mx), m) == Rational(4) * Rational(1, 2));
  CHECK(eigenvalue(OperatorSpec::partial(mx, 2), m) == -Rational(1, 4));
}

TEST_CASE("type one family") {
  std::mt19937_64 rng(22);
  const auto p = random_hahn(rng, 2, 4);
  const auto lat = domain_lattice(p);
  const std::vector<int> J{2};
  CHECK(type_one_check(J, 2, p, lat).max_defect.is_zero());
  const std::vector<int> all{1, 2};
  for (const auto& x : lat->points()) {
    CHECK(type_one(all, 2, x.span(), p) == hahn_1v(2, x.total(), p.a_total(), p.b, Rational(4)));
  }
  const std::vector<int> empty;
  CHECK_THROWS(type_one(empty, 1, lat->point(0).span(), p));
  CHECK(nonempty_subsets(3).size() == 7);
}

TEST_CASE("degree labels") {
  const auto labels = degree_multi_indices(3, 5);
  CHECK(labels.size() == 56);
  CHECK(labels.front() == std::vector<int>{0, 0, 0});
  CHECK(degree_multi_indices(2, 6).size() == 28);
}

TEST_CASE("Rodrigues chain matches the closed form") {
  for (int m = 0; m <= 4; ++m) {
    const auto table = rodrigues_type2(m, Rational(1, 2), Rational(7, 3), 6);
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto& pt = table.lattice().point(i);
      CHECK(table[i] == type2_hahn({1, m, pt[0], pt[1], Rational(1, 2), Rational(7, 3)}));
    }
  }
}

TEST_CASE("alternative Hahn form agrees up to (-1)^m") {
  const Rational alpha(2, 3);
  const Rational gamma(9, 4);
  for (int m = 0; m <= 4; ++m) {
    const Rational sign = m % 2 == 0 ? Rational(1) : Rational(-1);
    for (int u = 0; u <= 4; ++u) {
      for (int v = 0; v <= 4; ++v) {
        if (u + v < m) {
          continue;
        }
        CHECK(type2_hahn({1, m, u, v, alpha, gamma}) == sign * alternative_hahn_form(m, u, v, alpha, gamma));
      }
    }
  }
}

TEST_CASE("binomial majorant bounds the polynomial") {
  const auto p = FamilyParams::meixner({Rational(1, 5), Rational(1, 7)}, Rational(3, 2));
  const std::vector<int> m{1, 2};
  const auto g = binomial_majorant(m, p);
  REQUIRE(g.size() == 4);
  for (const auto& x : enumerate_lattice(2, 12)) {
    Rational bound;
    for (std::size_t k = 0; k < g.size(); ++k) {
      bound += g[k] * Rational(binomial(x.total(), static_cast<int>(k)));
    }
    CHECK(mv_meixner(m, x.span(), p).abs() <= bound);
  }
}

TEST_CASE("eigenpolynomial table uses the lattice order") {
  std::mt19937_64 rng(23);
  const auto p = random_krawtchouk(rng, 2, 3);
  const std::vector<int> m{1, 1};
  const auto t = eigenpolynomial_table(m, p, domain_lattice(p));
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(t[i] == mv_krawtchouk(m, t.lattice().point(i).span(), p));
  }
}
