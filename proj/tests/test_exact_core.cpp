#include <doctest.h>

#include <random>

#include "mvop/combinatorics.hpp"
#include "mvop/lattice.hpp"
#include "mvop/params.hpp"
#include "mvop/rational.hpp"

using namespace mvop;

TEST_CASE("rational stays in lowest terms with a positive denominator") {
  const Rational r(6, -4);
  CHECK(r.str() == "-3/2");
  CHECK(r.denominator() == 2);
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(4, 2).is_integer());
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(1, 3) * Rational(3)) == Rational(1));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("rational parsing accepts p/q and integers only") {
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse(" -7/14 ") == Rational(-1, 2));
  CHECK(Rational::parse("3") == Rational(3));
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational text round trip") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int i = 0; i < 200; ++i) {
    long q = d(rng);
    q = q == 0 ? 1 : q;
    const Rational r(d(rng), q);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("rising factorial examples") {
  CHECK(rising_factorial(Rational(5, 7), 0) == Rational(1));
  CHECK(rising_factorial(Rational(2), 3) == Rational(24));
  CHECK(rising_factorial(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(rising_factorial(Rational(-3), 5) == Rational(0));
}

TEST_CASE("rising factorial splits over j + k") {
  for (const Rational a : {Rational(1, 2), Rational(-7, 3), Rational(5)}) {
    for (int j = 0; j <= 5; ++j) {
      for (int k = 0; k <= 5; ++k) {
        CHECK(rising_factorial(a, j + k) == rising_factorial(a, j) * rising_factorial(a + Rational(j), k));
      }
    }
  }
}

TEST_CASE("rising factorial does not overflow") {
  // 30! has 33 digits
  CHECK(rising_factorial(Rational(1), 30).str() == "265252859812191058636308480000000");
}

TEST_CASE("multinomial examples") {
  const std::vector<int> zero{0, 0};
  const std::vector<int> one_one{1, 1};
  const std::vector<int> two_one{2, 1};
  CHECK(multinomial(1, zero) == 1);
  CHECK(multinomial(2, one_one) == 2);
  CHECK(multinomial(4, two_one) == 12);
  const std::vector<int> too_big{3, 2};
  CHECK_THROWS_AS(multinomial(4, too_big), std::invalid_argument);
}

TEST_CASE("multinomial theorem over the lattice") {
  for (int n = 2; n <= 4; ++n) {
    for (int N = 1; N <= 6; ++N) {
      mpz_class sum = 0;
      for (const auto& x : enumerate_lattice(n, N)) {
        sum += multinomial(N, x.span());
      }
      mpz_class expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(N));
      CHECK(sum == expected);
    }
  }
}

TEST_CASE("lattice enumeration examples") {
  const auto small = enumerate_lattice(2, 1);
  REQUIRE(small.size() == 3);
  CHECK(small[0] == LatticePoint{0, 0});
  CHECK(small[1] == LatticePoint{0, 1});
  CHECK(small[2] == LatticePoint{1, 0});
  CHECK(enumerate_lattice(2, 2).size() == 6);
  CHECK(enumerate_lattice(3, 4).size() == 35);
  CHECK(lattice_size(3, 4) == 35);
  CHECK(lattice_size(2, 6) == 28);
}

TEST_CASE("lattice order is graded lexicographic without duplicates") {
  const Lattice lat(3, 5);
  for (std::size_t i = 1; i < lat.size(); ++i) {
    const auto& p = lat.point(i - 1);
    const auto& q = lat.point(i);
    const bool graded = p.total() < q.total() || (p.total() == q.total() && p < q);
    CHECK(graded);
  }
  for (std::size_t i = 0; i < lat.size(); ++i) {
    CHECK(lat.index_of(lat.point(i).span()) == i);
  }
  const std::vector<int> outside{3, 3, 0};
  CHECK_FALSE(lat.contains(outside));
  const std::vector<int> negative{-1, 0, 0};
  CHECK_FALSE(lat.contains(negative));
}

TEST_CASE("tail sums") {
  const std::vector<int> x{1, 2, 3};
  CHECK(tail_sum(x, 1) == 5);
  CHECK(tail_sum(x, 2) == 3);
  CHECK_THROWS_AS(tail_sum(x, 0), std::invalid_argument);
  CHECK_THROWS_AS(tail_sum(x, 3), std::invalid_argument);
  const auto p = FamilyParams::hahn({Rational(1, 2), Rational(1), Rational(2)}, Rational(1), 4);
  CHECK(tail_param(p, 1) == Rational(3));
  CHECK(p.a_tail(2) == Rational(2));
  CHECK(p.a_from(1) == Rational(7, 2));
  CHECK_THROWS_AS(tail_param(p, 3), std::invalid_argument);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(FamilyParams::hahn({Rational(1)}, Rational(1), 3), std::invalid_argument);
  CHECK_THROWS_AS(FamilyParams::hahn({Rational(1), Rational(-1)}, Rational(1), 3), std::invalid_argument);
  CHECK_THROWS_AS(FamilyParams::hahn({Rational(1), Rational(1)}, Rational(0), 3), std::invalid_argument);
  CHECK_THROWS_AS(FamilyParams::krawtchouk({Rational(1), Rational(1)}, 0), std::invalid_argument);
  CHECK_THROWS_AS(FamilyParams::meixner({Rational(1, 2), Rational(1, 2)}, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(FamilyParams::meixner({Rational(1, 4), Rational(1, 4)}, Rational(0)), std::invalid_argument);
  CHECK_NOTHROW(FamilyParams::meixner({Rational(1, 4), Rational(1, 4)}, Rational(3, 2)));
  CHECK(parse_family("krawtchouk") == Family::krawtchouk);
  CHECK_THROWS(parse_family("jacobi"));
}
