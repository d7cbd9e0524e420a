#include <doctest.h>

#include <random>

#include "mvop/measures.hpp"
#include "mvop/polynomials.hpp"
#include "mvop/rates.hpp"
#include "mvop/verify.hpp"

using namespace mvop;

namespace {

FamilyParams hahn_111() { return FamilyParams::hahn({Rational(1), Rational(1)}, Rational(1), 1); }

}  // namespace

TEST_CASE("hahn weight examples") {
  const auto p = hahn_111();
  CHECK(hahn_weight(LatticePoint{0, 0}, p) == Rational(1, 3));
  CHECK(hahn_weight(LatticePoint{1, 0}, p) == Rational(1, 3));
  CHECK(hahn_weight(LatticePoint{0, 1}, p) == Rational(1, 3));
  CHECK_THROWS_AS(hahn_weight(LatticePoint{1, 1}, p), std::invalid_argument);
}

TEST_CASE("krawtchouk weight examples") {
  const auto p1 = FamilyParams::krawtchouk({Rational(1), Rational(1)}, 1);
  CHECK(krawtchouk_weight(LatticePoint{0, 0}, p1) == Rational(1, 3));
  const auto p2 = FamilyParams::krawtchouk({Rational(1), Rational(2)}, 2);
  CHECK(krawtchouk_weight(LatticePoint{1, 1}, p2) == Rational(1, 4));
  CHECK_THROWS_AS(krawtchouk_weight(LatticePoint{2, 1}, p2), std::invalid_argument);
}

TEST_CASE("meixner weight examples") {
  const auto p = FamilyParams::meixner({Rational(1, 4), Rational(1, 4)}, Rational(2));
  CHECK(meixner_weight(LatticePoint{0, 0}, p).value == Rational(1, 4));
  CHECK(meixner_weight(LatticePoint{1, 0}, p).value == Rational(1, 8));
  CHECK(meixner_weight(LatticePoint{1, 0}, p).normalized);
  const auto q = FamilyParams::meixner({Rational(1, 4), Rational(1, 4)}, Rational(3, 2));
  const auto w = meixner_weight(LatticePoint{1, 0}, q);
  CHECK_FALSE(w.normalized);
  CHECK(w.value == Rational(3, 8));
  CHECK_FALSE(weight_is_normalized(q));
}

TEST_CASE("bounded weights sum to one for random parameters") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    for (auto [n, N] : {std::pair{2, 6}, std::pair{3, 4}}) {
      for (const auto& p : {random_hahn(rng, n, N), random_krawtchouk(rng, n, N)}) {
        const WeightTable w = make_weight_table(p);
        CHECK(w.sum() == Rational(1));
        for (const auto& v : w.values) {
          CHECK(v.sign() > 0);
        }
      }
    }
  }
}

TEST_CASE("meixner partial sums increase toward one and respect the tail bound") {
  const auto p = FamilyParams::meixner({Rational(1, 4), Rational(1, 5)}, Rational(2));
  Rational previous;
  for (int X = 2; X <= 14; X += 4) {
    const WeightTable w = make_weight_table(p, X);
    const Rational s = w.sum();
    CHECK(s < Rational(1));
    CHECK(s > previous);
    REQUIRE(w.tail_mass_bound.has_value());
    CHECK(Rational(1) - s <= *w.tail_mass_bound);
    previous = s;
  }
}

TEST_CASE("meixner shell masses add up to the box sum") {
  const auto p = FamilyParams::meixner({Rational(1, 3), Rational(1, 6), Rational(1, 7)}, Rational(3));
  const WeightTable w = make_weight_table(p, 6);
  Rational shells;
  for (int s = 0; s <= 6; ++s) {
    shells += meixner_shell_mass(p, s);
  }
  CHECK(shells == w.sum());
}

TEST_CASE("polynomial tail bound dominates an explicit partial tail") {
  const auto p = FamilyParams::meixner({Rational(1, 4), Rational(1, 4)}, Rational(2));
  const std::vector<int> m{1, 0};
  const auto g = binomial_majorant(m, p);
  const auto bound = meixner_tail_bound(p, 10, g, g);
  REQUIRE(bound.has_value());
  const WeightTable near = make_weight_table(p, 10);
  const WeightTable far = make_weight_table(p, 40);
  const LatticeFunction f = eigenpolynomial_table(m, p, far.lattice);
  Rational tail;
  for (std::size_t i = near.lattice->size(); i < far.lattice->size(); ++i) {
    tail += f[i] * f[i] * far.values[i];
  }
  CHECK(tail <= *bound);
  CHECK(tail * Rational(100) > *bound);
}

TEST_CASE("inner product examples") {
  std::mt19937_64 rng(3);
  const auto p = random_hahn(rng, 3, 4);
  const WeightTable w = make_weight_table(p);
  const auto one = LatticeFunction::constant(w.lattice, Rational(1));
  CHECK(inner_product(one, one, w) == Rational(1));
  auto t = [&](int i) {
    return LatticeFunction::tabulate(w.lattice, [&, i](const LatticePoint& x) {
      return p.a_tail(i) * Rational(x[static_cast<std::size_t>(i - 1)]) - p.a_at(i) * Rational(tail_sum(x.span(), i));
    });
  };
  CHECK(inner_product(t(1), t(2), w).is_zero());
  const auto f = LatticeFunction::tabulate(w.lattice, [](const LatticePoint& x) { return Rational(x[0] * x[0] + 1); });
  CHECK(inner_product(f, t(1), w) == inner_product(t(1), f, w));
  const WeightTable other = make_weight_table(random_hahn(rng, 3, 3));
  CHECK_THROWS(inner_product(one, one, other));
}

TEST_CASE("weight ratio and compatibility") {
  std::mt19937_64 rng(5);
  for (const auto& p : {random_hahn(rng, 3, 4), random_krawtchouk(rng, 3, 4)}) {
    CHECK(weight_ratio_check(p).status == CheckStatus::pass);
    CHECK(compatibility_check(p).status == CheckStatus::pass);
  }
  const auto m = random_meixner(rng, 2, Rational(2));
  CHECK(weight_ratio_check(m, 8).status == CheckStatus::pass);
  CHECK(compatibility_check(m, 8).status == CheckStatus::pass);
}

TEST_CASE("birth and death rates vanish on the boundary") {
  const auto p = FamilyParams::hahn({Rational(1, 2), Rational(3)}, Rational(2), 3);
  const BirthDeathRates r(p);
  for (const auto& x : enumerate_lattice(2, 3)) {
    for (int j = 1; j <= 2; ++j) {
      if (x.total() == 3) {
        CHECK(r.birth(x.span(), j).is_zero());
      }
      if (x[static_cast<std::size_t>(j - 1)] == 0) {
        CHECK(r.death(x.span(), j).is_zero());
      }
    }
  }
}
