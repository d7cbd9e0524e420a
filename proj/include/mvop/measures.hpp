#pragma once

#include <optional>
#include <vector>

#include "mvop/lattice.hpp"
#include "mvop/lattice_function.hpp"
#include "mvop/params.hpp"

namespace mvop {

/// Hypergeometric multinomial weight
///   N!/(x_1!...x_n! x_0!) * prod (a_i)_{x_i} * (b)_{x_0} / (|a|+b)_N,  x_0 = N - |x|.
Rational hahn_weight(const LatticePoint& x, const FamilyParams& params);

/// Multinomial weight N!/(x_1!...x_n! x_0!) * prod a_i^{x_i} / (1+|a|)^N.
Rational krawtchouk_weight(const LatticePoint& x, const FamilyParams& params);

struct MeixnerWeight {
  Rational value;
  /// False when beta is not an integer: the constant (1-|a|)^beta is then
  /// omitted because it is irrational.
  bool normalized = true;
};

/// Negative multinomial weight (beta)_{|x|} prod a_i^{x_i}/x_i! * (1-|a|)^beta.
MeixnerWeight meixner_weight(const LatticePoint& x, const FamilyParams& params);

/// Dispatches on params.family.
Rational family_weight(const LatticePoint& x, const FamilyParams& params);

/// Whether family weights for these parameters carry their normalization.
bool weight_is_normalized(const FamilyParams& params);

struct WeightTable {
  FamilyParams params;
  LatticePtr lattice;
  std::vector<Rational> values;
  bool normalized = true;
  /// Meixner only: rigorous upper bound on the mass outside the box.
  std::optional<Rational> tail_mass_bound;

  Rational sum() const;
};

/// Tabulates the family weight on its domain lattice (x_max is the Meixner
/// truncation bound and is ignored for bounded families).
WeightTable make_weight_table(const FamilyParams& params, std::optional<int> x_max = std::nullopt);

/// (f, g) = sum_x f(x) g(x) W(x). Invalid entries of f or g are rejected.
Rational inner_product(const LatticeFunction& f, const LatticeFunction& g, const WeightTable& w);

/// Total Meixner weight on the shell |x| = s: (beta)_s |a|^s / s! times the
/// normalization constant when it is rational.
Rational meixner_shell_mass(const FamilyParams& params, int s);

/// Upper bound on the Meixner mass beyond the box, sum_{|x| > x_max} W_M(x).
/// Returns nullopt when no bound is available at this truncation.
std::optional<Rational> meixner_tail_bound(const FamilyParams& params, int x_max);

/// Upper bound on sum_{|x| > x_max} G(|x|) H(|x|) W_M(x) where G and H are
/// given by non-negative coefficients in the binomial basis C(s, k).
///
/// Shells are summed exactly until s > 4(deg G + deg H) and the term ratio bound
///   q_s = (s+1)/(s+1-deg G) * (s+1)/(s+1-deg H) * max(1, (beta+s)/(s+1)) * |a|
/// is below one; the rest is closed by a geometric series.
std::optional<Rational> meixner_tail_bound(const FamilyParams& params, int x_max, std::span<const Rational> g,
                                           std::span<const Rational> h);

/// B_j(x)/D_j(x+e_j), the weight ratio W(x+e_j)/W(x) predicted by the rates.
Rational rate_ratio(const FamilyParams& params, const LatticePoint& x, int j);

}  // namespace mvop
