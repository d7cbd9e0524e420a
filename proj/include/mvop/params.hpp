#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvop/lattice.hpp"
#include "mvop/rational.hpp"

namespace mvop {

enum class Family { hahn, krawtchouk, meixner };

std::string_view to_string(Family family);
Family parse_family(std::string_view name);

/// Parameter bundle of one polynomial family.
///
/// Hahn uses (a, b, N), Krawtchouk (a, N), Meixner (a, beta). Indices in the
/// accessors below are 1-based to match the lattice coordinates x_1..x_n.
struct FamilyParams {
  Family family = Family::hahn;
  std::vector<Rational> a;
  Rational b;     // Hahn only
  int N = 0;      // Hahn and Krawtchouk
  Rational beta;  // Meixner only

  static FamilyParams hahn(std::vector<Rational> a, Rational b, int N);
  static FamilyParams krawtchouk(std::vector<Rational> a, int N);
  static FamilyParams meixner(std::vector<Rational> a, Rational beta);

  /// Throws std::invalid_argument on any violated invariant.
  void validate() const;

  int dim() const { return static_cast<int>(a.size()); }
  bool bounded() const { return family != Family::meixner; }

  const Rational& a_at(int j) const { return a[static_cast<std::size_t>(j - 1)]; }
  /// |a| = a_1 + ... + a_n
  Rational a_total() const;
  /// a_{>i} = a_{i+1} + ... + a_n
  Rational a_tail(int i) const;
  /// a_i + a_{i+1} + ... + a_n
  Rational a_from(int i) const;
  /// a_J for a set of 1-based indices.
  Rational a_subset(std::span<const int> subset) const;

  std::string describe() const;
};

/// a_{>i}; same contract as tail_sum on lattice points.
Rational tail_param(const FamilyParams& params, int i);

/// The lattice on which the family is tabulated: the bounded simplex for
/// Hahn/Krawtchouk, or the truncation box |x| <= x_max for Meixner.
LatticePtr domain_lattice(const FamilyParams& params, std::optional<int> x_max = std::nullopt);

}  // namespace mvop
