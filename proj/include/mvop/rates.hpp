#pragma once

#include <span>

#include "mvop/params.hpp"

namespace mvop {

/// Coefficients of the difference operators of one family.
///
///   Hahn:        B_j = (N-|x|)(x_j+a_j),  D_j = x_j(N-|x|+b),  C_jk = x_j(x_k+a_k)
///   Krawtchouk:  B_j = (N-|x|) a_j,       D_j = x_j,           C_jk = x_j a_k
///   Meixner:     B_j = (beta+|x|) a_j,    D_j = x_j,           C_jk = -x_j a_k
///
/// C_jk multiplies (f(x) - f(x - e_j + e_k)). Indices j, k are 1-based.
class BirthDeathRates {
 public:
  explicit BirthDeathRates(FamilyParams params) : params_(std::move(params)) {}

  const FamilyParams& params() const { return params_; }

  Rational birth(std::span<const int> x, int j) const;
  Rational death(std::span<const int> x, int j) const;
  Rational cross(std::span<const int> x, int j, int k) const;

 private:
  FamilyParams params_;
};

}  // namespace mvop
