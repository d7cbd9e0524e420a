#pragma once

#include <span>

#include "mvop/lattice_function.hpp"
#include "mvop/params.hpp"

namespace mvop {

/// Single-variable Hahn polynomial
///   H_m(x; a, b, N) = sum_k (-m)_k (m+a+b-1)_k (-x)_k / ((a)_k (-N)_k k!).
/// N may be any rational; throws std::domain_error if a lower Pochhammer
/// factor vanishes before the series terminates.
Rational hahn_1v(int m, int x, const Rational& a, const Rational& b, const Rational& N);

/// K_m(x; p, N) = 2F1(-m, -x; -N | 1/p)
Rational krawtchouk_1v(int m, int x, const Rational& p, const Rational& N);

/// M_m(x; c, beta) = 2F1(-m, -x; beta | 1 - 1/c)
Rational meixner_1v(int m, int x, const Rational& c, const Rational& beta);

/// Arguments of one type-two factor P_m^{(i)}(u, v; alpha, gamma).
struct Type2Args {
  int i = 1;  // sector, informational only
  int m = 0;
  int u = 0;
  int v = 0;
  Rational alpha;
  Rational gamma;
};

/// sum_k (-1)^k C(m,k) (gamma+k)_{m-k} (alpha+m-k)_k (-u)_{m-k} (-v)_k
Rational type2_hahn(const Type2Args& args);

/// sum_k (-1)^k C(m,k) (gamma/alpha)^k (-u)_k (-v)_{m-k}
Rational type2_km(const Type2Args& args);

/// prod_{j=i}^{n-1} of type-two factors at (x_j, x_{>j} - S_j) with
/// S_j = m_{j+1} + ... + m_{n-1}. Hahn shifts the parameter slot to
/// a_{>j} + 2 S_j; Krawtchouk and Meixner leave it unshifted.
Rational r_product(const FamilyParams& params, int i, std::span<const int> m, std::span<const int> x);

Rational mv_hahn(std::span<const int> m, std::span<const int> x, const FamilyParams& params);
Rational mv_krawtchouk(std::span<const int> m, std::span<const int> x, const FamilyParams& params);
Rational mv_meixner(std::span<const int> m, std::span<const int> x, const FamilyParams& params);

/// Dispatches on params.family.
Rational eigenpolynomial(std::span<const int> m, std::span<const int> x, const FamilyParams& params);

/// P_m tabulated on a lattice.
LatticeFunction eigenpolynomial_table(std::span<const int> m, const FamilyParams& params,
                                      LatticePtr lattice);

/// Type-one polynomial p_m(x_J): H_m(x_J; a_J, |a|+b-a_J, N) for Hahn,
/// K_m(x_J; a_J/(1+|a|), N) for Krawtchouk, M_m(x_J; a_J/(1-|a|+a_J), beta)
/// for Meixner. J holds 1-based coordinate indices.
Rational type_one(std::span<const int> J, int m, std::span<const int> x, const FamilyParams& params);

/// All multi-indices m = (m_0, ..., m_{n-1}) with |m| <= max_degree, in
/// graded-lexicographic order.
std::vector<std::vector<int>> degree_multi_indices(int n, int max_degree);

/// Degree-m type-two table on the simplex u + v <= bound, built from the
/// constant 1 at parameters (alpha+m, gamma+m) by m backward shifts
///   P -> v(u+a')P(u, v-1; a'+1, g'+1) - u(v+g')P(u-1, v; a'+1, g'+1).
LatticeFunction rodrigues_type2(int m, const Rational& alpha, const Rational& gamma, int bound);

/// Right-hand side of the two-variable Hahn convention,
///   (alpha)_m (-u-v)_m H_m(u; alpha, gamma, u+v).
Rational alternative_hahn_form(int m, int u, int v, const Rational& alpha, const Rational& gamma);

/// Coefficients g_0..g_d (d = |m|) with |P_m(x)| <= sum_k g_k C(|x|, k) on
/// the whole orthant. g_k is the largest |forward difference| of order k at
/// the origin, from the Newton expansion P(x) = sum_alpha D^alpha P(0) prod C(x_j, alpha_j).
std::vector<Rational> binomial_majorant(std::span<const int> m, const FamilyParams& params);

}  // namespace mvop
