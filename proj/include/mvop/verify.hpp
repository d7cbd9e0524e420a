#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mvop/linalg.hpp"
#include "mvop/operators.hpp"
#include "mvop/params.hpp"

namespace mvop {

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus status);

struct CheckReport {
  std::string name;
  std::string instance;
  CheckStatus status = CheckStatus::pass;
  Rational max_defect;
  /// Exact checks have no tolerance; truncated Meixner sums carry their bound.
  std::optional<Rational> tolerance;
  double seconds = 0.0;
  std::string note;

  bool passed() const { return status != CheckStatus::fail; }
};

// ---------------------------------------------------------------------------
// Random generic parameters

/// p/q with p, q uniform in [1, 20].
Rational random_rational(std::mt19937_64& rng);
FamilyParams random_hahn(std::mt19937_64& rng, int n, int N);
FamilyParams random_krawtchouk(std::mt19937_64& rng, int n, int N);
/// a_i = p/q with p < q and |a| < 1 (resampled until it holds).
FamilyParams random_meixner(std::mt19937_64& rng, int n, const Rational& beta);

// ---------------------------------------------------------------------------
// Measures

CheckReport normalization_check(const FamilyParams& params, std::optional<int> x_max = std::nullopt);
CheckReport weight_ratio_check(const FamilyParams& params, std::optional<int> x_max = std::nullopt);
CheckReport compatibility_check(const FamilyParams& params, std::optional<int> x_max = std::nullopt);

// ---------------------------------------------------------------------------
// Operators

CheckReport zero_mode_check(const FamilyParams& params, LatticePtr lattice);
CheckReport decomposition_check(const FamilyParams& params, LatticePtr lattice, std::uint64_t seed);
/// Meixner partial operators are the negatives of the Krawtchouk ones.
CheckReport sign_relation_check(const FamilyParams& params, LatticePtr lattice);
CheckReport adjointness_check(const OperatorSpec& op, const WeightTable& w);
CheckReport commutator_check(const OperatorSpec& op1, const OperatorSpec& op2, LatticePtr lattice);
CheckReport degree_invariance_report(const OperatorSpec& op, int degree, LatticePtr lattice);

// ---------------------------------------------------------------------------
// Eigen equations

/// The eigenvalue of op on P_m:
///   Hahn        T: |m|(|m|+|a|+b-1)   i: M_i(M_i + a_i+...+a_n - 1)
///   Krawtchouk  T: |m|(|a|+1)         i: M_i (a_i+...+a_n)
///   Meixner     T: |m|(1-|a|)         i: -M_i (a_i+...+a_n)
/// with M_i = m_i + ... + m_{n-1}. The naive operator H_0 gets E_T - E_1.
Rational eigenvalue(const OperatorSpec& op, std::span<const int> m);

struct EigenOutcome {
  CheckReport report;
  /// (H P)(x)/P(x) at the first valid point with P(x) != 0.
  std::optional<Rational> observed;
};

EigenOutcome eigen_check(const OperatorSpec& op, std::span<const int> m, LatticePtr lattice);

/// H_T p_m(x_J) = E_T(m) p_m(x_J) for the type-one polynomial of J.
CheckReport type_one_check(std::span<const int> J, int m, const FamilyParams& params, LatticePtr lattice);

/// All nonempty subsets of {1..n}, each sorted ascending.
std::vector<std::vector<int>> nonempty_subsets(int n);

/// Finds a same-degree pair J != J' with nonzero inner product.
CheckReport type_one_nonorthogonality_check(const FamilyParams& params, int m);

/// Product of adjacent type-two factors, eigenfunction of H_{i-1}.
CheckReport glue_check(int i, int m_i, int m_prev, const FamilyParams& params);

// ---------------------------------------------------------------------------
// Polynomial identities

/// Forward and backward shift and the eigen equation of the single-variable
/// Hahn polynomial, for m <= max_degree and x in [0, N].
CheckReport single_variable_check(const Rational& a, const Rational& b, int N, int max_degree);

/// Type-two shifts (Hahn or Krawtchouk form) on the box u + v <= bound.
CheckReport type2_shift_check(Family family, const Rational& alpha, const Rational& gamma,
                              int max_degree, int bound);
/// Type-two forward and backward recursions on the box u + v <= bound.
CheckReport type2_recursion_check(Family family, const Rational& alpha, const Rational& gamma,
                                  int max_degree, int bound);
/// Generalised recursions for the products R^{(i)}, all i and all degree
/// labels with m_1 + ... + m_{n-1} <= max_degree, over the lattice |x| <= bound.
CheckReport g_recursion_check(const FamilyParams& params, int max_degree, int bound);

CheckReport rodrigues_check(const Rational& alpha, const Rational& gamma, int max_degree, int bound);
CheckReport special_value_check(Family family, const Rational& alpha, const Rational& gamma, int max_degree);
/// Compares P_m with the two-variable Hahn convention and reports the
/// proportionality constant.
CheckReport alternative_form_check(const Rational& alpha, const Rational& gamma, int max_degree, int bound);

// ---------------------------------------------------------------------------
// Gram matrices

struct GramResult {
  std::vector<std::vector<int>> indices;
  DenseMatrix matrix;
  /// Meixner only: per-entry bound on the truncation error.
  DenseMatrix tail_bounds;
  Rational min_diagonal;
  Rational max_off_diagonal;
  /// Meixner only: the largest per-entry tail bound.
  std::optional<Rational> max_tail_bound;
  CheckReport report;
};

GramResult gram_check(const FamilyParams& params, int m_max, std::optional<int> x_max = std::nullopt);

/// #{m : |m| <= N} == |X| and the full Gram matrix is nonsingular.
CheckReport completeness_check(const FamilyParams& params);

/// Degeneracy of H_T over each total degree.
CheckReport degeneracy_check(const FamilyParams& params, int m_max, LatticePtr lattice);

/// (P_m^{(i)}, P_m^{(j)}) for i != j under the full weight, raw factors.
CheckReport sector_orthogonality_check(const FamilyParams& params, int max_degree);

// ---------------------------------------------------------------------------
// Limits

/// Hahn type-two product times the radial 3F2, with every type-two factor
/// multiplied by (-1)^{m_i}/(a_i)_{m_i}. a may hold negative entries.
Rational rescaled_hahn(std::span<const int> m, std::span<const int> x, std::span<const Rational> a,
                       const Rational& b, const Rational& N);

/// Pass when each deviation is at most 2 t_k / t_{k+1} times the previous.
CheckReport limit_check_krawtchouk(const std::vector<Rational>& t_values, std::span<const int> m,
                                   std::span<const int> x, const std::vector<Rational>& a, int N);
CheckReport limit_check_meixner(const std::vector<Rational>& t_values, std::span<const int> m,
                                std::span<const int> x, const std::vector<Rational>& a,
                                const Rational& beta);
/// H_m(x; p t, (1-p) t, N) -> K_m(x; p, N).
CheckReport limit_check_single_variable(const std::vector<Rational>& t_values, int m, int x,
                                        const Rational& p, int N);

// ---------------------------------------------------------------------------
// Suite

struct SuiteOptions {
  std::optional<int> x_max;     // Meixner truncation
  std::uint64_t seed = 20240601;
  std::set<std::string> checks;  // empty: all
  int shift_degree = 5;
  int box_bound = 8;
};

/// Names accepted by SuiteOptions::checks, in run order.
const std::vector<std::string>& suite_check_names();

std::vector<CheckReport> run_suite(const FamilyParams& params, int m_max, const SuiteOptions& options);

}  // namespace mvop
