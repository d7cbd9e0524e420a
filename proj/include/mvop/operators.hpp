#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mvop/lattice_function.hpp"
#include "mvop/measures.hpp"
#include "mvop/params.hpp"

namespace mvop {

enum class OperatorKind { total, naive0, partial };

/// One member of the commuting family: H_T, H_0 or H_i (1 <= i <= n-1).
/// Partial(1) is H_1, the cross part of H_T.
struct OperatorSpec {
  FamilyParams params;
  OperatorKind kind = OperatorKind::total;
  int index = 0;  // only for partial

  static OperatorSpec total(FamilyParams params);
  static OperatorSpec naive0(FamilyParams params);
  static OperatorSpec partial(FamilyParams params, int i);

  /// "T", "0", "1", ..., "n-1"
  std::string name() const;
};

/// H_T, H_0, H_1, ..., H_{n-1} in that order.
std::vector<OperatorSpec> operator_family(const FamilyParams& params);

/// Parses an operator name as produced by OperatorSpec::name().
OperatorSpec parse_operator(const FamilyParams& params, const std::string& name);

struct StencilEntry {
  std::vector<int> target;
  Rational coeff;
};

/// (H f)(x) = diagonal * f(x) + sum coeff * f(target). Entries with a zero
/// coefficient are dropped, so targets outside the lattice never appear for
/// bounded families.
struct Stencil {
  Rational diagonal;
  std::vector<StencilEntry> neighbors;
};

Stencil operator_stencil(const OperatorSpec& op, std::span<const int> x);

/// Pointwise image of f. For bounded families a neighbor outside the lattice
/// with a nonzero coefficient is a logic error. On a truncated Meixner box
/// such points are marked invalid in the result instead.
LatticeFunction apply_operator(const OperatorSpec& op, const LatticeFunction& f);

namespace reference {
/// Serial transcription of the operator definitions, term by term.
LatticeFunction apply_operator(const OperatorSpec& op, const LatticeFunction& f);
}  // namespace reference

/// Row-compressed square matrix over an enumerated lattice.
class SparseMatrix {
 public:
  using Row = std::vector<std::pair<std::size_t, Rational>>;

  SparseMatrix(LatticePtr lattice, std::vector<Row> rows, std::vector<std::uint8_t> row_valid);

  const Lattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  std::size_t size() const { return rows_.size(); }
  const Row& row(std::size_t i) const { return rows_[i]; }
  bool row_valid(std::size_t i) const { return row_valid_[i] != 0; }
  Rational at(std::size_t r, std::size_t c) const;
  std::size_t nonzeros() const;

  LatticeFunction apply(const LatticeFunction& f) const;
  /// Row x of A*B is valid when row x of A is valid and so is every row of B
  /// it touches.
  SparseMatrix multiply(const SparseMatrix& rhs) const;

 private:
  LatticePtr lattice_;
  std::vector<Row> rows_;
  std::vector<std::uint8_t> row_valid_;
};

namespace serial {
SparseMatrix multiply(const SparseMatrix& lhs, const SparseMatrix& rhs);
}  // namespace serial

/// Delta-basis realization: column j is the image of the j-th delta function.
SparseMatrix operator_matrix(const OperatorSpec& op, LatticePtr lattice);

struct DefectResult {
  Rational max_defect;
  std::size_t compared = 0;  // rows (or pairs) that entered the maximum
};

/// max |[M1, M2]| over rows valid in both products.
DefectResult commutator_defect(const OperatorSpec& op1, const OperatorSpec& op2, LatticePtr lattice);

/// max |(Hp, q) - (p, Hq)|. Bounded families use every monomial of total
/// degree <= N. On a Meixner box the delta basis is used over pairs of
/// points whose rows are valid, which is detailed balance of W*M.
DefectResult adjointness_defect(const OperatorSpec& op, const WeightTable& w);

/// True iff the image of every monomial x^m with |m| <= degree is, on the
/// valid points, a combination of monomials of total degree <= degree.
bool degree_invariance_check(const OperatorSpec& op, int degree, LatticePtr lattice);

/// Exponent vectors of all monomials in n variables with total degree <= d,
/// graded-lexicographic.
std::vector<std::vector<int>> monomial_exponents(int n, int d);

Rational monomial_value(std::span<const int> exponent, std::span<const int> x);

}  // namespace mvop
