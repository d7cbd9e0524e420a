#include "mvop/operators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mvop/linalg.hpp"
#include "mvop/parallel.hpp"
#include "mvop/rates.hpp"

namespace mvop {

OperatorSpec OperatorSpec::total(FamilyParams params) {
  return {std::move(params), OperatorKind::total, 0};
}

OperatorSpec OperatorSpec::naive0(FamilyParams params) {
  return {std::move(params), OperatorKind::naive0, 0};
}

OperatorSpec OperatorSpec::partial(FamilyParams params, int i) {
  if (i < 1 || i > params.dim() - 1) {
    throw std::invalid_argument("OperatorSpec::partial: index must lie in [1, n-1]");
  }
  return {std::move(params), OperatorKind::partial, i};
}

std::string OperatorSpec::name() const {
  switch (kind) {
    case OperatorKind::total:
      return "T";
    case OperatorKind::naive0:
      return "0";
    case OperatorKind::partial:
      return std::to_string(index);
  }
  return {};
}

std::vector<OperatorSpec> operator_family(const FamilyParams& params) {
  std::vector<OperatorSpec> ops{OperatorSpec::total(params), OperatorSpec::naive0(params)};
  for (int i = 1; i < params.dim(); ++i) {
    ops.push_back(OperatorSpec::partial(params, i));
  }
  return ops;
}

OperatorSpec parse_operator(const FamilyParams& params, const std::string& name) {
  if (name == "T" || name == "t" || name == "total") {
    return OperatorSpec::total(params);
  }
  if (name == "0") {
    return OperatorSpec::naive0(params);
  }
  std::size_t used = 0;
  int i = 0;
  try {
    i = std::stoi(name, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != name.size() || used == 0) {
    throw std::invalid_argument("unknown operator '" + name + "' (expected T, 0, 1, ..., n-1)");
  }
  return OperatorSpec::partial(params, i);
}

namespace {

void add_neighbor(Stencil& s, std::vector<int> target, const Rational& coeff) {
  if (coeff.is_zero()) {
    return;
  }
  s.diagonal += coeff;
  s.neighbors.push_back({std::move(target), -coeff});
}

void add_birth_death(const BirthDeathRates& rates, std::span<const int> x, Stencil& s) {
  const int n = static_cast<int>(x.size());
  std::vector<int> y(x.begin(), x.end());
  for (int j = 1; j <= n; ++j) {
    auto& yj = y[static_cast<std::size_t>(j - 1)];
    yj += 1;
    add_neighbor(s, y, rates.birth(x, j));
    yj -= 2;
    add_neighbor(s, y, rates.death(x, j));
    yj += 1;
  }
}

void add_cross(const BirthDeathRates& rates, std::span<const int> x, int from, Stencil& s) {
  const int n = static_cast<int>(x.size());
  std::vector<int> y(x.begin(), x.end());
  for (int j = from; j <= n; ++j) {
    for (int k = from; k <= n; ++k) {
      if (j == k) {
        continue;
      }
      y[static_cast<std::size_t>(j - 1)] -= 1;
      y[static_cast<std::size_t>(k - 1)] += 1;
      add_neighbor(s, y, rates.cross(x, j, k));
      y[static_cast<std::size_t>(j - 1)] += 1;
      y[static_cast<std::size_t>(k - 1)] -= 1;
    }
  }
}

void require_operand(const OperatorSpec& op, const Lattice& lattice) {
  if (lattice.dim() != op.params.dim()) {
    throw std::invalid_argument("apply_operator: lattice dimension does not match parameters");
  }
  if (op.params.bounded() && lattice.bound() != op.params.N) {
    throw std::invalid_argument("apply_operator: lattice bound does not match N");
  }
}

/// Resolves stencil targets to lattice indices. Returns false when a target
/// is outside (only legal for Meixner).
bool resolve(const OperatorSpec& op, const Lattice& lattice, const Stencil& s,
             std::span<const int> x, std::vector<std::size_t>& out) {
  out.clear();
  for (const auto& e : s.neighbors) {
    const auto idx = lattice.index_of(e.target);
    if (!idx) {
      if (op.params.bounded()) {
        throw std::logic_error("operator stencil at " + LatticePoint(std::vector<int>(x.begin(), x.end())).str() +
                               " reads outside the lattice with a nonzero coefficient");
      }
      return false;
    }
    out.push_back(*idx);
  }
  return true;
}

}  // namespace

Stencil operator_stencil(const OperatorSpec& op, std::span<const int> x) {
  const BirthDeathRates rates(op.params);
  Stencil s;
  switch (op.kind) {
    case OperatorKind::total:
      add_birth_death(rates, x, s);
      add_cross(rates, x, 1, s);
      break;
    case OperatorKind::naive0:
      add_birth_death(rates, x, s);
      break;
    case OperatorKind::partial:
      add_cross(rates, x, op.index, s);
      break;
  }
  return s;
}

LatticeFunction apply_operator(const OperatorSpec& op, const LatticeFunction& f) {
  const Lattice& lattice = f.lattice();
  require_operand(op, lattice);
  std::vector<Rational> out(lattice.size());
  std::vector<std::uint8_t> valid(lattice.size(), 1);
  parallel_for(lattice.size(), [&](std::size_t i) {
    const auto& x = lattice.point(i);
    const Stencil s = operator_stencil(op, x.span());
    std::vector<std::size_t> idx;
    if (!resolve(op, lattice, s, x.span(), idx) || !f.valid(i)) {
      valid[i] = 0;
      return;
    }
    Rational acc = s.diagonal * f[i];
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if (!f.valid(idx[t])) {
        valid[i] = 0;
        return;
      }
      acc += s.neighbors[t].coeff * f[idx[t]];
    }
    out[i] = std::move(acc);
  });
  return LatticeFunction(f.lattice_ptr(), std::move(out), std::move(valid));
}

namespace reference {

LatticeFunction apply_operator(const OperatorSpec& op, const LatticeFunction& f) {
  const Lattice& lattice = f.lattice();
  require_operand(op, lattice);
  const BirthDeathRates rates(op.params);
  const int n = lattice.dim();
  std::vector<Rational> out(lattice.size());
  std::vector<std::uint8_t> valid(lattice.size(), 1);

  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const std::vector<int> x = lattice.point(i).entries();
    bool ok = f.valid(i);
    // coeff * (f(x) - f(y)); a vanishing coefficient skips the read of f(y).
    auto term = [&](const Rational& coeff, const std::vector<int>& y) -> Rational {
      if (coeff.is_zero()) {
        return {};
      }
      const auto idx = lattice.index_of(y);
      if (!idx) {
        if (op.params.bounded()) {
          throw std::logic_error("reference::apply_operator: out-of-lattice read");
        }
        ok = false;
        return {};
      }
      ok = ok && f.valid(*idx);
      return coeff * (f[i] - f[*idx]);
    };

    Rational acc;
    if (op.kind != OperatorKind::partial) {
      for (int j = 1; j <= n; ++j) {
        std::vector<int> up = x;
        up[static_cast<std::size_t>(j - 1)] += 1;
        std::vector<int> down = x;
        down[static_cast<std::size_t>(j - 1)] -= 1;
        acc += term(rates.birth(x, j), up);
        acc += term(rates.death(x, j), down);
      }
    }
    if (op.kind != OperatorKind::naive0) {
      const int from = op.kind == OperatorKind::partial ? op.index : 1;
      for (int j = from; j <= n; ++j) {
        for (int k = from; k <= n; ++k) {
          if (j != k) {
            std::vector<int> y = x;
            y[static_cast<std::size_t>(j - 1)] -= 1;
            y[static_cast<std::size_t>(k - 1)] += 1;
            acc += term(rates.cross(x, j, k), y);
          }
        }
      }
    }
    if (ok) {
      out[i] = std::move(acc);
    } else {
      valid[i] = 0;
    }
  }
  return LatticeFunction(f.lattice_ptr(), std::move(out), std::move(valid));
}

}  // namespace reference

SparseMatrix::SparseMatrix(LatticePtr lattice, std::vector<Row> rows, std::vector<std::uint8_t> row_valid)
    : lattice_(std::move(lattice)), rows_(std::move(rows)), row_valid_(std::move(row_valid)) {
  if (!lattice_ || rows_.size() != lattice_->size() || row_valid_.size() != rows_.size()) {
    throw std::invalid_argument("SparseMatrix: one row per lattice point required");
  }
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  for (const auto& [col, value] : rows_[r]) {
    if (col == c) {
      return value;
    }
  }
  return {};
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t count = 0;
  for (const auto& row : rows_) {
    count += row.size();
  }
  return count;
}

LatticeFunction SparseMatrix::apply(const LatticeFunction& f) const {
  require_same_lattice(*lattice_, f.lattice(), "SparseMatrix::apply");
  std::vector<Rational> out(rows_.size());
  std::vector<std::uint8_t> valid(rows_.size(), 1);
  parallel_for(rows_.size(), [&](std::size_t r) {
    bool ok = row_valid(r);
    Rational acc;
    for (const auto& [col, value] : rows_[r]) {
      ok = ok && f.valid(col);
      acc += value * f[col];
    }
    valid[r] = ok ? 1 : 0;
    out[r] = ok ? std::move(acc) : Rational();
  });
  return LatticeFunction(lattice_, std::move(out), std::move(valid));
}

namespace {

SparseMatrix::Row compress(std::map<std::size_t, Rational>& acc) {
  SparseMatrix::Row row;
  for (auto& [col, value] : acc) {
    if (!value.is_zero()) {
      row.emplace_back(col, std::move(value));
    }
  }
  return row;
}

void multiply_row(const SparseMatrix& lhs, const SparseMatrix& rhs, std::size_t r,
                  SparseMatrix::Row& out, std::uint8_t& valid) {
  bool ok = lhs.row_valid(r);
  std::map<std::size_t, Rational> acc;
  for (const auto& [mid, lv] : lhs.row(r)) {
    ok = ok && rhs.row_valid(mid);
    for (const auto& [col, rv] : rhs.row(mid)) {
      acc[col] += lv * rv;
    }
  }
  out = compress(acc);
  valid = ok ? 1 : 0;
}

}  // namespace

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  require_same_lattice(*lattice_, rhs.lattice(), "SparseMatrix::multiply");
  std::vector<Row> rows(rows_.size());
  std::vector<std::uint8_t> valid(rows_.size());
  parallel_for(rows_.size(), [&](std::size_t r) { multiply_row(*this, rhs, r, rows[r], valid[r]); });
  return SparseMatrix(lattice_, std::move(rows), std::move(valid));
}

namespace serial {

SparseMatrix multiply(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  require_same_lattice(lhs.lattice(), rhs.lattice(), "serial::multiply");
  std::vector<SparseMatrix::Row> rows(lhs.size());
  std::vector<std::uint8_t> valid(lhs.size());
  for (std::size_t r = 0; r < lhs.size(); ++r) {
    multiply_row(lhs, rhs, r, rows[r], valid[r]);
  }
  return SparseMatrix(lhs.lattice_ptr(), std::move(rows), std::move(valid));
}

}  // namespace serial

SparseMatrix operator_matrix(const OperatorSpec& op, LatticePtr lattice) {
  require_operand(op, *lattice);
  const Lattice& lat = *lattice;
  std::vector<SparseMatrix::Row> rows(lat.size());
  std::vector<std::uint8_t> valid(lat.size(), 1);
  parallel_for(lat.size(), [&](std::size_t i) {
    const auto& x = lat.point(i);
    const Stencil s = operator_stencil(op, x.span());
    std::vector<std::size_t> idx;
    if (!resolve(op, lat, s, x.span(), idx)) {
      valid[i] = 0;
      return;
    }
    std::map<std::size_t, Rational> acc;
    acc[i] += s.diagonal;
    for (std::size_t t = 0; t < idx.size(); ++t) {
      acc[idx[t]] += s.neighbors[t].coeff;
    }
    rows[i] = compress(acc);
  });
  return SparseMatrix(std::move(lattice), std::move(rows), std::move(valid));
}

DefectResult commutator_defect(const OperatorSpec& op1, const OperatorSpec& op2, LatticePtr lattice) {
  if (op1.params.family != op2.params.family) {
    throw std::invalid_argument("commutator_defect: operators of different families");
  }
  const SparseMatrix m1 = operator_matrix(op1, lattice);
  const SparseMatrix m2 = operator_matrix(op2, lattice);
  const SparseMatrix ab = m1.multiply(m2);
  const SparseMatrix ba = m2.multiply(m1);
  DefectResult result;
  for (std::size_t r = 0; r < ab.size(); ++r) {
    if (!ab.row_valid(r) || !ba.row_valid(r)) {
      continue;
    }
    ++result.compared;
    std::map<std::size_t, Rational> diff;
    for (const auto& [c, v] : ab.row(r)) {
      diff[c] += v;
    }
    for (const auto& [c, v] : ba.row(r)) {
      diff[c] -= v;
    }
    for (const auto& [c, v] : diff) {
      result.max_defect = std::max(result.max_defect, v.abs());
    }
  }
  return result;
}

std::vector<std::vector<int>> monomial_exponents(int n, int d) {
  std::vector<std::vector<int>> out;
  for (const auto& p : enumerate_lattice(n, d)) {
    out.push_back(p.entries());
  }
  return out;
}

Rational monomial_value(std::span<const int> exponent, std::span<const int> x) {
  Rational v(1);
  for (std::size_t j = 0; j < exponent.size(); ++j) {
    v *= pow(Rational(x[j]), exponent[j]);
  }
  return v;
}

namespace {

LatticeFunction monomial_table(LatticePtr lattice, const std::vector<int>& e) {
  return LatticeFunction::tabulate(std::move(lattice),
                                   [&](const LatticePoint& x) { return monomial_value(e, x.span()); });
}

}  // namespace

DefectResult adjointness_defect(const OperatorSpec& op, const WeightTable& w) {
  const LatticePtr& lattice = w.lattice;
  DefectResult result;
  if (!op.params.bounded()) {
    const SparseMatrix m = operator_matrix(op, lattice);
    for (std::size_t x = 0; x < m.size(); ++x) {
      if (!m.row_valid(x)) {
        continue;
      }
      for (const auto& [y, v] : m.row(x)) {
        if (y == x || !m.row_valid(y)) {
          continue;
        }
        ++result.compared;
        const Rational d = v * w.values[x] - m.at(y, x) * w.values[y];
        result.max_defect = std::max(result.max_defect, d.abs());
      }
    }
    return result;
  }

  const auto exps = monomial_exponents(lattice->dim(), lattice->bound());
  std::vector<LatticeFunction> basis;
  std::vector<LatticeFunction> images;
  for (const auto& e : exps) {
    basis.push_back(monomial_table(lattice, e));
  }
  for (const auto& p : basis) {
    images.push_back(apply_operator(op, p));
  }
  std::vector<Rational> row_max(basis.size());
  parallel_for(basis.size(), [&](std::size_t i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Rational d = inner_product(images[i], basis[j], w) - inner_product(basis[i], images[j], w);
      row_max[i] = std::max(row_max[i], d.abs());
    }
  });
  for (std::size_t i = 0; i < basis.size(); ++i) {
    result.max_defect = std::max(result.max_defect, row_max[i]);
    result.compared += basis.size() - i - 1;
  }
  return result;
}

bool degree_invariance_check(const OperatorSpec& op, int degree, LatticePtr lattice) {
  if (degree < 0) {
    throw std::invalid_argument("degree_invariance_check: negative degree");
  }
  const auto exps = monomial_exponents(lattice->dim(), degree);
  std::vector<LatticeFunction> images;
  for (const auto& e : exps) {
    images.push_back(apply_operator(op, monomial_table(lattice, e)));
  }
  // Rows: points valid for every image.
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < lattice->size(); ++i) {
    bool ok = true;
    for (const auto& img : images) {
      ok = ok && img.valid(i);
    }
    if (ok) {
      rows.push_back(i);
    }
  }
  // rank([A | images]) == rank(A) puts every image in the span at once.
  DenseMatrix a(rows.size(), std::vector<Rational>(exps.size()));
  DenseMatrix augmented(rows.size(), std::vector<Rational>(exps.size() + images.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& x = lattice->point(rows[r]);
    for (std::size_t c = 0; c < exps.size(); ++c) {
      a[r][c] = monomial_value(exps[c], x.span());
      augmented[r][c] = a[r][c];
    }
    for (std::size_t c = 0; c < images.size(); ++c) {
      augmented[r][exps.size() + c] = images[c][rows[r]];
    }
  }
  return rank(std::move(augmented)) == rank(std::move(a));
}

}  // namespace mvop
