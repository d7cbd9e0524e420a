#include "mvop/linalg.hpp"

#include <stdexcept>

namespace mvop {

std::size_t rank(DenseMatrix m) {
  if (m.empty()) {
    return 0;
  }
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c].is_zero()) {
      ++pivot;
    }
    if (pivot == rows) {
      continue;
    }
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) {
        continue;
      }
      const Rational factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] -= factor * m[r][j];
      }
    }
    ++r;
  }
  return r;
}

bool in_column_span(const DenseMatrix& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("in_column_span: row count mismatch");
  }
  DenseMatrix augmented = a;
  for (std::size_t i = 0; i < augmented.size(); ++i) {
    augmented[i].push_back(b[i]);
  }
  return rank(augmented) == rank(a);
}

}  // namespace mvop
