#pragma once

#include <vector>

#include "mvop/rational.hpp"

namespace mvop {

using DenseMatrix = std::vector<std::vector<Rational>>;

/// Exact rank by Gaussian elimination over the rationals.
std::size_t rank(DenseMatrix m);

/// True iff b lies in the column span of a.
bool in_column_span(const DenseMatrix& a, const std::vector<Rational>& b);

}  // namespace mvop
