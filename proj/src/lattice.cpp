#include "mvop/lattice.hpp"

#include <limits>
#include <stdexcept>

namespace mvop {

namespace {

constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

// Appends all compositions of `remaining` into the coordinates from `pos` on,
// in lexicographically ascending order.
void compositions(std::vector<int>& current, std::size_t pos, int remaining,
                  std::vector<LatticePoint>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    current[pos] = v;
    compositions(current, pos + 1, remaining - v, out);
  }
}

}  // namespace

Lattice::Lattice(int dim, int bound) : dim_(dim), bound_(bound) {
  if (dim < 1) {
    throw std::invalid_argument("Lattice: dimension must be positive");
  }
  if (bound < 0) {
    throw std::invalid_argument("Lattice: bound must be non-negative");
  }
  std::vector<int> current(static_cast<std::size_t>(dim), 0);
  for (int s = 0; s <= bound; ++s) {
    compositions(current, 0, s, points_);
  }

  std::size_t box = 1;
  for (int d = 0; d < dim; ++d) {
    box *= static_cast<std::size_t>(bound + 1);
  }
  box_index_.assign(box, kAbsent);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    std::size_t flat = 0;
    for (int c : points_[i]) {
      flat = flat * static_cast<std::size_t>(bound + 1) + static_cast<std::size_t>(c);
    }
    box_index_[flat] = i;
  }
}

std::optional<std::size_t> Lattice::index_of(std::span<const int> x) const {
  if (x.size() != static_cast<std::size_t>(dim_)) {
    return std::nullopt;
  }
  std::size_t flat = 0;
  for (int c : x) {
    if (c < 0 || c > bound_) {
      return std::nullopt;
    }
    flat = flat * static_cast<std::size_t>(bound_ + 1) + static_cast<std::size_t>(c);
  }
  const std::size_t idx = box_index_[flat];
  if (idx == kAbsent) {
    return std::nullopt;
  }
  return idx;
}

LatticePtr make_lattice(int dim, int bound) { return std::make_shared<const Lattice>(dim, bound); }

std::vector<LatticePoint> enumerate_lattice(int dim, int bound) {
  return Lattice(dim, bound).points();
}

std::size_t lattice_size(int dim, int bound) {
  // C(bound + dim, dim) computed incrementally; exact at desk-scale sizes.
  std::size_t out = 1;
  for (int k = 1; k <= dim; ++k) {
    out = out * static_cast<std::size_t>(bound + k) / static_cast<std::size_t>(k);
  }
  return out;
}

int tail_sum(std::span<const int> x, int i) {
  const int n = static_cast<int>(x.size());
  if (i < 1 || i > n - 1) {
    throw std::invalid_argument("tail_sum: index outside [1, n-1]");
  }
  int sum = 0;
  for (int k = i; k < n; ++k) {
    sum += x[static_cast<std::size_t>(k)];
  }
  return sum;
}

}  // namespace mvop
