#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mvop {

/// Fixed-length vector of small integers, tagged so lattice points and degree
/// labels cannot be mixed up.
template <class Tag>
class IndexVector {
 public:
  IndexVector() = default;
  explicit IndexVector(std::vector<int> entries) : entries_(std::move(entries)) {}
  IndexVector(std::initializer_list<int> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::span<const int> span() const { return entries_; }
  const std::vector<int>& entries() const { return entries_; }

  int total() const {
    int sum = 0;
    for (int e : entries_) {
      sum += e;
    }
    return sum;
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      out += (i ? "," : "") + std::to_string(entries_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const IndexVector&, const IndexVector&) = default;
  friend auto operator<=>(const IndexVector&, const IndexVector&) = default;

 private:
  std::vector<int> entries_;
};

using LatticePoint = IndexVector<struct LatticePointTag>;

/// Degree label m = (m_0, m_1, ..., m_{n-1}); m_0 is the radial degree.
using DegreeMultiIndex = IndexVector<struct DegreeTag>;

/// The simplex {x in N_0^n : |x| <= bound} in graded-lexicographic order:
/// first by |x|, then lexicographically ascending in (x_1, ..., x_n).
class Lattice {
 public:
  Lattice(int dim, int bound);

  int dim() const { return dim_; }
  int bound() const { return bound_; }
  std::size_t size() const { return points_.size(); }
  const LatticePoint& point(std::size_t index) const { return points_[index]; }
  const std::vector<LatticePoint>& points() const { return points_; }

  /// Index of x in the canonical order, or nullopt when x is outside.
  std::optional<std::size_t> index_of(std::span<const int> x) const;
  bool contains(std::span<const int> x) const { return index_of(x).has_value(); }

  friend bool operator==(const Lattice& lhs, const Lattice& rhs) {
    return lhs.dim_ == rhs.dim_ && lhs.bound_ == rhs.bound_;
  }

 private:
  int dim_;
  int bound_;
  std::vector<LatticePoint> points_;
  std::vector<std::size_t> box_index_;  // dense (bound+1)^dim lookup
};

using LatticePtr = std::shared_ptr<const Lattice>;

LatticePtr make_lattice(int dim, int bound);

/// All x in N_0^n with |x| <= N in graded-lexicographic order.
std::vector<LatticePoint> enumerate_lattice(int dim, int bound);

/// Number of points of the simplex lattice, C(bound + dim, dim).
std::size_t lattice_size(int dim, int bound);

/// x_{>i} = x_{i+1} + ... + x_n for 1 <= i <= n-1 (1-based i).
int tail_sum(std::span<const int> x, int i);

}  // namespace mvop
