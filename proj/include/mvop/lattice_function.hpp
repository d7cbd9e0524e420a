#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mvop/lattice.hpp"
#include "mvop/rational.hpp"

namespace mvop {

/// A total table of Rational values over an enumerated lattice.
///
/// Entries may be flagged invalid; this only happens for operator images on
/// a truncated Meixner box, where the stencil at the frontier would read
/// outside the box.
class LatticeFunction {
 public:
  LatticeFunction(LatticePtr lattice, std::vector<Rational> values);
  LatticeFunction(LatticePtr lattice, std::vector<Rational> values, std::vector<std::uint8_t> valid);

  static LatticeFunction constant(LatticePtr lattice, const Rational& value);
  static LatticeFunction delta(LatticePtr lattice, std::size_t index);

  /// Tabulates fn over the lattice (points evaluated in parallel; fn must be
  /// safe to call concurrently).
  static LatticeFunction tabulate(LatticePtr lattice,
                                  const std::function<Rational(const LatticePoint&)>& fn);

  const Lattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  std::size_t size() const { return values_.size(); }

  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Rational>& values() const { return values_; }

  bool valid(std::size_t i) const { return valid_.empty() || valid_[i] != 0; }
  bool all_valid() const;
  std::size_t valid_count() const;
  const std::vector<std::uint8_t>& validity() const { return valid_; }

  /// Value at x, or nullopt when x is outside the lattice.
  std::optional<Rational> at(std::span<const int> x) const;

  /// Largest |f(x)| over valid entries.
  Rational max_abs() const;

  LatticeFunction operator+(const LatticeFunction& rhs) const;
  LatticeFunction operator-(const LatticeFunction& rhs) const;
  LatticeFunction operator*(const Rational& scale) const;

 private:
  LatticePtr lattice_;
  std::vector<Rational> values_;
  std::vector<std::uint8_t> valid_;  // empty when every entry is valid
};

/// Throws std::invalid_argument unless both functions live on equal lattices.
void require_same_lattice(const Lattice& lhs, const Lattice& rhs, const char* what);

namespace serial {
LatticeFunction tabulate(LatticePtr lattice, const std::function<Rational(const LatticePoint&)>& fn);
}  // namespace serial

}  // namespace mvop
