#include "mvop/lattice_function.hpp"

#include <stdexcept>
#include <string>

#include "mvop/parallel.hpp"

namespace mvop {

LatticeFunction::LatticeFunction(LatticePtr lattice, std::vector<Rational> values)
    : lattice_(std::move(lattice)), values_(std::move(values)) {
  if (!lattice_ || values_.size() != lattice_->size()) {
    throw std::invalid_argument("LatticeFunction: one value per lattice point required");
  }
}

LatticeFunction::LatticeFunction(LatticePtr lattice, std::vector<Rational> values,
                                 std::vector<std::uint8_t> valid)
    : LatticeFunction(std::move(lattice), std::move(values)) {
  if (!valid.empty() && valid.size() != values_.size()) {
    throw std::invalid_argument("LatticeFunction: validity mask size mismatch");
  }
  bool any_invalid = false;
  for (auto v : valid) {
    any_invalid = any_invalid || v == 0;
  }
  if (any_invalid) {
    valid_ = std::move(valid);
  }
}

LatticeFunction LatticeFunction::constant(LatticePtr lattice, const Rational& value) {
  const auto n = lattice->size();
  return LatticeFunction(std::move(lattice), std::vector<Rational>(n, value));
}

LatticeFunction LatticeFunction::delta(LatticePtr lattice, std::size_t index) {
  std::vector<Rational> values(lattice->size());
  values.at(index) = 1;
  return LatticeFunction(std::move(lattice), std::move(values));
}

LatticeFunction LatticeFunction::tabulate(LatticePtr lattice,
                                          const std::function<Rational(const LatticePoint&)>& fn) {
  std::vector<Rational> values(lattice->size());
  const Lattice& lat = *lattice;
  parallel_for(values.size(), [&](std::size_t i) { values[i] = fn(lat.point(i)); });
  return LatticeFunction(std::move(lattice), std::move(values));
}

bool LatticeFunction::all_valid() const { return valid_.empty(); }

std::size_t LatticeFunction::valid_count() const {
  if (valid_.empty()) {
    return values_.size();
  }
  std::size_t count = 0;
  for (auto v : valid_) {
    count += v != 0 ? 1 : 0;
  }
  return count;
}

std::optional<Rational> LatticeFunction::at(std::span<const int> x) const {
  const auto idx = lattice_->index_of(x);
  if (!idx) {
    return std::nullopt;
  }
  return values_[*idx];
}

Rational LatticeFunction::max_abs() const {
  Rational best;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (valid(i)) {
      Rational a = values_[i].abs();
      if (a > best) {
        best = std::move(a);
      }
    }
  }
  return best;
}

namespace {

std::vector<std::uint8_t> merge_validity(const LatticeFunction& lhs, const LatticeFunction& rhs) {
  if (lhs.all_valid() && rhs.all_valid()) {
    return {};
  }
  std::vector<std::uint8_t> out(lhs.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (lhs.valid(i) && rhs.valid(i)) ? 1 : 0;
  }
  return out;
}

}  // namespace

LatticeFunction LatticeFunction::operator+(const LatticeFunction& rhs) const {
  require_same_lattice(*lattice_, rhs.lattice(), "LatticeFunction::operator+");
  std::vector<Rational> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = values_[i] + rhs[i];
  }
  return LatticeFunction(lattice_, std::move(out), merge_validity(*this, rhs));
}

LatticeFunction LatticeFunction::operator-(const LatticeFunction& rhs) const {
  require_same_lattice(*lattice_, rhs.lattice(), "LatticeFunction::operator-");
  std::vector<Rational> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = values_[i] - rhs[i];
  }
  return LatticeFunction(lattice_, std::move(out), merge_validity(*this, rhs));
}

LatticeFunction LatticeFunction::operator*(const Rational& scale) const {
  std::vector<Rational> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = values_[i] * scale;
  }
  return LatticeFunction(lattice_, std::move(out), valid_);
}

void require_same_lattice(const Lattice& lhs, const Lattice& rhs, const char* what) {
  if (!(lhs == rhs)) {
    throw std::invalid_argument(std::string(what) + ": lattice mismatch");
  }
}

namespace serial {

LatticeFunction tabulate(LatticePtr lattice, const std::function<Rational(const LatticePoint&)>& fn) {
  std::vector<Rational> values;
  values.reserve(lattice->size());
  for (const auto& x : lattice->points()) {
    values.push_back(fn(x));
  }
  return LatticeFunction(std::move(lattice), std::move(values));
}

}  // namespace serial

}  // namespace mvop
