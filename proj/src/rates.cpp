#include "mvop/rates.hpp"

namespace mvop {

namespace {

int total(std::span<const int> x) {
  int s = 0;
  for (int c : x) {
    s += c;
  }
  return s;
}

int coord(std::span<const int> x, int j) { return x[static_cast<std::size_t>(j - 1)]; }

}  // namespace

Rational BirthDeathRates::birth(std::span<const int> x, int j) const {
  const Rational& aj = params_.a_at(j);
  switch (params_.family) {
    case Family::hahn:
      return Rational(params_.N - total(x)) * (Rational(coord(x, j)) + aj);
    case Family::krawtchouk:
      return Rational(params_.N - total(x)) * aj;
    case Family::meixner:
      return (params_.beta + Rational(total(x))) * aj;
  }
  return {};
}

Rational BirthDeathRates::death(std::span<const int> x, int j) const {
  if (params_.family == Family::hahn) {
    return Rational(coord(x, j)) * (Rational(params_.N - total(x)) + params_.b);
  }
  return Rational(coord(x, j));
}

Rational BirthDeathRates::cross(std::span<const int> x, int j, int k) const {
  const Rational xj(coord(x, j));
  switch (params_.family) {
    case Family::hahn:
      return xj * (Rational(coord(x, k)) + params_.a_at(k));
    case Family::krawtchouk:
      return xj * params_.a_at(k);
    case Family::meixner:
      return -(xj * params_.a_at(k));
  }
  return {};
}

}  // namespace mvop
