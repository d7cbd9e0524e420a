#include "mvop/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace mvop {

Rational rising_factorial(const Rational& a, int k) {
  if (k < 0) {
    throw std::invalid_argument("rising_factorial: negative length");
  }
  Rational out(1);
  Rational factor = a;
  for (int j = 0; j < k; ++j) {
    out *= factor;
    if (out.is_zero()) {
      break;
    }
    factor += 1;
  }
  return out;
}

mpz_class factorial(int k) {
  if (k < 0) {
    throw std::invalid_argument("factorial: negative argument");
  }
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

mpz_class binomial(int n, int k) {
  if (n < 0) {
    throw std::invalid_argument("binomial: negative n");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class multinomial(int total, std::span<const int> parts) {
  int sum = 0;
  for (int p : parts) {
    if (p < 0) {
      throw std::invalid_argument("multinomial: negative coordinate");
    }
    sum += p;
  }
  if (sum > total) {
    throw std::invalid_argument("multinomial: |x| exceeds N");
  }
  mpz_class out = factorial(total);
  for (int p : parts) {
    out /= factorial(p);
  }
  out /= factorial(total - sum);
  return out;
}

}  // namespace mvop
