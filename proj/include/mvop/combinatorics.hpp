#pragma once

#include <span>

#include "mvop/rational.hpp"

namespace mvop {

/// Pochhammer symbol (a)_k = a(a+1)...(a+k-1), with (a)_0 = 1.
Rational rising_factorial(const Rational& a, int k);

mpz_class factorial(int k);

/// C(n, k) for integer n >= 0; zero outside 0 <= k <= n.
mpz_class binomial(int n, int k);

/// N! / (x_1! ... x_n! (N-|x|)!). Throws std::invalid_argument when |x| > N
/// or a coordinate is negative.
mpz_class multinomial(int total, std::span<const int> parts);

}  // namespace mvop
