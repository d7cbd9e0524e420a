#include "mvop/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace mvop {

namespace {

bool is_integer_literal(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    ++pos;
  }
  if (pos == text.size()) {
    return false;
  }
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
      return false;
    }
  }
  return true;
}

std::string strip(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = text.find_last_not_of(" \t");
  return std::string(text.substr(first, last - first + 1));
}

mpz_class parse_integer(std::string_view text) {
  std::string digits(text);
  if (!digits.empty() && digits.front() == '+') {
    digits.erase(0, 1);
  }
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_ = mpq_class(numerator, 1);
  value_ /= denominator;
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (sgn(value_.get_den()) == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string trimmed = strip(text);
  const auto slash = trimmed.find('/');
  const std::string_view view(trimmed);
  if (slash == std::string::npos) {
    if (!is_integer_literal(view)) {
      throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    }
    return Rational(parse_integer(view));
  }
  const auto num = view.substr(0, slash);
  const auto den = view.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  }
  const mpz_class d = parse_integer(den);
  if (sgn(d) == 0) {
    throw std::domain_error("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(mpq_class(parse_integer(num), d));
}

std::string Rational::str() const { return value_.get_str(10); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::abs() const {
  Rational out;
  out.value_ = ::abs(value_);
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    return Rational(1) / pow(base, -exponent);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace mvop
