#ifndef PARLAB_EXACT_HPP
#define PARLAB_EXACT_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace parlab {

using Rational = mpq_class;
using Integer = mpz_class;

// Canonical "num/den" rendering ("3" for integers, "-1/2" for negatives).
std::string to_string(const Rational& q);

// Parses "a", "a/b" or a finite decimal like "0.1"; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

// Decimal rendering with `digits` significant digits (default 15).
std::string to_decimal(const Rational& q, int digits = 15);

Rational pow(const Rational& base, unsigned exponent);
Integer pow(const Integer& base, unsigned exponent);

/**
 * An element a + b*sqrt(2) of the quadratic field Q[sqrt 2].
 *
 * All arithmetic is exact. Ordering is decided exactly by comparing a^2
 * against 2*b^2 when the two parts have opposite signs, so comparisons
 * never go through floating point.
 */
class ExactNumber {
 public:
  ExactNumber() = default;
  ExactNumber(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  ExactNumber(const Rational& value) : a_(value) { a_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  ExactNumber(Rational rational_part, Rational sqrt2_part);

  static ExactNumber sqrt2() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_rational() const { return b_ == 0; }
  // Throws std::domain_error when the sqrt(2) coefficient is nonzero.
  const Rational& rational() const;

  // -1, 0 or +1.
  int sign() const;
  ExactNumber conjugate() const { return {a_, -b_}; }
  ExactNumber abs() const { return sign() < 0 ? -*this : *this; }

  ExactNumber& operator+=(const ExactNumber& rhs);
  ExactNumber& operator-=(const ExactNumber& rhs);
  ExactNumber& operator*=(const ExactNumber& rhs);
  // Throws std::domain_error on division by zero.
  ExactNumber& operator/=(const ExactNumber& rhs);

  friend ExactNumber operator+(ExactNumber lhs, const ExactNumber& rhs) { return lhs += rhs; }
  friend ExactNumber operator-(ExactNumber lhs, const ExactNumber& rhs) { return lhs -= rhs; }
  friend ExactNumber operator*(ExactNumber lhs, const ExactNumber& rhs) { return lhs *= rhs; }
  friend ExactNumber operator/(ExactNumber lhs, const ExactNumber& rhs) { return lhs /= rhs; }
  ExactNumber operator-() const { return {-a_, -b_}; }

  friend bool operator==(const ExactNumber& lhs, const ExactNumber& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }
  friend std::strong_ordering operator<=>(const ExactNumber& lhs, const ExactNumber& rhs);

  // Binary exponentiation; exponent 0 yields 1.
  ExactNumber pow(unsigned exponent) const;

  // "a" or "a + b*sqrt2" with exact rationals.
  std::string str() const;
  // Decimal approximation, `digits` significant digits.
  std::string decimal(int digits = 15) const;
  double to_double() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactNumber& x);

}  // namespace parlab

#endif  // PARLAB_EXACT_HPP
