#include "parlab/exact.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace parlab {

namespace {

constexpr mp_bitcnt_t kDecimalPrecisionBits = 512;

std::string format_mpf(const mpf_class& value, int digits) {
  int size = gmp_snprintf(nullptr, 0, "%.*Fg", digits, value.get_mpf_t());
  std::vector<char> buffer(static_cast<std::size_t>(size) + 1);
  gmp_snprintf(buffer.data(), buffer.size(), "%.*Fg", digits, value.get_mpf_t());
  return std::string(buffer.data());
}

}  // namespace

std::string to_string(const Rational& value) {
  Rational q(value);
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (negative) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos ||
        whole.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed decimal: " + text);
    }
    Integer num(whole + frac, 10);
    Integer den = pow(Integer(10), static_cast<unsigned>(frac.size()));
    Rational q(num, den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string to_decimal(const Rational& q, int digits) {
  mpf_class value(q, kDecimalPrecisionBits);
  return format_mpf(value, digits);
}

Rational pow(const Rational& base, unsigned exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
  Rational result(num, den);
  result.canonicalize();
  return result;
}

Integer pow(const Integer& base, unsigned exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

ExactNumber::ExactNumber(Rational rational_part, Rational sqrt2_part)
    : a_(std::move(rational_part)), b_(std::move(sqrt2_part)) {
  a_.canonicalize();
  b_.canonicalize();
}

const Rational& ExactNumber::rational() const {
  if (b_ != 0) throw std::domain_error("irrational value: " + str());
  return a_;
}

int ExactNumber::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the part with the larger square dominates.
  Rational a2 = a_ * a_;
  Rational b2 = 2 * b_ * b_;
  if (a2 == b2) return 0;  // unreachable for rationals, sqrt(2) is irrational
  return a2 > b2 ? sa : sb;
}

ExactNumber& ExactNumber::operator+=(const ExactNumber& rhs) {
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

ExactNumber& ExactNumber::operator-=(const ExactNumber& rhs) {
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

ExactNumber& ExactNumber::operator*=(const ExactNumber& rhs) {
  Rational a = a_ * rhs.a_ + 2 * b_ * rhs.b_;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

ExactNumber& ExactNumber::operator/=(const ExactNumber& rhs) {
  // x / (c + d r2) = x (c - d r2) / (c^2 - 2 d^2)
  Rational norm = rhs.a_ * rhs.a_ - 2 * rhs.b_ * rhs.b_;
  if (norm == 0) throw std::domain_error("division by zero in Q[sqrt2]");
  *this *= rhs.conjugate();
  a_ /= norm;
  b_ /= norm;
  return *this;
}

std::strong_ordering operator<=>(const ExactNumber& lhs, const ExactNumber& rhs) {
  int s = (lhs - rhs).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExactNumber ExactNumber::pow(unsigned exponent) const {
  ExactNumber result(1L);
  ExactNumber base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string ExactNumber::str() const {
  if (b_ == 0) return to_string(a_);
  std::string out = a_ == 0 ? "" : to_string(a_) + (b_ > 0 ? " + " : " - ");
  Rational mag = (a_ == 0 || b_ > 0) ? b_ : Rational(-b_);
  out += to_string(mag) + "*sqrt2";
  return out;
}

std::string ExactNumber::decimal(int digits) const {
  mpf_class r2(2, kDecimalPrecisionBits);
  mpf_sqrt(r2.get_mpf_t(), r2.get_mpf_t());
  mpf_class value(a_, kDecimalPrecisionBits);
  value += mpf_class(b_, kDecimalPrecisionBits) * r2;
  return format_mpf(value, digits);
}

double ExactNumber::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

std::ostream& operator<<(std::ostream& os, const ExactNumber& x) { return os << x.str(); }

}  // namespace parlab
