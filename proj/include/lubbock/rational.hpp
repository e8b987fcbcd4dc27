/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational scalar.
 *
 * Every numeric quantity in the library is built from this type: polynomial
 * coefficients, series coefficients, sample values in exact summation mode.
 * Values are immutable in spirit (all operations return fresh objects), always
 * stored in lowest terms with a positive denominator, and never rounded.
 */
#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lubbock {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<long int>(n)) {}
  Rational(unsigned n) : v_(static_cast<unsigned long>(n)) {}
  Rational(unsigned long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  /// Parses "p", "p/q", or a decimal literal such as "0.25" or "1.5e-3".
  static std::optional<Rational> parse(std::string_view text);

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return mpq_cmp(v_.get_mpq_t(), o.v_.get_mpq_t()) == 0; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return mpq_cmp(v_.get_mpq_t(), o.v_.get_mpq_t()) < 0; }
  bool operator<=(const Rational& o) const { return mpq_cmp(v_.get_mpq_t(), o.v_.get_mpq_t()) <= 0; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// Integer power; negative exponents invert (requires nonzero base).
  Rational pow(long e) const {
    if (e < 0) return (Rational(1) / *this).pow(-e);
    Rational r(1), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  /// Reciprocal; throws on zero.
  Rational inverse() const { return Rational(1) / *this; }

  /// Exact floor toward negative infinity as an integer Rational.
  Rational floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Rational(q);
  }

  double to_double() const { return v_.get_d(); }
  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  std::string to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class v_;
};

inline Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

inline std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::string s(text);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) return std::nullopt;
    try {
      mpq_class q{mpz_class(num, 10), mpz_class(den, 10)};
      if (q.get_den() == 0) return std::nullopt;
      q.canonicalize();
      return Rational(q);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  // Decimal literal: [+-]digits[.digits][(e|E)[+-]digits]
  size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
  std::string digits;
  long frac_len = 0, expo = 0;
  bool any = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { digits += s[i++]; any = true; }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      ++frac_len;
      any = true;
    }
  }
  if (!any) return std::nullopt;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
    if (i >= s.size()) return std::nullopt;
    long ev = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ev = ev * 10 + (s[i++] - '0');
    expo = eneg ? -ev : ev;
  }
  if (i != s.size()) return std::nullopt;
  mpz_class mant(digits.empty() ? "0" : digits, 10);
  Rational r((mpz_class(mant)));
  long shift = expo - frac_len;
  Rational ten(10);
  r = r * ten.pow(shift);
  return neg ? -r : r;
}

}  // namespace lubbock
