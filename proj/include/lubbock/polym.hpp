/**
 * @file polym.hpp
 * @brief Exact univariate polynomials in the step-ratio symbol m.
 *
 * Coefficient families are stored once, symbolically, as polynomials in m
 * with rational coefficients; evaluating at a concrete step ratio is a
 * Horner pass. Coefficients are ascending by degree with no trailing zeros,
 * so the zero polynomial is the empty vector and degree() is size()-1.
 */
#pragma once

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lubbock/rational.hpp"

namespace lubbock {

class PolyM {
 public:
  PolyM() = default;
  PolyM(int c) { if (c != 0) c_.push_back(Rational(c)); }
  PolyM(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }
  explicit PolyM(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// The monomial m (degree 1, unit coefficient).
  static PolyM var() { return PolyM(std::vector<Rational>{Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational constant() const { return coeff(0); }

  PolyM operator-() const {
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return PolyM(std::move(r));
  }
  PolyM operator+(const PolyM& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return PolyM(std::move(r));
  }
  PolyM operator-(const PolyM& o) const { return *this + (-o); }
  PolyM operator*(const PolyM& o) const {
    if (is_zero() || o.is_zero()) return PolyM();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return PolyM(std::move(r));
  }
  PolyM& operator+=(const PolyM& o) { *this = *this + o; return *this; }
  PolyM& operator-=(const PolyM& o) { *this = *this - o; return *this; }
  PolyM& operator*=(const PolyM& o) { *this = *this * o; return *this; }

  PolyM operator*(const Rational& s) const {
    if (s.is_zero()) return PolyM();
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return PolyM(std::move(r));
  }
  PolyM operator/(const Rational& s) const { return *this * s.inverse(); }

  bool operator==(const PolyM& o) const { return c_ == o.c_; }
  bool operator!=(const PolyM& o) const { return !(*this == o); }

  /// Evaluates at a rational point by Horner's rule.
  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// Exact polynomial division; throws if the remainder is nonzero.
  PolyM divide_exact(const PolyM& d) const {
    if (d.is_zero()) throw std::domain_error("PolyM: division by zero polynomial");
    std::vector<Rational> rem = c_, q;
    long dq = degree() - d.degree();
    if (dq < 0) {
      if (!is_zero()) throw std::domain_error("PolyM: inexact division");
      return PolyM();
    }
    q.assign(dq + 1, Rational(0));
    const Rational lead = d.c_.back();
    for (long k = dq; k >= 0; --k) {
      Rational f = rem[k + d.degree()] / lead;
      q[k] = f;
      if (!f.is_zero())
        for (long j = 0; j <= d.degree(); ++j) rem[k + j] -= f * d.c_[j];
    }
    for (const auto& r : rem)
      if (!r.is_zero()) throw std::domain_error("PolyM: inexact division");
    return PolyM(std::move(q));
  }

  /// Ascending coefficient strings, e.g. ["-1/12", "0", "1/12"].
  std::vector<std::string> coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.to_string());
    if (out.empty()) out.push_back("0");
    return out;
  }

  /// Human display such as "(m^2 - 1)/12" is overkill; prints ascending terms.
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      if (!s.empty()) s += c_[i].sign() > 0 ? " + " : " - ";
      else if (c_[i].sign() < 0) s += "-";
      Rational a = c_[i].abs();
      if (i == 0) {
        s += a.to_string();
      } else {
        if (a != Rational(1)) s += a.to_string() + "*";
        s += i == 1 ? "m" : ("m^" + std::to_string(i));
      }
    }
    return s.empty() ? "0" : s;
  }

  friend std::ostream& operator<<(std::ostream& os, const PolyM& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline PolyM operator*(const Rational& s, const PolyM& p) { return p * s; }

/// Generalized binomial coefficient C(t, k) for polynomial (or rational) t.
inline PolyM binom(const PolyM& t, unsigned k) {
  PolyM r(1);
  for (unsigned i = 0; i < k; ++i) r *= (t - PolyM(static_cast<int>(i)));
  return r / factorial(k);
}

inline Rational binom(const Rational& t, unsigned k) {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) r *= (t - Rational(static_cast<int>(i)));
  return r / factorial(k);
}

}  // namespace lubbock
