/**
 * @file series.hpp
 * @brief Truncated formal (Laurent) series over an exact ring.
 *
 * The computational substrate for every operator expansion: series carry an
 * explicit truncation order, and each operation propagates the tightest order
 * that is still guaranteed correct, so printed coefficients are never
 * contaminated by truncation. Supported rings are Rational and PolyM; a
 * quotient's leading coefficient must be invertible in the ring (a nonzero
 * Rational, or a degree-0 PolyM), which callers arrange by factoring out
 * monomials before dividing.
 */
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "lubbock/polym.hpp"
#include "lubbock/rational.hpp"

namespace lubbock {

template <typename R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static Rational invert(const Rational& x) { return x.inverse(); }
  static Rational from_rational(const Rational& q) { return q; }
};

template <>
struct RingTraits<PolyM> {
  static PolyM zero() { return PolyM(); }
  static PolyM one() { return PolyM(1); }
  static bool is_zero(const PolyM& x) { return x.is_zero(); }
  static PolyM invert(const PolyM& x) {
    if (x.is_zero() || !x.is_constant())
      throw std::domain_error("Series: leading coefficient not invertible; factor out the monomial first");
    return PolyM(x.constant().inverse());
  }
  static PolyM from_rational(const Rational& q) { return PolyM(q); }
};

template <typename R>
class Series {
 public:
  using Traits = RingTraits<R>;

  /// All-zero series known through order trunc.
  static Series zero_through(long trunc) { return Series(trunc); }

  /// Series from dense coefficients for orders low .. low+len-1.
  static Series from_coeffs(long low, std::vector<R> coeffs) {
    long trunc = low + static_cast<long>(coeffs.size()) - 1;
    return Series(low, trunc, std::move(coeffs));
  }

  static Series constant(const R& c, long trunc) {
    Series s(trunc);
    if (!Traits::is_zero(c)) {
      s.low_ = 0;
      s.coeffs_.assign(static_cast<size_t>(trunc + 1), Traits::zero());
      s.coeffs_[0] = c;
    }
    return s;
  }

  /// The identity series x, known through trunc.
  static Series identity(long trunc) { return monomial(Traits::one(), 1, trunc); }

  static Series monomial(const R& c, long k, long trunc) {
    Series s(trunc);
    if (!Traits::is_zero(c) && k <= trunc) {
      s.low_ = k;
      s.coeffs_.assign(static_cast<size_t>(trunc - k + 1), Traits::zero());
      s.coeffs_[0] = c;
    }
    return s;
  }

  Series(long low, long trunc, std::vector<R> coeffs) : low_(low), trunc_(trunc), coeffs_(std::move(coeffs)) {
    if (static_cast<long>(coeffs_.size()) != trunc_ - low_ + 1)
      throw std::invalid_argument("Series: coefficient count does not match order range");
    normalize();
  }

  bool is_zero() const { return coeffs_.empty(); }
  long trunc() const { return trunc_; }

  /// Lowest order with a (possibly) nonzero coefficient; trunc+1 for the zero series.
  long val() const { return coeffs_.empty() ? trunc_ + 1 : low_; }

  /// Coefficient at order k; exact zero below val(), error above trunc().
  R coeff(long k) const {
    if (k > trunc_) throw std::out_of_range("Series: coefficient order " + std::to_string(k) + " above truncation " + std::to_string(trunc_));
    if (coeffs_.empty() || k < low_) return Traits::zero();
    return coeffs_[static_cast<size_t>(k - low_)];
  }

  Series truncated(long t) const {
    if (t >= trunc_) return *this;
    Series s(t);
    if (!coeffs_.empty() && low_ <= t) {
      s.low_ = low_;
      s.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + (t - low_ + 1));
      s.normalize();
    }
    return s;
  }

  /// Multiplication by x^s (exponent shift).
  Series shifted(long s) const {
    Series r = *this;
    r.low_ += s;
    r.trunc_ += s;
    return r;
  }

  Series scaled(const R& c) const {
    if (Traits::is_zero(c)) return zero_through(trunc_);
    Series r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    r.normalize();
    return r;
  }

  Series operator-() const {
    Series r = *this;
    for (auto& x : r.coeffs_) x = Traits::zero() - x;
    return r;
  }

  Series operator+(const Series& o) const {
    long rt = std::min(trunc_, o.trunc_);
    long rl = std::min(val(), o.val());
    Series r(rt);
    if (rl <= rt) {
      r.low_ = rl;
      r.coeffs_.assign(static_cast<size_t>(rt - rl + 1), Traits::zero());
      for (long k = rl; k <= rt; ++k) {
        R v = safe_coeff(k) + o.safe_coeff(k);
        r.coeffs_[static_cast<size_t>(k - rl)] = v;
      }
      r.normalize();
    }
    return r;
  }

  Series operator-(const Series& o) const { return *this + (-o); }

  Series operator*(const Series& o) const {
    long rt = std::min(trunc_ + o.val(), o.trunc_ + val());
    if (is_zero() || o.is_zero()) return zero_through(rt);
    long rl = low_ + o.low_;
    Series r(rt);
    if (rl > rt) return r;
    r.low_ = rl;
    r.coeffs_.assign(static_cast<size_t>(rt - rl + 1), Traits::zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (Traits::is_zero(coeffs_[i])) continue;
      long ei = low_ + static_cast<long>(i);
      for (size_t j = 0; j < o.coeffs_.size(); ++j) {
        long e = ei + o.low_ + static_cast<long>(j);
        if (e > rt) break;
        r.coeffs_[static_cast<size_t>(e - rl)] += coeffs_[i] * o.coeffs_[j];
      }
    }
    r.normalize();
    return r;
  }

  /// Multiplicative inverse; requires an invertible leading coefficient.
  Series inverse() const {
    if (is_zero()) throw std::domain_error("Series: division by zero series");
    long v = low_;
    R linv = Traits::invert(coeffs_[0]);
    long w = trunc_ - v;  // unit-part working order
    std::vector<R> b(static_cast<size_t>(w + 1), Traits::zero());
    b[0] = linv;
    for (long n = 1; n <= w; ++n) {
      R acc = Traits::zero();
      for (long k = 1; k <= n; ++k)
        acc += coeffs_[static_cast<size_t>(k)] * b[static_cast<size_t>(n - k)];
      b[static_cast<size_t>(n)] = Traits::zero() - linv * acc;
    }
    return from_coeffs(-v, std::move(b)).truncated(trunc_ - 2 * v);
  }

  Series operator/(const Series& o) const { return *this * o.inverse(); }

  /// Composition f(g(x)); g must have no constant term, f no principal part.
  Series compose(const Series& g) const {
    if (!coeffs_.empty() && low_ < 0) throw std::domain_error("Series: compose requires a plain power series on the left");
    if (g.is_zero()) return constant(coeff_or_zero(0), g.trunc_);
    if (g.val() < 1) throw std::domain_error("Series: compose requires zero constant term in the inner series");
    long t = std::min(g.trunc_, (trunc_ + 1) * g.val() - 1);
    std::vector<R> gd(static_cast<size_t>(t + 1), Traits::zero());
    for (long k = g.val(); k <= std::min(t, g.trunc_); ++k) gd[static_cast<size_t>(k)] = g.coeff(k);
    std::vector<R> acc(static_cast<size_t>(t + 1), Traits::zero());
    for (long k = trunc_; k >= 0; --k) {
      acc = dense_mul(acc, gd, t);
      acc[0] += coeff_or_zero(k);
    }
    return from_coeffs(0, std::move(acc));
  }

  /// Compositional inverse; requires val() == 1 with invertible linear coefficient.
  Series revert() const {
    if (val() != 1) throw std::domain_error("Series: revert requires valuation exactly 1");
    R c1inv = Traits::invert(coeffs_[0]);
    long t = trunc_;
    std::vector<R> g(static_cast<size_t>(t + 1), Traits::zero());
    if (t >= 1) g[1] = c1inv;
    for (long n = 2; n <= t; ++n) {
      Series partial = from_coeffs(0, std::vector<R>(g.begin(), g.begin() + n)).truncated(n);
      // pad knowledge through n: coefficients above stored range are exact zeros here
      Series gp = partial;
      gp.trunc_ = n;
      if (!gp.coeffs_.empty()) gp.coeffs_.resize(static_cast<size_t>(n - gp.low_ + 1), Traits::zero());
      R e = this->truncated(n).compose(gp).coeff(n);
      g[static_cast<size_t>(n)] = Traits::zero() - c1inv * e;
    }
    return from_coeffs(0, std::move(g));
  }

  /// Coefficientwise equality up to the smaller truncation order.
  bool agrees_with(const Series& o) const {
    long t = std::min(trunc_, o.trunc_);
    for (long k = std::min(val(), o.val()); k <= t; ++k)
      if (!(safe_coeff(k) == o.safe_coeff(k))) return false;
    return true;
  }

 private:
  explicit Series(long trunc) : low_(0), trunc_(trunc) {}

  R safe_coeff(long k) const {
    if (coeffs_.empty() || k < low_ || k > trunc_) return Traits::zero();
    return coeffs_[static_cast<size_t>(k - low_)];
  }
  R coeff_or_zero(long k) const { return safe_coeff(k); }

  static std::vector<R> dense_mul(const std::vector<R>& a, const std::vector<R>& b, long t) {
    std::vector<R> r(static_cast<size_t>(t + 1), Traits::zero());
    for (size_t i = 0; i < a.size(); ++i) {
      if (Traits::is_zero(a[i])) continue;
      for (size_t j = 0; j + i <= static_cast<size_t>(t) && j < b.size(); ++j)
        r[i + j] += a[i] * b[j];
    }
    return r;
  }

  void normalize() {
    size_t skip = 0;
    while (skip < coeffs_.size() && Traits::is_zero(coeffs_[skip])) ++skip;
    if (skip == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
    } else if (skip > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + skip);
      low_ += static_cast<long>(skip);
    }
  }

  long low_;
  long trunc_;
  std::vector<R> coeffs_;
};

/// Applies a Maclaurin coefficient list (index = power) to a series with zero
/// constant term, in the series' own ring.
template <typename R>
Series<R> apply_maclaurin(const std::vector<Rational>& mac, const Series<R>& f) {
  if (!f.is_zero() && f.val() < 1) throw std::domain_error("Series: Maclaurin substitution requires zero constant term");
  std::vector<R> lifted(mac.size());
  for (size_t i = 0; i < mac.size(); ++i) lifted[i] = RingTraits<R>::from_rational(mac[i]);
  return Series<R>::from_coeffs(0, std::move(lifted)).truncated(f.trunc()).compose(f);
}

template <typename R>
Series<R> exp_series(const Series<R>& f) {
  std::vector<Rational> mac(static_cast<size_t>(f.trunc() + 1));
  for (size_t k = 0; k < mac.size(); ++k) mac[k] = factorial(static_cast<unsigned>(k)).inverse();
  return apply_maclaurin(mac, f);
}

template <typename R>
Series<R> sinh_series(const Series<R>& f) {
  std::vector<Rational> mac(static_cast<size_t>(f.trunc() + 1), Rational(0));
  for (size_t k = 1; k < mac.size(); k += 2) mac[k] = factorial(static_cast<unsigned>(k)).inverse();
  return apply_maclaurin(mac, f);
}

template <typename R>
Series<R> cosh_series(const Series<R>& f) {
  std::vector<Rational> mac(static_cast<size_t>(f.trunc() + 1), Rational(0));
  for (size_t k = 0; k < mac.size(); k += 2) mac[k] = factorial(static_cast<unsigned>(k)).inverse();
  return apply_maclaurin(mac, f);
}

/// log of a series with constant term exactly 1.
template <typename R>
Series<R> log_series(const Series<R>& f) {
  if (!(f.coeff(0) == RingTraits<R>::one()))
    throw std::domain_error("Series: log requires constant term 1");
  Series<R> u = f - Series<R>::constant(RingTraits<R>::one(), f.trunc());
  std::vector<Rational> mac(static_cast<size_t>(f.trunc() + 1), Rational(0));
  for (size_t k = 1; k < mac.size(); ++k)
    mac[k] = Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
  return apply_maclaurin(mac, u);
}

/// Exact Maclaurin coefficients of tanh through order t (index = power).
inline std::vector<Rational> tanh_maclaurin(long t) {
  Series<Rational> x = Series<Rational>::identity(t);
  Series<Rational> q = sinh_series(x) / cosh_series(x);
  std::vector<Rational> mac(static_cast<size_t>(t + 1), Rational(0));
  for (long k = q.val(); k <= t; ++k) mac[static_cast<size_t>(k)] = q.coeff(k);
  return mac;
}

template <typename R>
Series<R> tanh_series(const Series<R>& f) {
  return apply_maclaurin(tanh_maclaurin(f.trunc()), f);
}

/// Lifts a Rational-coefficient series into the PolyM ring.
inline Series<PolyM> lift_to_polym(const Series<Rational>& f) {
  if (f.is_zero()) return Series<PolyM>::zero_through(f.trunc());
  std::vector<PolyM> c(static_cast<size_t>(f.trunc() - f.val() + 1));
  for (long k = f.val(); k <= f.trunc(); ++k) c[static_cast<size_t>(k - f.val())] = PolyM(f.coeff(k));
  long low = f.val();
  return Series<PolyM>(low, f.trunc(), std::move(c));
}

/// Argument scaling f(x) -> f(c x), exact in the target ring.
template <typename R>
Series<R> scale_argument(const Series<Rational>& f, const R& c) {
  std::vector<R> out(static_cast<size_t>(f.trunc() + 1), RingTraits<R>::zero());
  R p = RingTraits<R>::one();
  for (long k = 0; k <= f.trunc(); ++k) {
    if (k > 0) p = p * c;
    if (k >= f.val()) out[static_cast<size_t>(k)] = p * RingTraits<R>::from_rational(f.coeff(k));
  }
  return Series<R>::from_coeffs(0, std::move(out));
}

/// delta = 2 sinh(x/2): coefficient 2/(2^k k!) at odd k.
inline Series<Rational> series_central_delta(long t) {
  std::vector<Rational> c(static_cast<size_t>(t + 1), Rational(0));
  for (long k = 1; k <= t; k += 2)
    c[static_cast<size_t>(k)] = Rational(2) / (Rational(2).pow(k) * factorial(static_cast<unsigned>(k)));
  return Series<Rational>::from_coeffs(0, std::move(c));
}

/// mu = cosh(x/2): coefficient 1/(2^k k!) at even k.
inline Series<Rational> series_central_mean(long t) {
  std::vector<Rational> c(static_cast<size_t>(t + 1), Rational(0));
  for (long k = 0; k <= t; k += 2)
    c[static_cast<size_t>(k)] = Rational(1) / (Rational(2).pow(k) * factorial(static_cast<unsigned>(k)));
  return Series<Rational>::from_coeffs(0, std::move(c));
}

/// Delta = e^x - 1.
inline Series<Rational> series_forward_delta(long t) {
  std::vector<Rational> c(static_cast<size_t>(t + 1), Rational(0));
  for (long k = 1; k <= t; ++k) c[static_cast<size_t>(k)] = factorial(static_cast<unsigned>(k)).inverse();
  return Series<Rational>::from_coeffs(0, std::move(c));
}

}  // namespace lubbock
