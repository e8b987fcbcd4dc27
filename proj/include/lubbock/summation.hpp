/**
 * @file summation.hpp
 * @brief Accelerated summation of tabulated functions from coarse samples.
 *
 * Estimates a fine-grid sum over hn points from n coarse intervals plus
 * endpoint difference corrections. Two engines: the forward variant targets
 * the fine grid sum and corrects with forward differences at both ends; the
 * central variant targets the fine trapezoid sum (interior fine points plus
 * half the endpoint values) and corrects a coarse trapezoid term with mean
 * central differences. Both work in exact rational or double arithmetic;
 * with rational samples every polynomial of degree < K is summed exactly.
 */
#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "lubbock/families.hpp"
#include "lubbock/polym.hpp"
#include "lubbock/rational.hpp"

namespace lubbock {

enum class SummationVariant { Forward, Central };

/// Raised when the sample table does not cover the required index range;
/// the message states the exact range so callers can extend the table.
struct MarginError : std::runtime_error {
  long required_min;
  long required_max;
  MarginError(long lo, long hi, const std::string& msg)
      : std::runtime_error(msg), required_min(lo), required_max(hi) {}
};

template <typename S>
struct SummationScalar;

template <>
struct SummationScalar<Rational> {
  static Rational from_rational(const Rational& q) { return q; }
  static Rational abs_value(const Rational& x) { return x.abs(); }
  static constexpr bool exact = true;
};

template <>
struct SummationScalar<double> {
  static double from_rational(const Rational& q) { return q.to_double(); }
  static double abs_value(double x) { return std::fabs(x); }
  static constexpr bool exact = false;
};

/// Coarse samples f(x0 + k) for k = k_min .. k_min + samples.size() - 1,
/// covering n coarse intervals subdivided h-fold, corrected through order K.
template <typename S>
struct SummationRequest {
  std::vector<S> samples;
  long k_min = 0;
  unsigned n = 0;
  unsigned h = 1;
  unsigned order = 1;  // K
  SummationVariant variant = SummationVariant::Forward;
};

template <typename S>
struct SummationResult {
  S estimate{};
  S coarse_term{};
  std::vector<S> corrections;        // one entry per correction order 1..K
  S error_indicator{};               // |first neglected term| when reachable
  bool exact = SummationScalar<S>::exact;
  bool indicator_is_fallback = false;  // true: |last included| stood in for it
};

/// Index range the engines read: forward differences at both ends need
/// [0, n+K-1]; mean central differences need [-K, n+K].
inline std::pair<long, long> required_sample_range(SummationVariant variant, unsigned n,
                                                   unsigned order) {
  const long k = static_cast<long>(order);
  const long nn = static_cast<long>(n);
  if (variant == SummationVariant::Forward) return {0, nn + k - 1};
  return {-k, nn + k};
}

namespace detail {

template <typename S>
class SampleView {
 public:
  SampleView(const std::vector<S>& samples, long k_min)
      : samples_(samples), k_min_(k_min) {}
  long min_index() const { return k_min_; }
  long max_index() const { return k_min_ + static_cast<long>(samples_.size()) - 1; }
  bool covers(long lo, long hi) const { return min_index() <= lo && hi <= max_index(); }
  const S& operator()(long k) const { return samples_[static_cast<size_t>(k - k_min_)]; }

 private:
  const std::vector<S>& samples_;
  long k_min_;
};

/// Forward difference of the given order anchored at p (plain binomial sum).
template <typename S>
S forward_difference(const SampleView<S>& f, long p, unsigned order) {
  S acc = SummationScalar<S>::from_rational(Rational(0));
  for (unsigned j = 0; j <= order; ++j) {
    Rational c = binom(Rational(order), j);
    if ((order - j) % 2 != 0) c = -c;
    acc = acc + SummationScalar<S>::from_rational(c) * f(p + static_cast<long>(j));
  }
  return acc;
}

/// Mean odd central difference mu delta^{2nu-1} at integer p: the average of
/// the two straddling odd differences, expanded into samples p-nu .. p+nu.
template <typename S>
S mean_central_difference(const SampleView<S>& f, long p, unsigned nu) {
  const unsigned ord = 2 * nu - 1;
  S acc = SummationScalar<S>::from_rational(Rational(0));
  for (unsigned j = 0; j <= ord; ++j) {
    Rational c = binom(Rational(ord), j) * Rational(1, 2);
    if (j % 2 != 0) c = -c;
    const long upper = p + static_cast<long>(nu) - static_cast<long>(j);
    acc = acc + SummationScalar<S>::from_rational(c) * (f(upper) + f(upper - 1));
  }
  return acc;
}

inline void check_request_shape(unsigned n, unsigned h, unsigned order) {
  if (n < 1) throw std::invalid_argument("summation: need at least one coarse interval");
  if (h < 1) throw std::invalid_argument("summation: subdivision h must be positive");
  if (order < 1) throw std::invalid_argument("summation: correction order K must be positive");
}

template <typename S>
detail::SampleView<S> checked_view(const SummationRequest<S>& req) {
  const auto [lo, hi] = required_sample_range(req.variant, req.n, req.order);
  detail::SampleView<S> f(req.samples, req.k_min);
  if (!f.covers(lo, hi)) {
    throw MarginError(lo, hi,
                      "summation: samples must cover f(x0+k) for k in [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]; got [" + std::to_string(f.min_index()) +
                          ", " + std::to_string(f.max_index()) + "]");
  }
  return f;
}

}  // namespace detail

/// Forward variant: fine grid sum over hn points from
/// h * (coarse sum) + sum_nu Lambda_nu(1/h) [D^{nu-1}f(n) - D^{nu-1}f(0)].
template <typename S>
SummationResult<S> lubbock_forward_sum(const SummationRequest<S>& req) {
  detail::check_request_shape(req.n, req.h, req.order);
  const auto f = detail::checked_view(req);
  const unsigned K = req.order;
  const Rational inv_h(1, static_cast<long>(req.h));
  const Series<PolyM> gen = family_generating(Family::Lambda, static_cast<long>(K) + 1);

  SummationResult<S> out;
  S coarse = SummationScalar<S>::from_rational(Rational(0));
  for (long k = 0; k < static_cast<long>(req.n); ++k) coarse = coarse + f(k);
  out.coarse_term = SummationScalar<S>::from_rational(Rational(static_cast<long>(req.h))) * coarse;

  const auto correction = [&](unsigned nu) {
    const Rational lam = gen.coeff(static_cast<long>(nu)).eval(inv_h) * Rational(static_cast<long>(req.h));
    const S endpoint = detail::forward_difference(f, static_cast<long>(req.n), nu - 1) -
                       detail::forward_difference(f, 0, nu - 1);
    return SummationScalar<S>::from_rational(lam) * endpoint;
  };

  out.estimate = out.coarse_term;
  for (unsigned nu = 1; nu <= K; ++nu) {
    out.corrections.push_back(correction(nu));
    out.estimate = out.estimate + out.corrections.back();
  }
  if (f.covers(0, static_cast<long>(req.n) + static_cast<long>(K))) {
    out.error_indicator = SummationScalar<S>::abs_value(correction(K + 1));
  } else {
    out.error_indicator = SummationScalar<S>::abs_value(out.corrections.back());
    out.indicator_is_fallback = true;
  }
  return out;
}

/// Central variant: fine trapezoid sum (interior fine points plus half the
/// endpoint values) from h * (coarse trapezoid) +
/// sum_nu Q_{2nu}(1/h) [mu d^{2nu-1}f(n) - mu d^{2nu-1}f(0)].
template <typename S>
SummationResult<S> lubbock_central_sum(const SummationRequest<S>& req) {
  detail::check_request_shape(req.n, req.h, req.order);
  const auto f = detail::checked_view(req);
  const unsigned K = req.order;
  const Rational inv_h(1, static_cast<long>(req.h));
  const Series<PolyM> gen = family_generating(Family::Q, 2 * (static_cast<long>(K) + 1));

  SummationResult<S> out;
  const S half = SummationScalar<S>::from_rational(Rational(1, 2));
  S trap = SummationScalar<S>::from_rational(Rational(0));
  for (long k = 0; k < static_cast<long>(req.n); ++k) trap = trap + half * (f(k) + f(k + 1));
  out.coarse_term = SummationScalar<S>::from_rational(Rational(static_cast<long>(req.h))) * trap;

  const auto correction = [&](unsigned nu) {
    const Rational q =
        gen.coeff(2L * static_cast<long>(nu)).eval(inv_h) * Rational(static_cast<long>(req.h));
    const S endpoint = detail::mean_central_difference(f, static_cast<long>(req.n), nu) -
                       detail::mean_central_difference(f, 0, nu);
    return SummationScalar<S>::from_rational(q) * endpoint;
  };

  out.estimate = out.coarse_term;
  for (unsigned nu = 1; nu <= K; ++nu) {
    out.corrections.push_back(correction(nu));
    out.estimate = out.estimate + out.corrections.back();
  }
  const long kk = static_cast<long>(K);
  if (f.covers(-(kk + 1), static_cast<long>(req.n) + kk + 1)) {
    out.error_indicator = SummationScalar<S>::abs_value(correction(K + 1));
  } else {
    out.error_indicator = SummationScalar<S>::abs_value(out.corrections.back());
    out.indicator_is_fallback = true;
  }
  return out;
}

template <typename S>
SummationResult<S> lubbock_sum(const SummationRequest<S>& req) {
  return req.variant == SummationVariant::Forward ? lubbock_forward_sum(req)
                                                  : lubbock_central_sum(req);
}

/// Brute-force target sum: the plain fine grid sum for the forward variant,
/// the fine trapezoid sum for the central variant.
template <typename S, typename F>
S direct_fine_sum(F&& f, const S& x0, unsigned n, unsigned h, SummationVariant variant) {
  const long fine = static_cast<long>(h) * static_cast<long>(n);
  const auto at = [&](long j) {
    return f(x0 + SummationScalar<S>::from_rational(Rational(j, static_cast<long>(h))));
  };
  S acc = SummationScalar<S>::from_rational(Rational(0));
  if (variant == SummationVariant::Forward) {
    for (long j = 0; j < fine; ++j) acc = acc + at(j);
    return acc;
  }
  for (long j = 1; j < fine; ++j) acc = acc + at(j);
  const S half = SummationScalar<S>::from_rational(Rational(1, 2));
  return acc + half * (at(0) + at(fine));
}

/// Builds a request by sampling a callable at every coarse index the engine
/// (and its error indicator) can use: one extra index beyond each margin.
template <typename S, typename F>
SummationRequest<S> make_request(F&& f, const S& x0, unsigned n, unsigned h, unsigned order,
                                 SummationVariant variant) {
  SummationRequest<S> req;
  req.n = n;
  req.h = h;
  req.order = order;
  req.variant = variant;
  auto [lo, hi] = required_sample_range(variant, n, order);
  if (variant == SummationVariant::Forward) {
    hi += 1;
  } else {
    lo -= 1;
    hi += 1;
  }
  req.k_min = lo;
  for (long k = lo; k <= hi; ++k)
    req.samples.push_back(f(x0 + SummationScalar<S>::from_rational(Rational(k))));
  return req;
}

}  // namespace lubbock
