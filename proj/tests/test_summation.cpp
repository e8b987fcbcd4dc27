/**
 * @file test_summation.cpp
 * @brief Accelerated summation engines: exact low-order anchors, polynomial
 *        exactness, margin handling, result decomposition, smooth-function
 *        accuracy, and the order-improvement property.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "lubbock/summation.hpp"

using namespace lubbock;

namespace {
Rational R(long p, long q = 1) { return Rational(p, q); }

Rational rat_identity(const Rational& x) { return x; }

double rel_err(double a, double b) {
  const double scale = std::max(1.0, std::fabs(b));
  return std::fabs(a - b) / scale;
}
}  // namespace

TEST_CASE("required sample ranges") {
  CHECK(required_sample_range(SummationVariant::Forward, 4, 2) == std::pair<long, long>{0, 5});
  CHECK(required_sample_range(SummationVariant::Forward, 1, 1) == std::pair<long, long>{0, 1});
  CHECK(required_sample_range(SummationVariant::Central, 2, 1) == std::pair<long, long>{-1, 3});
  CHECK(required_sample_range(SummationVariant::Central, 20, 6) == std::pair<long, long>{-6, 26});
}

TEST_CASE("request construction extends one index past each margin") {
  const auto fwd = make_request<Rational>(rat_identity, R(0), 4, 3, 2, SummationVariant::Forward);
  CHECK(fwd.k_min == 0);
  CHECK(fwd.samples.size() == 7);  // k = 0..6
  CHECK(fwd.samples[6] == R(6));
  const auto cen = make_request<Rational>(rat_identity, R(0), 2, 2, 1, SummationVariant::Central);
  CHECK(cen.k_min == -2);
  CHECK(cen.samples.size() == 7);  // k = -2..4
  CHECK(cen.samples[0] == R(-2));
}

TEST_CASE("forward variant: linear anchor is exact") {
  const auto req = make_request<Rational>(rat_identity, R(0), 4, 3, 2, SummationVariant::Forward);
  const auto res = lubbock_forward_sum(req);
  CHECK(res.estimate == R(22));
  CHECK(res.exact);
  CHECK(!res.indicator_is_fallback);
  CHECK(res.error_indicator == R(0));
  CHECK(direct_fine_sum<Rational>(rat_identity, R(0), 4, 3, SummationVariant::Forward) == R(22));
  // The decomposition reassembles the estimate exactly.
  Rational total = res.coarse_term;
  for (const auto& c : res.corrections) total += c;
  CHECK(total == res.estimate);
  CHECK(res.corrections.size() == 2);
}

TEST_CASE("central variant: low-order anchors") {
  const auto lin = make_request<Rational>(rat_identity, R(0), 2, 2, 1, SummationVariant::Central);
  CHECK(lubbock_central_sum(lin).estimate == R(4));
  CHECK(direct_fine_sum<Rational>(rat_identity, R(0), 2, 2, SummationVariant::Central) == R(4));

  const auto sq = [](const Rational& x) { return x * x; };
  const auto req = make_request<Rational>(sq, R(0), 2, 2, 1, SummationVariant::Central);
  const auto res = lubbock_central_sum(req);
  CHECK(res.estimate == R(11, 2));
  CHECK(res.estimate == direct_fine_sum<Rational>(sq, R(0), 2, 2, SummationVariant::Central));
  Rational total = res.coarse_term;
  for (const auto& c : res.corrections) total += c;
  CHECK(total == res.estimate);
}

TEST_CASE("polynomials below the correction order are summed exactly") {
  const auto quintic = [](const Rational& x) {
    return x * x * x * x * x * R(1, 10) - x * x * x * R(3) + x * R(1) - R(7)
           + x * x * R(2, 3);
  };
  for (unsigned h : {2u, 4u, 7u}) {
    for (auto variant : {SummationVariant::Forward, SummationVariant::Central}) {
      const auto req = make_request<Rational>(quintic, R(-1, 2), 3, h, 6, variant);
      const auto res = lubbock_sum(req);
      const Rational direct = direct_fine_sum<Rational>(quintic, R(-1, 2), 3, h, variant);
      CAPTURE(h);
      CAPTURE(static_cast<int>(variant));
      CHECK(res.estimate == direct);
      CHECK(res.error_indicator == R(0));
    }
  }
}

TEST_CASE("no subdivision means no correction") {
  const auto cube = [](const Rational& x) { return x * x * x + R(1, 3); };
  for (auto variant : {SummationVariant::Forward, SummationVariant::Central}) {
    const auto req = make_request<Rational>(cube, R(2), 5, 1, 3, variant);
    const auto res = lubbock_sum(req);
    CHECK(res.estimate == res.coarse_term);
    for (const auto& c : res.corrections) CHECK(c == R(0));
    CHECK(res.estimate == direct_fine_sum<Rational>(cube, R(2), 5, 1, variant));
  }
}

TEST_CASE("smooth-function accuracy in double precision") {
  const auto decay = [](double x) { return std::exp(-x / 10.0); };
  const auto req = make_request<double>(decay, 0.0, 50, 10, 6, SummationVariant::Forward);
  const auto res = lubbock_forward_sum(req);
  const double direct = direct_fine_sum<double>(decay, 0.0, 50, 10, SummationVariant::Forward);
  CHECK(std::fabs(res.estimate - direct) / std::fabs(direct) <= 1e-8);
  CHECK(!res.exact);
}

TEST_CASE("error decreases by three orders from K=1 to K=6 on smooth functions") {
  struct Fn {
    const char* name;
    double (*f)(double);
  };
  const std::vector<Fn> fns = {
      {"exp decay", [](double x) { return std::exp(-x / 10.0); }},
      {"rational", [](double x) { return 1.0 / (x + 12.0); }},
      {"trig", [](double x) { return std::sin(x / 7.0 + 1.0); }},
  };
  for (const auto& fn : fns)
    for (unsigned h : {4u, 8u, 16u})
      for (auto variant : {SummationVariant::Forward, SummationVariant::Central}) {
        const double direct = direct_fine_sum<double>(fn.f, 0.0, 20, h, variant);
        const auto low = lubbock_sum(make_request<double>(fn.f, 0.0, 20, h, 1, variant));
        const auto high = lubbock_sum(make_request<double>(fn.f, 0.0, 20, h, 6, variant));
        const double e1 = rel_err(low.estimate, direct);
        const double e6 = rel_err(high.estimate, direct);
        CAPTURE(fn.name);
        CAPTURE(h);
        CAPTURE(static_cast<int>(variant));
        CHECK(e6 <= e1 / 1e3);
      }
}

TEST_CASE("missing samples raise a margin error naming the range") {
  SummationRequest<Rational> req;
  req.samples = {R(0), R(1), R(2)};  // k = 0..2
  req.n = 4;
  req.h = 3;
  req.order = 2;
  req.variant = SummationVariant::Forward;
  CHECK_THROWS_WITH_AS(lubbock_sum(req),
                       "summation: samples must cover f(x0+k) for k in [0, 5]; got [0, 2]",
                       MarginError);
  try {
    lubbock_sum(req);
  } catch (const MarginError& e) {
    CHECK(e.required_min == 0);
    CHECK(e.required_max == 5);
  }
  req.variant = SummationVariant::Central;
  req.n = 2;
  req.order = 1;
  CHECK_THROWS_WITH_AS(lubbock_sum(req),
                       "summation: samples must cover f(x0+k) for k in [-1, 3]; got [0, 2]",
                       MarginError);
}

TEST_CASE("error indicator falls back when the next-order margin is missing") {
  // Exactly the required range: the engine runs but cannot form the first
  // neglected term, so it reports the last included one and says so.
  SummationRequest<Rational> req;
  for (long k = 0; k <= 5; ++k) req.samples.push_back(R(k * k));
  req.n = 4;
  req.h = 3;
  req.order = 2;
  req.variant = SummationVariant::Forward;
  const auto res = lubbock_forward_sum(req);
  CHECK(res.indicator_is_fallback);
  CHECK(res.error_indicator == res.corrections.back().abs());
  // One extra sample on the right restores the true indicator.
  req.samples.push_back(R(36));
  const auto res2 = lubbock_forward_sum(req);
  CHECK(!res2.indicator_is_fallback);
}

TEST_CASE("degenerate shapes are rejected") {
  SummationRequest<Rational> req;
  req.samples = {R(0), R(1), R(2), R(3)};
  req.n = 0;
  CHECK_THROWS_AS(lubbock_sum(req), std::invalid_argument);
  req.n = 1;
  req.h = 0;
  CHECK_THROWS_AS(lubbock_sum(req), std::invalid_argument);
  req.h = 1;
  req.order = 0;
  CHECK_THROWS_AS(lubbock_sum(req), std::invalid_argument);
}
