/**
 * @file test_series.cpp
 * @brief Truncated formal series: arithmetic, composition, reversion, and
 *        transcendental expansions.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "lubbock/series.hpp"

using namespace lubbock;

namespace {
Rational R(long p, long q = 1) { return Rational(p, q); }
using S = Series<Rational>;

/// Polynomial with the given low-order coefficients, known through order t.
S poly(long low, std::vector<Rational> cs, long t) {
  cs.resize(static_cast<size_t>(t - low + 1), Rational(0));
  return S::from_coeffs(low, std::move(cs));
}
}  // namespace

TEST_CASE("series arithmetic") {
  const S one_plus = poly(0, {R(1), R(1)}, 8);
  const S one_minus = poly(0, {R(1), R(-1)}, 8);
  const S prod = one_plus * one_minus;
  CHECK(prod.coeff(0) == R(1));
  CHECK(prod.coeff(1) == R(0));
  CHECK(prod.coeff(2) == R(-1));
  for (long k = 3; k <= prod.trunc(); ++k) CHECK(prod.coeff(k) == R(0));

  const S x = S::identity(9);
  const S ratio = x / x;
  CHECK(ratio.coeff(0) == R(1));
  CHECK(ratio.coeff(1) == R(0));

  // Geometric series.
  const S geo = S::constant(R(1), 10) / poly(0, {R(1), R(-1)}, 10);
  for (long k = 0; k <= geo.trunc(); ++k) CHECK(geo.coeff(k) == R(1));

  // Asking beyond the truncation order is an error, not a zero.
  CHECK_THROWS_AS(geo.coeff(geo.trunc() + 1), std::out_of_range);

  // Associativity on small fixed series.
  const S f = poly(0, {R(2), R(1, 3), R(-1)}, 7);
  const S g = poly(1, {R(1, 2), R(5)}, 7);
  const S h = poly(0, {R(-1, 7), R(0), R(3)}, 7);
  CHECK(((f * g) * h).agrees_with(f * (g * h)));
  CHECK(((f + g) + h).agrees_with(f + (g + h)));
}

TEST_CASE("composition and reversion") {
  const S x = S::identity(8);
  const S f = x * x;
  const S g = poly(1, {R(1), R(0), R(1)}, 8);  // x + x^3
  const S fg = f.compose(g);
  CHECK(fg.coeff(2) == R(1));
  CHECK(fg.coeff(3) == R(0));
  CHECK(fg.coeff(4) == R(2));

  const S any = poly(0, {R(3), R(1, 2), R(0), R(7)}, 8);
  CHECK(any.compose(S::identity(8)).agrees_with(any));

  CHECK(S::identity(6).revert().agrees_with(S::identity(6)));

  // Reverting the central difference 2 sinh(x/2).
  const S delta = series_central_delta(13);
  const S u = delta.revert();
  const std::vector<Rational> expect = {R(1),         R(0), R(-1, 24),     R(0), R(3, 640),
                                        R(0),         R(-5, 7168),         R(0), R(35, 294912),
                                        R(0),         R(-63, 2883584),     R(0), R(231, 54525952)};
  for (size_t i = 0; i < expect.size(); ++i) CHECK(u.coeff(static_cast<long>(i) + 1) == expect[i]);

  // Defining property and involution.
  const S p = poly(1, {R(1), R(1), R(1)}, 12);
  CHECK(p.compose(p.revert()).agrees_with(S::identity(12)));
  const S q = poly(1, {R(1), R(-2), R(1, 3), R(5)}, 10);
  CHECK(q.revert().revert().agrees_with(q));
}

TEST_CASE("transcendental expansions") {
  const S zero = S::zero_through(6);
  const S e0 = exp_series(zero);
  CHECK(e0.coeff(0) == R(1));
  for (long k = 1; k <= 6; ++k) CHECK(e0.coeff(k) == R(0));

  const S x = S::identity(10);
  const S lg = log_series(S::constant(R(1), 10) + x);
  CHECK(lg.coeff(1) == R(1));
  CHECK(lg.coeff(2) == R(-1, 2));
  CHECK(lg.coeff(3) == R(1, 3));
  CHECK(lg.coeff(4) == R(-1, 4));

  CHECK(exp_series(lg).agrees_with(S::constant(R(1), 10) + x));
  CHECK(log_series(exp_series(x)).agrees_with(x));

  const S th = tanh_series(x.scaled(R(1, 2)));
  CHECK(th.coeff(1) == R(1, 2));
  CHECK(th.coeff(3) == R(-1, 24));
  CHECK(th.coeff(5) == R(1, 240));
  CHECK(th.coeff(7) == R(-17, 40320));
  CHECK(th.coeff(2) == R(0));

  // Parity: sinh of an odd series is odd, cosh of an odd series is even.
  const S odd = poly(1, {R(2), R(0), R(-1, 3), R(0), R(7)}, 11);
  const S sh = sinh_series(odd);
  const S ch = cosh_series(odd);
  for (long k = 0; k <= 11; k += 2) CHECK(sh.coeff(k) == R(0));
  for (long k = 1; k <= 11; k += 2) CHECK(ch.coeff(k) == R(0));

  // Preconditions.
  CHECK_THROWS(exp_series(S::constant(R(1), 5)));
  CHECK_THROWS(log_series(S::constant(R(2), 5)));
}

TEST_CASE("principal parts stay within one inverse power") {
  const S x = S::identity(8);
  const S inv = S::constant(R(1), 8) / x;  // 1/x
  CHECK(inv.val() == -1);
  CHECK(inv.coeff(-1) == R(1));
  const S shifted = inv + S::constant(R(3), inv.trunc());
  CHECK(shifted.coeff(-1) == R(1));
  CHECK(shifted.coeff(0) == R(3));
}

TEST_CASE("classical operator series") {
  const S fwd = series_forward_delta(7);  // e^x - 1
  CHECK(fwd.coeff(1) == R(1));
  CHECK(fwd.coeff(2) == R(1, 2));
  CHECK(fwd.coeff(3) == R(1, 6));

  const S cd = series_central_delta(7);  // 2 sinh(x/2)
  CHECK(cd.coeff(1) == R(1));
  CHECK(cd.coeff(2) == R(0));
  CHECK(cd.coeff(3) == R(1, 24));

  const S mu = series_central_mean(7);  // cosh(x/2)
  CHECK(mu.coeff(0) == R(1));
  CHECK(mu.coeff(2) == R(1, 8));

  // mu^2 = 1 + delta^2/4.
  const S lhs = mu * mu;
  const S rhs = S::constant(R(1), 7) + (cd * cd).scaled(R(1, 4));
  CHECK(lhs.agrees_with(rhs));
}
