/**
 * @file factorials.hpp
 * @brief Falling, central, and poweroid factorial products over exact rationals.
 *
 * These products give the second, independent route to every coefficient
 * family: averages of factorial powers over one coarse step reproduce the
 * symbolic polynomials evaluated at integer step ratios. The reduced variants
 * omit the leading factor, which keeps them finite (and generally nonzero)
 * at z = 0.
 */
#pragma once

#include "lubbock/rational.hpp"

namespace lubbock {

/// Falling factorial z(z-1)...(z-n+1); empty product for n = 0.
/// Reduced variant: (z-1)(z-2)...(z-n), the plain product of order n+1 with
/// the leading factor z removed.
inline Rational falling_factorial(const Rational& z, unsigned n, bool reduced = false) {
  Rational r(1);
  if (reduced) {
    for (unsigned i = 1; i <= n; ++i) r *= (z - Rational(static_cast<int>(i)));
    return r;
  }
  for (unsigned i = 0; i < n; ++i) r *= (z - Rational(static_cast<int>(i)));
  return r;
}

/// Central factorial z(z + n/2 - 1)(z + n/2 - 2)...(z - n/2 + 1); 1 for n = 0.
/// Reduced variant: the same product without the leading factor z.
inline Rational central_factorial(const Rational& z, unsigned n, bool reduced = false) {
  if (n == 0) return Rational(1);
  Rational r = reduced ? Rational(1) : z;
  for (unsigned j = 1; j < n; ++j) r *= (z + Rational(static_cast<long>(n), 2) - Rational(static_cast<int>(j)));
  return r;
}

/// Poweroid x(x - n*alpha - beta)(x - n*alpha - 2*beta)...(x - n*alpha - (n-1)*beta); 1 for n = 0.
inline Rational gould_poweroid(const Rational& x, unsigned n, const Rational& alpha, const Rational& beta) {
  if (n == 0) return Rational(1);
  Rational r = x;
  Rational shift = Rational(static_cast<long>(n)) * alpha;
  for (unsigned k = 1; k < n; ++k) r *= (x - shift - Rational(static_cast<int>(k)) * beta);
  return r;
}

}  // namespace lubbock
