/**
 * @file operators.hpp
 * @brief Finite-difference operator calculus over exact series.
 *
 * Expands the subdivided central difference delta_m in powers of delta, its
 * logarithmic tail, the three classical coefficient-family generating
 * functions, and the generalized construction m*phi(D)/phi(mD) for an
 * arbitrary delta operator, including Steffensen's divided difference and its
 * closed form via generalized Bernoulli polynomials.
 */
#pragma once

#include <vector>

#include "lubbock/polym.hpp"
#include "lubbock/rational.hpp"
#include "lubbock/series.hpp"

namespace lubbock {

enum class Family { Lambda, P, Q, Y };

/// A formal delta operator phi(D) = a D/1! + b D^2/2! + c D^3/3! + ...,
/// stored by its scaled derivative coefficients (a, b, c, ...). The stored
/// list is treated as complete (zero beyond); helpers build the classical
/// operators to any working order.
struct DeltaOperator {
  std::vector<Rational> coeffs;  // coeffs[k] multiplies D^{k+1}/(k+1)!

  explicit DeltaOperator(std::vector<Rational> c);

  /// phi as a series in D, known through order trunc.
  Series<Rational> to_series(long trunc) const;

  /// Forward difference Delta = e^D - 1: coefficients (1, 1, 1, ...).
  static DeltaOperator forward(unsigned order);
  /// Central difference delta = 2 sinh(D/2): coefficients (1, 0, 1/4, 0, ...).
  static DeltaOperator central(unsigned order);
};

/// delta_m = 2 sinh(m asinh-of-delta-over-2 ...) re-expanded in delta, i.e.
/// 2 sinh(m u/2) composed with u = revert(2 sinh(D/2)). Odd series; the
/// delta^1 coefficient is m.
Series<PolyM> delta_m_expansion(long order);

/// log(delta_m/(m delta)): even series, zero constant term.
Series<PolyM> log_delta_m_tail(long order);

/// m-scaled generating series with constant term 1:
///   Lambda: m Delta/((1+Delta)^m - 1), in Delta; coefficient of Delta^nu = m Lambda_nu
///   P: m sinh(D/2)/sinh(mD/2), re-expanded in delta; coefficient of delta^{2nu} = m P_{2nu}
///   Q: m tanh(D/2)/tanh(mD/2), re-expanded in delta; coefficient of delta^{2nu} = m Q_{2nu}
Series<PolyM> family_generating(Family fam, long order);

/// Coefficients Y_nu (nu = 1..order) of m*phi(D)/phi(mD) = 1 + Y_1 theta + ...,
/// re-expressed in theta = phi(D). Each Y_nu vanishes at m = 1.
std::vector<PolyM> generic_y(const DeltaOperator& phi, unsigned order);

/// Steffensen's divided difference E^alpha (E^beta - 1)/beta:
/// coefficient of D^nu/nu! is ((alpha+beta)^nu - alpha^nu)/beta.
DeltaOperator steffensen_phi(const Rational& alpha, const Rational& beta, unsigned order);

/// Closed form for the Steffensen-operator Y_nu via generalized Bernoulli
/// polynomials: (beta^nu/nu!) [(1+lambda) B^{(nu+1)}_nu(1+a|m,1^nu)
/// - lambda B^{(nu+1)}_nu(a|m,1^nu)], lambda = alpha/beta, a = lambda(1-nu-m).
PolyM steffensen_y_closed(unsigned nu, const Rational& alpha, const Rational& beta);

}  // namespace lubbock
