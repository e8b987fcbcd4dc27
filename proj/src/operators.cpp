/**
 * @file operators.cpp
 * @brief Operator expansions via reversion, composition, and exact division.
 */
#include "lubbock/operators.hpp"

#include <stdexcept>

#include "lubbock/bernoulli.hpp"

namespace lubbock {

DeltaOperator::DeltaOperator(std::vector<Rational> c) : coeffs(std::move(c)) {
  if (coeffs.empty() || coeffs[0].is_zero())
    throw std::invalid_argument("DeltaOperator: leading coefficient a must be nonzero");
}

Series<Rational> DeltaOperator::to_series(long trunc) const {
  std::vector<Rational> c(static_cast<size_t>(trunc + 1), Rational(0));
  for (size_t k = 0; k < coeffs.size() && static_cast<long>(k) + 1 <= trunc; ++k)
    c[k + 1] = coeffs[k] * factorial(static_cast<unsigned>(k + 1)).inverse();
  return Series<Rational>::from_coeffs(0, std::move(c));
}

DeltaOperator DeltaOperator::forward(unsigned order) {
  return DeltaOperator(std::vector<Rational>(order, Rational(1)));
}

DeltaOperator DeltaOperator::central(unsigned order) {
  // 2 sinh(D/2) = sum_{k odd} D^k/(2^{k-1} k!), so the scaled coefficient of
  // D^k/k! is 1/2^{k-1} for odd k and 0 for even k.
  std::vector<Rational> c(order, Rational(0));
  for (unsigned k = 1; k <= order; k += 2) c[k - 1] = Rational(2) / Rational(2).pow(k);
  return DeltaOperator(std::move(c));
}

Series<PolyM> delta_m_expansion(long order) {
  Series<Rational> u = series_central_delta(order).revert();
  Series<PolyM> arg = lift_to_polym(u).scaled(PolyM::var() * Rational(1, 2));
  return sinh_series(arg).scaled(PolyM(2));
}

Series<PolyM> log_delta_m_tail(long order) {
  Series<PolyM> dm = delta_m_expansion(order + 1);
  std::vector<PolyM> unit(static_cast<size_t>(order + 1));
  for (long k = 0; k <= order; ++k)
    unit[static_cast<size_t>(k)] = dm.coeff(k + 1).divide_exact(PolyM::var());
  return log_series(Series<PolyM>::from_coeffs(0, std::move(unit)));
}

namespace {

/// Re-expands a unit ratio N(D)/N(mD) in delta, where N is the D-series of a
/// normalized odd operator divided by its leading monomial.
Series<PolyM> ratio_in_delta(const Series<Rational>& n_unit, long order) {
  Series<PolyM> num = lift_to_polym(n_unit);
  Series<PolyM> den = scale_argument(n_unit, PolyM::var());
  Series<PolyM> in_d = num / den;
  Series<PolyM> rev = lift_to_polym(series_central_delta(order).revert());
  return in_d.compose(rev);
}

}  // namespace

Series<PolyM> family_generating(Family fam, long order) {
  switch (fam) {
    case Family::Lambda: {
      std::vector<PolyM> w(static_cast<size_t>(order + 1));
      for (long j = 0; j <= order; ++j)
        w[static_cast<size_t>(j)] = binom(PolyM::var(), static_cast<unsigned>(j + 1)).divide_exact(PolyM::var());
      return Series<PolyM>::from_coeffs(0, std::move(w)).inverse();
    }
    case Family::P: {
      Series<Rational> n_unit = series_central_delta(order + 1).shifted(-1);
      return ratio_in_delta(n_unit, order);
    }
    case Family::Q: {
      Series<Rational> tanh_x = Series<Rational>::from_coeffs(0, tanh_maclaurin(order + 1));
      Series<Rational> n_unit = scale_argument(tanh_x, Rational(1, 2)).shifted(-1).scaled(Rational(2));
      return ratio_in_delta(n_unit, order);
    }
    case Family::Y:
      break;
  }
  throw std::invalid_argument("family_generating: generating series exist for Lambda, P, Q only");
}

std::vector<PolyM> generic_y(const DeltaOperator& phi, unsigned order) {
  long t = static_cast<long>(order);
  Rational a = phi.coeffs[0];
  Series<Rational> n_unit = phi.to_series(t + 1).shifted(-1).scaled(a.inverse());
  Series<PolyM> ratio = lift_to_polym(n_unit) / scale_argument(n_unit, PolyM::var());
  Series<Rational> rev = phi.to_series(t).revert();
  Series<PolyM> in_theta = ratio.compose(lift_to_polym(rev));
  std::vector<PolyM> y(order);
  for (unsigned nu = 1; nu <= order; ++nu) y[nu - 1] = in_theta.coeff(static_cast<long>(nu));
  return y;
}

DeltaOperator steffensen_phi(const Rational& alpha, const Rational& beta, unsigned order) {
  if (beta.is_zero()) throw std::invalid_argument("steffensen_phi: beta must be nonzero");
  std::vector<Rational> c(order);
  for (unsigned nu = 1; nu <= order; ++nu)
    c[nu - 1] = ((alpha + beta).pow(nu) - alpha.pow(nu)) / beta;
  return DeltaOperator(std::move(c));
}

PolyM steffensen_y_closed(unsigned nu, const Rational& alpha, const Rational& beta) {
  if (beta.is_zero()) throw std::invalid_argument("steffensen_y_closed: beta must be nonzero");
  Rational lambda = alpha / beta;
  PolyM a = PolyM(lambda * Rational(1 - static_cast<long>(nu))) - PolyM::var() * lambda;
  PolyM b_upper = gen_bernoulli(nu + 1, nu, a + PolyM(1), DegreeVector::m_and_units(nu));
  PolyM b_lower = gen_bernoulli(nu + 1, nu, a, DegreeVector::m_and_units(nu));
  PolyM bracket = b_upper * (Rational(1) + lambda) - b_lower * lambda;
  return bracket * (beta.pow(nu) / factorial(nu));
}

}  // namespace lubbock
