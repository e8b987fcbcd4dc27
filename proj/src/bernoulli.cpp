/**
 * @file bernoulli.cpp
 * @brief Generalized Bernoulli machinery over truncated series in t.
 */
#include "lubbock/bernoulli.hpp"

#include <stdexcept>

#include "lubbock/series.hpp"

namespace lubbock {
namespace {

PolyM poly_pow(const PolyM& base, unsigned e) {
  PolyM r(1);
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

/// Unit series (e^{omega t} - 1)/(omega t) = sum_j omega^j t^j/(j+1)!.
Series<PolyM> degree_unit_series(const PolyM& omega, long t) {
  std::vector<PolyM> c(static_cast<size_t>(t + 1));
  PolyM p(1);
  for (long j = 0; j <= t; ++j) {
    if (j > 0) p *= omega;
    c[static_cast<size_t>(j)] = p * factorial(static_cast<unsigned>(j) + 1).inverse();
  }
  return Series<PolyM>::from_coeffs(0, std::move(c));
}

/// exp(x t) with a polynomial argument x.
Series<PolyM> exp_xt_series(const PolyM& x, long t) {
  std::vector<PolyM> c(static_cast<size_t>(t + 1));
  PolyM p(1);
  for (long k = 0; k <= t; ++k) {
    if (k > 0) p *= x;
    c[static_cast<size_t>(k)] = p * factorial(static_cast<unsigned>(k)).inverse();
  }
  return Series<PolyM>::from_coeffs(0, std::move(c));
}

}  // namespace

Rational bernoulli_number(unsigned s) {
  long t = static_cast<long>(s);
  std::vector<Rational> c(static_cast<size_t>(t + 1));
  for (long j = 0; j <= t; ++j) c[static_cast<size_t>(j)] = factorial(static_cast<unsigned>(j) + 1).inverse();
  Series<Rational> unit = Series<Rational>::from_coeffs(0, std::move(c));
  return unit.inverse().coeff(t) * factorial(s);
}

PolyM gen_bernoulli(unsigned n, unsigned nu, const PolyM& x, const DegreeVector& omega) {
  if (omega.entries.size() != n)
    throw std::invalid_argument("gen_bernoulli: degree vector length must equal the order n");
  long t = static_cast<long>(nu);
  Series<PolyM> units = Series<PolyM>::constant(PolyM(1), t);
  for (const auto& w : omega.entries) units = units * degree_unit_series(w, t);
  Series<PolyM> gf = exp_xt_series(x, t) * units.inverse();
  return gf.coeff(t) * PolyM(factorial(nu));
}

std::vector<Rational> unit_bernoulli_numbers(unsigned n, unsigned nu_max) {
  long t = static_cast<long>(nu_max);
  std::vector<Rational> c(static_cast<size_t>(t + 1));
  for (long j = 0; j <= t; ++j) c[static_cast<size_t>(j)] = factorial(static_cast<unsigned>(j) + 1).inverse();
  Series<Rational> core = Series<Rational>::from_coeffs(0, std::move(c)).inverse();
  Series<Rational> acc = Series<Rational>::constant(Rational(1), t);
  for (unsigned i = 0; i < n; ++i) acc = acc * core;
  std::vector<Rational> out(static_cast<size_t>(nu_max) + 1);
  for (unsigned j = 0; j <= nu_max; ++j) out[j] = acc.coeff(static_cast<long>(j)) * factorial(j);
  return out;
}

PolyM gen_bernoulli_convolution(unsigned n_plus_1, unsigned nu, const PolyM& x) {
  if (n_plus_1 == 0) throw std::invalid_argument("gen_bernoulli_convolution: order must be positive");
  unsigned n = n_plus_1 - 1;
  std::vector<Rational> bn = unit_bernoulli_numbers(n, nu);
  // All-unit-degree polynomial B^{(n)}_k(x) = sum_s C(k,s) x^s B^{(n)}_{k-s}.
  auto unit_poly = [&](unsigned k) {
    PolyM acc;
    for (unsigned s = 0; s <= k; ++s)
      acc += poly_pow(x, s) * (binom(Rational(static_cast<long>(k)), s) * bn[k - s]);
    return acc;
  };
  PolyM result;
  PolyM mpow(1);
  for (unsigned s = 0; s <= nu; ++s) {
    if (s > 0) mpow *= PolyM::var();
    result += mpow * (binom(Rational(static_cast<long>(nu)), s) * bernoulli_number(s)) * unit_poly(nu - s);
  }
  return result;
}

PolyM n1_residue(unsigned r, const PolyM& a) {
  if (r == 0) throw std::invalid_argument("n1_residue: order must be positive");
  return gen_bernoulli(r, r - 1, a, DegreeVector::m_and_units(r - 1)) * factorial(r - 1).inverse();
}

}  // namespace lubbock
