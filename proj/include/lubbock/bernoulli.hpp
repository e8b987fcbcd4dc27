/**
 * @file bernoulli.hpp
 * @brief Ordinary and generalized Bernoulli numbers and polynomials.
 *
 * The generalized polynomial B^{(n)}_nu(x | omega) is nu! times the t^nu
 * coefficient of e^{xt} prod_i [omega_i t / (e^{omega_i t} - 1)]. Degrees may
 * be positive rational constants or the symbol m; arguments may be symbolic
 * polynomials in m. The generating-function expansion is the library's ground
 * truth; the convolution route is an independent cross-check, and the first
 * Barnes-pole residue is the bridge to the summation coefficient families.
 */
#pragma once

#include <vector>

#include "lubbock/polym.hpp"
#include "lubbock/rational.hpp"

namespace lubbock {

/// Ordered degree parameters omega_i; each entry is a positive rational
/// constant or the bare indeterminate m.
struct DegreeVector {
  std::vector<PolyM> entries;

  static DegreeVector units(unsigned n) {
    DegreeVector d;
    d.entries.assign(n, PolyM(1));
    return d;
  }
  /// (m, 1, 1, ..., 1) with n_units trailing unit degrees.
  static DegreeVector m_and_units(unsigned n_units) {
    DegreeVector d;
    d.entries.push_back(PolyM::var());
    for (unsigned i = 0; i < n_units; ++i) d.entries.push_back(PolyM(1));
    return d;
  }
  /// (first, 1, 1, ..., 1) with a rational leading degree.
  static DegreeVector scaled_and_units(const Rational& first, unsigned n_units) {
    DegreeVector d;
    d.entries.push_back(PolyM(first));
    for (unsigned i = 0; i < n_units; ++i) d.entries.push_back(PolyM(1));
    return d;
  }
};

/// Ordinary Bernoulli number B_s from t/(e^t - 1) (so B_1 = -1/2).
Rational bernoulli_number(unsigned s);

/// Generalized Bernoulli polynomial by generating-function expansion.
/// Requires omega.entries.size() == n.
PolyM gen_bernoulli(unsigned n, unsigned nu, const PolyM& x, const DegreeVector& omega);

/// All-unit-degree generalized Bernoulli numbers B^{(n)}_j(0 | 1^n), j = 0..nu_max,
/// by n-fold convolution of the ordinary Bernoulli coefficients.
std::vector<Rational> unit_bernoulli_numbers(unsigned n, unsigned nu_max);

/// Independent convolution route for degrees (m, 1^n): combines the ordinary
/// Bernoulli numbers with the all-unit-degree polynomial built from
/// unit_bernoulli_numbers. Must agree with gen_bernoulli.
PolyM gen_bernoulli_convolution(unsigned n_plus_1, unsigned nu, const PolyM& x);

/// m-scaled first-pole residue: (1/(r-1)!) B^{(r)}_{r-1}(a | m, 1^{r-1}).
PolyM n1_residue(unsigned r, const PolyM& a);

}  // namespace lubbock
