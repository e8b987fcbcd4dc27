/**
 * @file families.hpp
 * @brief The classical summation coefficient families by independent routes.
 *
 * Lambda_nu, P_{2nu}, Q_{2nu} are stored m-scaled (m times the coefficient),
 * which keeps every value in Q[m]. Three routes produce them: closed forms in
 * generalized Bernoulli polynomials, generating-series expansion, and finite
 * factorial sums at integer step counts; a recursion route exists for Lambda.
 * Cross-checking the routes against one another is the library's central
 * correctness property.
 */
#pragma once

#include <string>
#include <vector>

#include "lubbock/operators.hpp"
#include "lubbock/polym.hpp"
#include "lubbock/rational.hpp"

namespace lubbock {

enum class Route { Bernoulli, SeriesExpansion, FactorialSum, Recursion };

std::string family_name(Family f);
std::string route_name(Route r);

struct CoeffEntry {
  unsigned order;  // nu for Lambda/Y, 2nu for P/Q
  PolyM m_scaled;
};

struct CoeffTable {
  Family family;
  Route route;
  std::vector<CoeffEntry> entries;
  std::string meta;
};

/// m-scaled coefficient of the given order (nu for Lambda, 2nu for P/Q) via
/// the Bernoulli closed form or the generating-series route. Lambda order 0
/// yields the constant 1; P/Q orders must be positive and even.
PolyM coeff(Family f, unsigned order, Route route);

/// Table of m-scaled coefficients through max_order for one route.
CoeffTable coeff_table(Family f, unsigned max_order, Route route);

/// Factorial-sum route: the (unscaled) coefficient value at m = 1/h from
/// finite sums of factorial powers over one coarse step.
Rational coeff_factorial_sum(Family f, unsigned order, unsigned h);

/// Lambda table from the binomial recursion seeded with the m-scaled
/// Lambda_0 = 1.
CoeffTable de_morgan_lambda(unsigned nu_max);

/// Adams coefficient (-1)^nu (m Lambda_nu) at m = 0.
Rational adams_coefficient(unsigned nu);

/// Independent oracle ((-1)^nu/nu!) integral over [0,1] of t(t-1)...(t-nu+1).
Rational adams_integral_oracle(unsigned nu);

struct CrossCheckMismatch {
  Family family;
  unsigned order;
  std::string detail;
};

/// Exact agreement of all routes: Bernoulli vs series as polynomials, plus the
/// factorial route at m = 1/h for every h in h_set (and the recursion route
/// for Lambda). Returns every mismatch found (empty = pass).
std::vector<CrossCheckMismatch> cross_check(unsigned lambda_max, unsigned pq_max_order,
                                            const std::vector<unsigned>& h_set);

}  // namespace lubbock
