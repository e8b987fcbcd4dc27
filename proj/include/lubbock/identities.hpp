/**
 * @file identities.hpp
 * @brief Numeric-vs-exact verification of the trigonometric image sums, the
 *        generating-function expansion, the image relation, and the
 *        generalized-Bernoulli identity chain.
 *
 * Trigonometric sums are exactly periodic in their integer twist parameters,
 * while the polynomial closed forms are not; checks therefore canonicalize
 * the twist (w into [0, m/2] by periodicity and reflection) and the argument
 * (a into [1, m] by periodicity) before comparing. Comparisons against
 * floating-point sums use a relative tolerance; polynomial and rational
 * comparisons are exact.
 */
#pragma once

#include <string>
#include <vector>

#include "lubbock/polym.hpp"
#include "lubbock/rational.hpp"

namespace lubbock {

struct VerificationCase {
  std::string identity;
  std::string params;
  std::string lhs;
  std::string rhs;
  double rel_err = 0.0;
  bool passed = false;
  std::string note;
};

/// Reduces an integer twist by m-periodicity and w -> m-w reflection.
int canonical_twist(int m, int w);

/// Reduces an integer argument by m-periodicity into [1, m].
int canonical_argument(int m, int a);

/// cos(2 pi q) / sin(2 pi q) with the angle reduced exactly modulo 1 first.
double cos_two_pi(const Rational& q);
double sin_two_pi(const Rational& q);

/// Sum over l = 1..m-1 of cos(2 pi w l/m) cosec^{2 nu}(pi l/m), double precision.
double cosec_sum_numeric(int m, int w, int nu);

/// Closed form of the same sum: (-1)^{nu+1} 4^nu times the m-scaled residue
/// at order 2nu+1 and argument nu + w, evaluated at the integer m. The twist
/// is canonicalized first.
Rational cosec_sum_exact(int m, int w, int nu);

enum class AppendixKind { Even, Odd };

/// Finite image-sum check. Even kind: the cosine sum with twist a - nu against
/// the residue closed form. Odd kind: the sine sum with twist a - nu + 1/2
/// against the calibrated prefactor times B^{(2nu)}_{2nu-1}(a | m, 1), with a
/// canonicalized into [1, m].
VerificationCase appendix_sum_check(AppendixKind kind, int m, int a, int nu, double tol);

/// Calibration of the odd-sum prefactor at the anchor point (m, nu, a) =
/// (2, 1, 1): the prefactor is eps * (-1)^nu * 2^{2nu-1}/(2nu-1)! * m^p with
/// eps in {+1, -1} and p in {-1, 0, 1} determined once and then asserted
/// across the whole grid.
struct OddPrefactor {
  int eps = 0;
  int m_power = 0;
  bool determined = false;
};
OddPrefactor calibrate_odd_prefactor(double tol);

/// Exact image relation: sum over s of B^{(n+1)}_nu(a + s/h | 1^{n+1}) equals
/// h B^{(n+1)}_nu(a | 1/h, 1^n).
VerificationCase image_check(unsigned n, unsigned nu, const Rational& a, unsigned h);

/// Expands 1 - m cosh((w - m/2)D) tanh(D/2)/sinh(mD/2) in delta at a numeric m
/// and checks the delta^{2nu} coefficients against (-1)^nu S_nu(m,w)/4^nu,
/// plus the w=0 and (odd m) w=(m-1)/2 reductions to the Q and P generating
/// series. All comparisons exact.
std::vector<VerificationCase> gf_check(int m, int w, long order);

/// The identity chain around B^{(2nu)}_{2nu-1}: each printed identity checked
/// as an exact polynomial statement, per nu. Results are truthful; callers
/// decide which deviations are expected.
std::vector<VerificationCase> bernoulli_identity_suite(unsigned nu_max);

/// Diagnostic for the quoted recursion on all-unit-degree Bernoulli numbers
/// (it is not self-consistent); reports where it holds and fails.
std::vector<VerificationCase> norlund_recursion_diagnostic(unsigned n_max, unsigned nu_max);

}  // namespace lubbock
