/**
 * @file test_operators.cpp
 * @brief Difference-operator calculus: the subdivided central difference and
 *        its logarithmic tail, family generating series, the generic operator
 *        coefficients Y_nu, and Steffensen's divided difference.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "lubbock/operators.hpp"

using namespace lubbock;

namespace {
Rational R(long p, long q = 1) { return Rational(p, q); }
const PolyM m = PolyM::var();
const PolyM one(1);

PolyM m_sq_minus(long k) { return m * m - PolyM(k); }
PolyM m_sq_plus(long k) { return m * m + PolyM(k); }
}  // namespace

TEST_CASE("subdivided central difference expanded in delta") {
  const auto dm = delta_m_expansion(9);
  CHECK(dm.coeff(1) == m);
  CHECK(dm.coeff(3) == m * m_sq_minus(1) / Rational(24));
  CHECK(dm.coeff(5) == m * m_sq_minus(1) * m_sq_minus(9) / Rational(1920));
  CHECK(dm.coeff(7) == m * m_sq_minus(1) * m_sq_minus(9) * m_sq_minus(25) / Rational(322560));
  for (long k = 0; k <= 8; k += 2) CHECK(dm.coeff(k) == PolyM(0));
  // Setting m = 1 must recover delta itself.
  for (long k = 0; k <= 9; ++k)
    CHECK(dm.coeff(k).eval(R(1)) == (k == 1 ? R(1) : R(0)));
}

TEST_CASE("logarithmic tail of the subdivided difference") {
  const auto lt = log_delta_m_tail(8);
  CHECK(lt.coeff(0) == PolyM(0));
  CHECK(lt.coeff(2) == m_sq_minus(1) / Rational(24));
  CHECK(lt.coeff(4) == -(m_sq_minus(1) * m_sq_plus(11)) / Rational(2880));
  CHECK(lt.coeff(6) ==
        m_sq_minus(1) * (Rational(2) * m * m * m * m + Rational(23) * m * m + PolyM(191)) /
            Rational(362880));
  CHECK(lt.coeff(8) ==
        -(m_sq_minus(1) * m_sq_plus(11) *
          (Rational(3) * m * m * m * m + Rational(10) * m * m + PolyM(227))) /
            Rational(29030400));
  for (long k = 1; k <= 7; k += 2) CHECK(lt.coeff(k) == PolyM(0));
  // The tail integrates the even family: m Q_{2nu} = 2nu * [delta^{2nu}] tail.
  const auto q = family_generating(Family::Q, 8);
  for (long nu = 1; nu <= 4; ++nu)
    CHECK(q.coeff(2 * nu) == lt.coeff(2 * nu) * Rational(2 * nu));
}

TEST_CASE("family generating series") {
  const auto lam = family_generating(Family::Lambda, 4);
  CHECK(lam.coeff(0) == one);
  CHECK(lam.coeff(1) == -(m - one) / Rational(2));
  CHECK(lam.coeff(2) == m_sq_minus(1) / Rational(12));
  CHECK(lam.coeff(3) == -m_sq_minus(1) / Rational(24));
  CHECK(lam.coeff(4) == -(m_sq_minus(1) * m_sq_minus(19)) / Rational(720));

  const auto p = family_generating(Family::P, 4);
  CHECK(p.coeff(0) == one);
  CHECK(p.coeff(2) == -m_sq_minus(1) / Rational(24));
  CHECK(p.coeff(4) == m_sq_minus(1) * (Rational(7) * m * m + PolyM(17)) / Rational(5760));

  const auto q = family_generating(Family::Q, 4);
  CHECK(q.coeff(0) == one);
  CHECK(q.coeff(2) == m_sq_minus(1) / Rational(12));
  CHECK(q.coeff(4) == -(m_sq_minus(1) * m_sq_plus(11)) / Rational(720));

  for (long k = 1; k <= 3; k += 2) {
    CHECK(p.coeff(k) == PolyM(0));
    CHECK(q.coeff(k) == PolyM(0));
  }
  // At m = 1 every series collapses to the constant 1.
  for (long k = 1; k <= 4; ++k) {
    CHECK(lam.coeff(k).eval(R(1)) == R(0));
    CHECK(p.coeff(k).eval(R(1)) == R(0));
    CHECK(q.coeff(k).eval(R(1)) == R(0));
  }
}

TEST_CASE("generic operator coefficients specialize to the named families") {
  const auto lam = family_generating(Family::Lambda, 8);
  const auto yf = generic_y(DeltaOperator::forward(9), 8);
  REQUIRE(yf.size() == 8);
  for (unsigned nu = 1; nu <= 8; ++nu) CHECK(yf[nu - 1] == lam.coeff(nu));

  const auto p = family_generating(Family::P, 8);
  const auto yc = generic_y(DeltaOperator::central(9), 8);
  for (unsigned nu = 1; nu <= 8; ++nu) {
    if (nu % 2 == 0)
      CHECK(yc[nu - 1] == p.coeff(nu));
    else
      CHECK(yc[nu - 1] == PolyM(0));
  }
}

TEST_CASE("each Y_nu vanishes at m = 1 and carries the m^2 - 1 factor centrally") {
  const std::vector<std::pair<const char*, DeltaOperator>> ops = {
      {"forward", DeltaOperator::forward(7)},
      {"central", DeltaOperator::central(7)},
      {"steffensen", steffensen_phi(R(1), R(2), 7)},
  };
  for (const auto& [name, op] : ops) {
    CAPTURE(name);
    const auto y = generic_y(op, 6);
    for (const auto& ynu : y) CHECK(ynu.eval(R(1)) == R(0));
  }
  // For the central operator the even coefficients are divisible by m^2 - 1
  // as polynomials, not merely zero at m = 1 and m = -1.
  const auto yc = generic_y(DeltaOperator::central(9), 8);
  for (unsigned nu = 2; nu <= 8; nu += 2) {
    const PolyM quotient = yc[nu - 1].divide_exact(m_sq_minus(1));
    CHECK(quotient * m_sq_minus(1) == yc[nu - 1]);
  }
}

TEST_CASE("steffensen divided difference") {
  const DeltaOperator s = steffensen_phi(R(1), R(2), 4);
  REQUIRE(s.coeffs.size() >= 4);
  CHECK(s.coeffs[0] == R(1));
  CHECK(s.coeffs[1] == R(4));
  CHECK(s.coeffs[2] == R(13));
  CHECK(s.coeffs[3] == R(40));

  // alpha = 0, beta = 1 is the forward difference.
  const DeltaOperator f = steffensen_phi(R(0), R(1), 6);
  CHECK(f.coeffs == DeltaOperator::forward(6).coeffs);
  // alpha = -1/2, beta = 1 is the central difference.
  const DeltaOperator c = steffensen_phi(R(-1, 2), R(1), 6);
  CHECK(c.coeffs == DeltaOperator::central(6).coeffs);

  // phi as a series matches the defining coefficients D^nu/nu!.
  const auto ser = s.to_series(4);
  CHECK(ser.coeff(0) == R(0));
  CHECK(ser.coeff(1) == R(1));
  CHECK(ser.coeff(2) == R(4, 2));
  CHECK(ser.coeff(3) == R(13, 6));
  CHECK(ser.coeff(4) == R(40, 24));
}

TEST_CASE("closed form for the steffensen coefficients matches the series route") {
  const std::vector<std::pair<Rational, Rational>> pairs = {
      {R(0), R(1)}, {R(1), R(1)}, {R(-1, 2), R(1)}, {R(1), R(2)}, {R(2, 3), R(1, 3)}};
  for (const auto& [alpha, beta] : pairs) {
    CAPTURE(alpha.to_string());
    CAPTURE(beta.to_string());
    const auto y = generic_y(steffensen_phi(alpha, beta, 7), 6);
    for (unsigned nu = 1; nu <= 6; ++nu)
      CHECK(steffensen_y_closed(nu, alpha, beta) == y[nu - 1]);
  }
}

TEST_CASE("tabulated low-order coefficients for a general operator") {
  // phi(D) = a D + b D^2/2! + c D^3/3! + d D^4/4! with the flat sign
  // convention fixed by matching the named families: Y_1 = -(m-1) b / (2 a^2),
  // Y_2 = -(m^2-1)(2ac - 3b^2)/(12 a^4), and Y_3 built from
  // k1 = a^2 d - 4abc + 3b^3 and k2 = a^2 d - 6abc + 6b^3.
  struct OpData {
    DeltaOperator op;
    Rational a, b, c, d;
  };
  const std::vector<OpData> ops = {
      {DeltaOperator::forward(4), R(1), R(1), R(1), R(1)},
      {DeltaOperator::central(4), R(1), R(0), R(1, 4), R(0)},
      {steffensen_phi(R(1), R(2), 4), R(1), R(4), R(13), R(40)},
  };
  for (const auto& od : ops) {
    const auto y = generic_y(od.op, 3);
    const Rational a = od.a, b = od.b, c = od.c, d = od.d;
    const PolyM y1 = -((m - one) * (b / (a * a * Rational(2))));
    const PolyM y2 = -(m_sq_minus(1) * ((Rational(2) * a * c - Rational(3) * b * b) /
                                        (Rational(12) * a.pow(4))));
    const Rational k1 = a * a * d - Rational(4) * a * b * c + Rational(3) * b.pow(3);
    const Rational k2 = a * a * d - Rational(6) * a * b * c + Rational(6) * b.pow(3);
    const PolyM y3 = -((m - one) * (m * m * k1 + (m + one) * k2) / (Rational(24) * a.pow(6)));
    CHECK(y[0] == y1);
    CHECK(y[1] == y2);
    CHECK(y[2] == y3);
  }
}
