/**
 * @file acceptance.cpp
 * @brief Top-level acceptance gate: one pass/fail line per criterion.
 *
 * Each criterion is a self-contained function returning pass/fail; the binary
 * prints one line per criterion and exits nonzero if any fails. Exact checks
 * use rational/polynomial equality; numeric checks state their tolerance.
 */
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lubbock/bernoulli.hpp"
#include "lubbock/families.hpp"
#include "lubbock/identities.hpp"
#include "lubbock/report.hpp"
#include "lubbock/summation.hpp"

using namespace lubbock;

namespace {

const PolyM m = PolyM::var();
const PolyM one(1);
Rational R(long p, long q = 1) { return Rational(p, q); }
PolyM m_sq_minus(long k) { return m * m - PolyM(k); }

bool findings_mention(const Report& rep, const std::string& needle) {
  for (const auto& f : rep.findings)
    if (f.find(needle) != std::string::npos) return true;
  return false;
}

// 1. Quoted low-order polynomials: Q2, Q4, the logarithmic-tail pair, and the
// subdivided-difference display triple. The fifth-order display is reproduced
// up to the recorded sign finding (its quoted sign contradicts the m = 2
// specialization 2x + x^3/4 - x^5/64, which the construction here satisfies).
bool criterion_printed_polynomials() {
  const auto q = family_generating(Family::Q, 4);
  bool ok = q.coeff(2) == m_sq_minus(1) / Rational(12) &&
            q.coeff(4) == -(m_sq_minus(1) * (m * m + PolyM(11))) / Rational(720);
  const auto lt = log_delta_m_tail(4);
  ok = ok && lt.coeff(2) == m_sq_minus(1) / Rational(24) &&
       lt.coeff(4) == -(m_sq_minus(1) * (m * m + PolyM(11))) / Rational(2880);
  const auto dm = delta_m_expansion(5);
  const PolyM d5_true = m * m_sq_minus(1) * m_sq_minus(9) / Rational(1920);
  const PolyM d5_quoted = -d5_true;  // the display lists the negation
  ok = ok && dm.coeff(1) == m && dm.coeff(3) == m * m_sq_minus(1) / Rational(24) &&
       dm.coeff(5) == d5_true && dm.coeff(5) == -d5_quoted;
  // The m = 2 specialization pins the fifth-order sign: coefficient -1/64.
  ok = ok && dm.coeff(5).eval(R(2)) == R(-1, 64);
  // The deviation of the quoted display sign must be on the record.
  ok = ok && findings_mention(suite_operators(SuiteOptions{}),
                              "fifth-order coefficient of the subdivided difference");
  return ok;
}

// 2. Triple-route agreement across the full table, plus the binomial
// recursion for the lambda family.
bool criterion_triple_route() {
  if (!cross_check(8, 12, {1, 2, 3, 4, 5, 6, 7, 8}).empty()) return false;
  const CoeffTable rec = de_morgan_lambda(8);
  if (rec.entries.size() != 9) return false;
  for (unsigned nu = 0; nu <= 8; ++nu)
    if (!(rec.entries[nu].m_scaled == coeff(Family::Lambda, nu, Route::Bernoulli))) return false;
  return true;
}

// 3. Residue closed forms for all three families.
bool criterion_residues() {
  for (unsigned nu = 1; nu <= 6; ++nu) {
    if (!(coeff(Family::Q, 2 * nu, Route::Bernoulli) ==
          n1_residue(2 * nu + 1, PolyM(static_cast<int>(nu)))))
      return false;
    const PolyM shifted = PolyM(static_cast<int>(nu)) + (m - one) * Rational(1, 2);
    if (!(coeff(Family::P, 2 * nu, Route::Bernoulli) == n1_residue(2 * nu + 1, shifted)))
      return false;
  }
  for (unsigned r = 0; r <= 8; ++r)
    if (!(coeff(Family::Lambda, r, Route::Bernoulli) == n1_residue(r + 1, one))) return false;
  return true;
}

// 4. Trigonometric image-sum suite: even grid m <= 12, nu <= 5, a in
// [0, nu+m] at 1e-9 relative tolerance; the two anchored spot values checked
// numerically and exactly; the odd prefactor calibrated once and stable
// across the whole grid.
bool criterion_appendix() {
  SuiteOptions opt;
  opt.m_max = 12;
  opt.nu_max = 5;
  opt.tol = 1e-9;
  const Report rep = suite_appendix(opt);
  bool ok = rep.all_passed;
  ok = ok && cosec_sum_exact(2, 0, 1) == R(1) && cosec_sum_exact(2, 0, 2) == R(1);
  ok = ok && std::fabs(cosec_sum_numeric(2, 0, 1) - 1.0) <= 1e-9 &&
       std::fabs(cosec_sum_numeric(2, 0, 2) - 1.0) <= 1e-9;
  const OddPrefactor cal = calibrate_odd_prefactor(1e-9);
  ok = ok && cal.determined;
  return ok;
}

// 5. Image relation, exact.
bool criterion_image() {
  for (unsigned h = 1; h <= 6; ++h)
    for (unsigned n = 0; n <= 5; ++n)
      for (unsigned nu = 0; nu <= 6; ++nu)
        for (const Rational& a : {R(0), R(1, 2), R(1), R(2)})
          if (!image_check(n, nu, a, h).passed) return false;
  return true;
}

// 6. Identity chain for nu <= 5 (the three recorded nu = 1 edge deviations,
// nothing else), the order-step special value for n <= 8, and a produced
// recursion diagnostic (finding, not gate).
bool criterion_identity_chain() {
  const auto cases = bernoulli_identity_suite(5);
  if (cases.size() != 25) return false;
  for (size_t i = 0; i < cases.size(); ++i) {
    const unsigned nu = static_cast<unsigned>(i / 5) + 1;
    const bool expected_fail =
        nu == 1 && (cases[i].identity == "chain_leads_to" || cases[i].identity == "antisymmetry" ||
                    cases[i].identity == "difference_vanishes");
    if (cases[i].passed != !expected_fail) return false;
  }
  for (unsigned n = 1; n <= 8; ++n) {
    const std::vector<Rational> bn = unit_bernoulli_numbers(n, n);
    for (unsigned nu = 1; nu <= n; ++nu) {
      const Rational lhs =
          gen_bernoulli(n + 1, nu, one, DegreeVector::units(n + 1)).constant();
      const Rational rhs = Rational(static_cast<long>(n) - static_cast<long>(nu)) /
                           Rational(static_cast<long>(n)) * bn[nu];
      if (lhs != rhs) return false;
    }
  }
  return !norlund_recursion_diagnostic(4, 5).empty();
}

// 7. Generic-operator construction: forward and central operators reproduce
// the lambda and P tables; one global sign (sigma = -1) reconciles the quoted
// Y1..Y3 closed forms with the series route; the divided-difference closed
// form equals the series route; sigma is recorded in the report.
bool criterion_generalized() {
  const auto lam = family_generating(Family::Lambda, 8);
  const auto yf = generic_y(DeltaOperator::forward(9), 8);
  for (unsigned nu = 1; nu <= 8; ++nu)
    if (!(yf[nu - 1] == lam.coeff(nu))) return false;
  const auto p = family_generating(Family::P, 8);
  const auto yc = generic_y(DeltaOperator::central(9), 8);
  for (unsigned nu = 1; nu <= 8; ++nu) {
    const PolyM want = nu % 2 == 0 ? p.coeff(nu) : PolyM(0);
    if (!(yc[nu - 1] == want)) return false;
  }

  struct OpData {
    DeltaOperator op;
    Rational a, b, c, d;
  };
  const std::vector<OpData> ops = {
      {DeltaOperator::forward(4), R(1), R(1), R(1), R(1)},
      {DeltaOperator::central(4), R(1), R(0), R(1, 4), R(0)},
      {steffensen_phi(R(1), R(2), 4), R(1), R(4), R(13), R(40)},
  };
  const auto printed_y = [](unsigned nu, const Rational& a, const Rational& b, const Rational& c,
                            const Rational& d) -> PolyM {
    const PolyM m_minus_1 = m - one;
    if (nu == 1) return m_minus_1 * (b / (Rational(2) * a.pow(2)));
    if (nu == 2)
      return m_sq_minus(1) *
             ((Rational(2) * a * c - Rational(3) * b.pow(2)) / (Rational(12) * a.pow(4)));
    const Rational k1 = a.pow(2) * d - Rational(4) * a * b * c + Rational(3) * b.pow(3);
    const Rational k2 = a.pow(2) * d - Rational(6) * a * b * c + Rational(6) * b.pow(3);
    return m_minus_1 * (m * m * k1 + (m + one) * k2) / (Rational(24) * a.pow(6));
  };
  bool plus_ok = true, minus_ok = true;
  for (const auto& od : ops) {
    const auto y = generic_y(od.op, 3);
    for (unsigned nu = 1; nu <= 3; ++nu) {
      const PolyM printed = printed_y(nu, od.a, od.b, od.c, od.d);
      if (!(printed == y[nu - 1])) plus_ok = false;
      if (!(-printed == y[nu - 1])) minus_ok = false;
    }
  }
  if (!(minus_ok && !plus_ok)) return false;  // sigma = -1, uniquely

  const std::vector<std::pair<Rational, Rational>> pairs = {
      {R(0), R(1)}, {R(1), R(1)}, {R(-1, 2), R(1)}, {R(1), R(2)}};
  for (const auto& [alpha, beta] : pairs) {
    const auto y = generic_y(steffensen_phi(alpha, beta, 7), 6);
    for (unsigned nu = 1; nu <= 6; ++nu)
      if (!(steffensen_y_closed(nu, alpha, beta) == y[nu - 1])) return false;
  }
  return findings_mention(suite_operators(SuiteOptions{}), "global sign sigma=-1");
}

// 8. Generating-function expansion grid, including the two reductions.
bool criterion_gf() {
  for (int mm = 1; mm <= 8; ++mm)
    for (int w = -mm; w <= mm; ++w)
      for (const auto& vc : gf_check(mm, w, 12))
        if (!vc.passed) return false;
  return true;
}

// 9. Summation engine: polynomial exactness, smooth-function accuracy,
// order improvement, and the h = 1 degeneracy.
bool criterion_summation() {
  const auto quintic = [](const Rational& x) {
    return x * x * x * x * x * R(1, 10) - x * x * x * R(3) + x * x * R(2, 3) + x - R(7);
  };
  for (unsigned h : {2u, 4u, 7u})
    for (auto variant : {SummationVariant::Forward, SummationVariant::Central}) {
      const auto res = lubbock_sum(make_request<Rational>(quintic, R(-1, 2), 3, h, 6, variant));
      if (res.estimate != direct_fine_sum<Rational>(quintic, R(-1, 2), 3, h, variant))
        return false;
    }

  const auto decay = [](double x) { return std::exp(-x / 10.0); };
  {
    const auto res =
        lubbock_forward_sum(make_request<double>(decay, 0.0, 50, 10, 6, SummationVariant::Forward));
    const double direct = direct_fine_sum<double>(decay, 0.0, 50, 10, SummationVariant::Forward);
    if (std::fabs(res.estimate - direct) / std::fabs(direct) > 1e-8) return false;
  }

  const std::vector<double (*)(double)> smooth = {
      [](double x) { return std::exp(-x / 10.0); },
      [](double x) { return 1.0 / (x + 12.0); },
      [](double x) { return std::sin(x / 7.0 + 1.0); },
  };
  for (auto f : smooth)
    for (unsigned h : {4u, 8u, 16u})
      for (auto variant : {SummationVariant::Forward, SummationVariant::Central}) {
        const double direct = direct_fine_sum<double>(f, 0.0, 20, h, variant);
        const double scale = std::max(1.0, std::fabs(direct));
        const auto low = lubbock_sum(make_request<double>(f, 0.0, 20, h, 1, variant));
        const auto high = lubbock_sum(make_request<double>(f, 0.0, 20, h, 6, variant));
        const double e1 = std::fabs(low.estimate - direct) / scale;
        const double e6 = std::fabs(high.estimate - direct) / scale;
        if (e6 > e1 / 1e3) return false;
      }

  const auto cube = [](const Rational& x) { return x * x * x + R(1, 3); };
  for (auto variant : {SummationVariant::Forward, SummationVariant::Central}) {
    const auto res = lubbock_sum(make_request<Rational>(cube, R(2), 5, 1, 3, variant));
    if (res.estimate != res.coarse_term) return false;
    if (res.estimate != direct_fine_sum<Rational>(cube, R(2), 5, 1, variant)) return false;
  }
  return true;
}

// 10. Endpoint coefficients equal the integral oracle.
bool criterion_adams() {
  for (unsigned nu = 0; nu <= 8; ++nu)
    if (adams_coefficient(nu) != adams_integral_oracle(nu)) return false;
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* description;
    std::function<bool()> run;
  };
  const std::vector<Criterion> criteria = {
      {"quoted low-order polynomials reproduced exactly (fifth-order display sign deviation "
       "recorded as a finding)",
       criterion_printed_polynomials},
      {"three computation routes agree exactly (lambda through 8, P/Q through 12, factorial "
       "sums for h in 1..8, recursion route)",
       criterion_triple_route},
      {"residue closed forms reproduce all three families exactly", criterion_residues},
      {"trigonometric image sums match closed forms at 1e-9 (m <= 12, nu <= 5), spot anchors "
       "exact and numeric, odd prefactor calibration stable",
       criterion_appendix},
      {"image relation exact for h <= 6, n <= 5, nu <= 6, a in {0, 1/2, 1, 2}", criterion_image},
      {"identity chain exact for nu <= 5 with the three recorded nu=1 edge deviations, "
       "order-step value exact for n <= 8, recursion diagnostic produced",
       criterion_identity_chain},
      {"generic operator reproduces lambda/P tables (nu <= 8); global sign sigma=-1 uniquely "
       "reconciles the quoted Y1..Y3 and is recorded; divided-difference closed form exact "
       "(nu <= 6)",
       criterion_generalized},
      {"generating-function expansion exact for m <= 8, |w| <= m, order 12, with Q and P "
       "reductions",
       criterion_gf},
      {"summation: polynomial exactness (degree 5, K=6, both variants), e^{-x/10} accuracy "
       "<= 1e-8, K=1 -> K=6 error drop >= 10^3, h=1 degeneracy exact",
       criterion_summation},
      {"endpoint coefficients equal the exact integral oracle (nu <= 8)", criterion_adams},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    try {
      ok = criteria[i].run();
    } catch (const std::exception& e) {
      std::printf("criterion %zu: FAIL — %s (exception: %s)\n", i + 1,
                  criteria[i].description, e.what());
      ++failures;
      continue;
    }
    std::printf("criterion %zu: %s — %s\n", i + 1, ok ? "PASS" : "FAIL",
                criteria[i].description);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
