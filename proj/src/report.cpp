/**
 * @file report.cpp
 * @brief Verification suite construction and serialization.
 */
#include "lubbock/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <future>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lubbock/bernoulli.hpp"
#include "lubbock/factorials.hpp"
#include "lubbock/families.hpp"
#include "lubbock/operators.hpp"

namespace lubbock {

namespace {

using CaseJob = std::function<std::vector<VerificationCase>()>;

/// Runs independent jobs on a small worker pool; results are merged in job
/// order, so the report is deterministic regardless of scheduling.
std::vector<VerificationCase> run_parallel(std::vector<CaseJob> jobs) {
  std::vector<std::vector<VerificationCase>> results(jobs.size());
  const unsigned workers = std::max(
      1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(jobs.size())));
  std::atomic<size_t> next{0};
  std::vector<std::future<void>> futures;
  futures.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&] {
      for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
        results[i] = jobs[i]();
    }));
  }
  for (auto& f : futures) f.get();
  std::vector<VerificationCase> merged;
  for (auto& r : results)
    for (auto& c : r) merged.push_back(std::move(c));
  return merged;
}

VerificationCase poly_case(const std::string& identity, const std::string& params,
                           const PolyM& lhs, const PolyM& rhs) {
  VerificationCase vc;
  vc.identity = identity;
  vc.params = params;
  vc.lhs = lhs.to_string();
  vc.rhs = rhs.to_string();
  vc.passed = (lhs == rhs);
  if (!vc.passed) vc.note = "difference " + (lhs - rhs).to_string();
  return vc;
}

VerificationCase rational_case(const std::string& identity, const std::string& params,
                               const Rational& lhs, const Rational& rhs) {
  VerificationCase vc;
  vc.identity = identity;
  vc.params = params;
  vc.lhs = lhs.to_string();
  vc.rhs = rhs.to_string();
  vc.passed = (lhs == rhs);
  return vc;
}

VerificationCase flag_case(const std::string& identity, const std::string& params, bool passed,
                           const std::string& lhs, const std::string& rhs,
                           const std::string& note = "") {
  VerificationCase vc;
  vc.identity = identity;
  vc.params = params;
  vc.lhs = lhs;
  vc.rhs = rhs;
  vc.passed = passed;
  vc.note = note;
  return vc;
}

void finish(Report& rep) {
  rep.all_passed = true;
  for (const auto& c : rep.cases)
    if (!c.passed) rep.all_passed = false;
}

PolyM m_sq_minus(long k) {
  return PolyM(std::vector<Rational>{Rational(-k), Rational(0), Rational(1)});
}

}  // namespace

Report suite_appendix(const SuiteOptions& opt) {
  Report rep;
  rep.suite = "appendix";
  const int m_max = opt.m_max;
  const int nu_max = opt.nu_max;
  const double tol = opt.tol;

  std::vector<CaseJob> jobs;
  for (int m = 1; m <= m_max; ++m) {
    jobs.push_back([m, nu_max, tol] {
      std::vector<VerificationCase> out;
      for (int nu = 1; nu <= nu_max; ++nu) {
        for (int w = -m; w <= m; ++w) {
          VerificationCase vc;
          vc.identity = "cosec_sum";
          {
            std::ostringstream os;
            os << "m=" << m << " w=" << w << " nu=" << nu;
            vc.params = os.str();
          }
          const double num = cosec_sum_numeric(m, w, nu);
          const Rational ex = cosec_sum_exact(m, w, nu);
          vc.lhs = std::to_string(num);
          vc.rhs = ex.to_string();
          vc.rel_err = std::fabs(num - ex.to_double()) / std::max(1.0, std::fabs(ex.to_double()));
          vc.passed = vc.rel_err <= tol;
          out.push_back(std::move(vc));
        }
        for (int a = 0; a <= nu + m; ++a) {
          out.push_back(appendix_sum_check(AppendixKind::Even, m, a, nu, tol));
          out.push_back(appendix_sum_check(AppendixKind::Odd, m, a, nu, tol));
        }
      }
      return out;
    });
  }
  rep.cases = run_parallel(std::move(jobs));

  // Anchored spot values, numerically and exactly.
  for (int nu : {1, 2}) {
    const Rational ex = cosec_sum_exact(2, 0, nu);
    const double num = cosec_sum_numeric(2, 0, nu);
    std::ostringstream os;
    os << "m=2 w=0 nu=" << nu;
    VerificationCase vc = rational_case("cosec_anchor", os.str(), ex, Rational(1));
    vc.rel_err = std::fabs(num - 1.0);
    vc.passed = vc.passed && vc.rel_err <= tol;
    vc.note = "numeric " + std::to_string(num);
    rep.cases.push_back(std::move(vc));
  }

  // Odd-sum prefactor calibration at the anchor point; the grid above asserts
  // the same constant everywhere.
  const OddPrefactor cal = calibrate_odd_prefactor(tol);
  rep.cases.push_back(flag_case(
      "odd_prefactor_calibration", "anchor m=2 nu=1 a=1",
      cal.determined && cal.eps == 1 && cal.m_power == 0,
      cal.determined ? ("eps=" + std::to_string(cal.eps) + " m_power=" + std::to_string(cal.m_power))
                     : "undetermined",
      "eps=1 m_power=0"));
  if (cal.determined) {
    std::ostringstream os;
    os << "odd image-sum prefactor calibrated once at (m,nu,a)=(2,1,1) and asserted across the "
          "grid: (-1)^nu * 2^(2nu-1)/(2nu-1)! (eps=" << cal.eps << ", m power " << cal.m_power
       << "); the sign alternates with nu - no nu-independent constant fits the grid";
    rep.findings.push_back(os.str());
  }

  // The flat quoted prefactor for the even sums misses a factor m and the
  // alternating sign; record the exact discrepancy at (m,nu,a)=(3,1,1).
  {
    const Rational direct = cosec_sum_exact(3, 0, 1);
    const PolyM bern = gen_bernoulli(3, 2, PolyM(1), DegreeVector::m_and_units(2));
    const Rational flat = Rational(4) / factorial(2) * bern.eval(Rational(3)) / Rational(3);
    std::ostringstream os;
    os << "even image-sum closed form: the flat quoted prefactor (2^(2nu)/(2nu)!)(1/m) gives "
       << flat.to_string() << " at (m,nu,a)=(3,1,1) against the directly summed "
       << direct.to_string()
       << "; the verified form carries (-1)^(nu+1) 2^(2nu)/(2nu)! with no 1/m";
    rep.findings.push_back(os.str());
  }

  finish(rep);
  return rep;
}

Report suite_image(const SuiteOptions& opt) {
  Report rep;
  rep.suite = "image";
  const unsigned h_max = 6;
  const unsigned n_max = 5;
  const unsigned nu_max = static_cast<unsigned>(std::max(opt.nu_max, 1));

  std::vector<CaseJob> jobs;
  for (unsigned h = 1; h <= h_max; ++h) {
    jobs.push_back([h, n_max, nu_max] {
      std::vector<VerificationCase> out;
      for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned nu = 0; nu <= nu_max; ++nu) {
          const std::vector<Rational> args = {Rational(0), Rational(1, 2), Rational(1), Rational(2),
                                              Rational(static_cast<long>(nu))};
          for (const Rational& a : args) out.push_back(image_check(n, nu, a, h));
        }
      }
      return out;
    });
  }
  rep.cases = run_parallel(std::move(jobs));
  finish(rep);
  return rep;
}

Report suite_gf(const SuiteOptions& opt) {
  Report rep;
  rep.suite = "gf";
  const int m_max = opt.m_max;
  const long order = 12;

  std::vector<CaseJob> jobs;
  for (int m = 1; m <= m_max; ++m) {
    jobs.push_back([m, order] {
      std::vector<VerificationCase> out;
      for (int w = -m; w <= m; ++w) {
        auto cases = gf_check(m, w, order);
        for (auto& c : cases) out.push_back(std::move(c));
      }
      return out;
    });
  }
  rep.cases = run_parallel(std::move(jobs));
  finish(rep);
  return rep;
}

Report suite_operators(const SuiteOptions& opt) {
  (void)opt;
  Report rep;
  rep.suite = "operators";
  auto& cases = rep.cases;
  const PolyM m = PolyM::var();

  // Subdivided central difference in powers of delta.
  {
    const Series<PolyM> dm = delta_m_expansion(8);
    const PolyM d3 = m * m_sq_minus(1) / Rational(24);
    const PolyM d5 = m * m_sq_minus(1) * m_sq_minus(9) / Rational(1920);
    const PolyM d7 = m * m_sq_minus(1) * m_sq_minus(9) * m_sq_minus(25) / Rational(322560);
    cases.push_back(poly_case("delta_m_coefficient", "order=1", dm.coeff(1), m));
    cases.push_back(poly_case("delta_m_coefficient", "order=3", dm.coeff(3), d3));
    cases.push_back(poly_case("delta_m_coefficient", "order=5", dm.coeff(5), d5));
    cases.push_back(poly_case("delta_m_coefficient", "order=7", dm.coeff(7), d7));
    for (long k = 2; k <= 8; k += 2)
      cases.push_back(poly_case("delta_m_even_vanishes", "order=" + std::to_string(k),
                                dm.coeff(k), PolyM(0)));
    if (dm.coeff(5) == d5 && !(dm.coeff(5) == -d5)) {
      rep.findings.push_back(
          "fifth-order coefficient of the subdivided difference: computed " + d5.to_string() +
          "; the quoted display lists the negation of this value (its sign is inconsistent with "
          "the m=2 specialization 2x + x^3/4 - x^5/64)");
    }
  }

  // Logarithmic tail and its tie to the Q family.
  {
    const Series<PolyM> lt = log_delta_m_tail(8);
    cases.push_back(poly_case("log_tail_coefficient", "order=2", lt.coeff(2),
                              m_sq_minus(1) / Rational(24)));
    cases.push_back(poly_case("log_tail_coefficient", "order=4", lt.coeff(4),
                              -(m_sq_minus(1) * (m_sq_minus(-11))) / Rational(2880)));
    for (long k = 1; k <= 7; k += 2)
      cases.push_back(
          poly_case("log_tail_odd_vanishes", "order=" + std::to_string(k), lt.coeff(k), PolyM(0)));
    for (unsigned nu = 1; nu <= 4; ++nu)
      cases.push_back(poly_case("q_from_log_tail", "nu=" + std::to_string(nu),
                                coeff(Family::Q, 2 * nu, Route::Bernoulli),
                                lt.coeff(2 * nu) * Rational(2 * nu)));
  }

  // Quoted second and fourth Q polynomials.
  cases.push_back(poly_case("printed_q", "order=2", coeff(Family::Q, 2, Route::Bernoulli),
                            m_sq_minus(1) / Rational(12)));
  cases.push_back(poly_case("printed_q", "order=4", coeff(Family::Q, 4, Route::Bernoulli),
                            -(m_sq_minus(1) * m_sq_minus(-11)) / Rational(720)));

  // Residue closed forms against the series route for all three families.
  for (unsigned r = 1; r <= 8; ++r)
    cases.push_back(poly_case("residue_lambda", "nu=" + std::to_string(r),
                              coeff(Family::Lambda, r, Route::SeriesExpansion),
                              n1_residue(r + 1, PolyM(1))));
  for (unsigned nu = 1; nu <= 6; ++nu) {
    cases.push_back(poly_case("residue_q", "nu=" + std::to_string(nu),
                              coeff(Family::Q, 2 * nu, Route::SeriesExpansion),
                              n1_residue(2 * nu + 1, PolyM(Rational(nu)))));
    const PolyM p_arg = PolyM(Rational(nu)) + (m - PolyM(1)) * Rational(1, 2);
    cases.push_back(poly_case("residue_p", "nu=" + std::to_string(nu),
                              coeff(Family::P, 2 * nu, Route::SeriesExpansion),
                              n1_residue(2 * nu + 1, p_arg)));
  }

  // Generalized construction specialized to the two classical operators.
  {
    const auto yf = generic_y(DeltaOperator::forward(9), 8);
    for (unsigned nu = 1; nu <= 8; ++nu)
      cases.push_back(poly_case("generic_y_forward", "nu=" + std::to_string(nu), yf[nu - 1],
                                coeff(Family::Lambda, nu, Route::Bernoulli)));
    const auto yc = generic_y(DeltaOperator::central(9), 8);
    for (unsigned nu = 1; nu <= 8; ++nu) {
      if (nu % 2 == 0)
        cases.push_back(poly_case("generic_y_central", "nu=" + std::to_string(nu), yc[nu - 1],
                                  coeff(Family::P, nu, Route::Bernoulli)));
      else
        cases.push_back(
            poly_case("generic_y_central_odd", "nu=" + std::to_string(nu), yc[nu - 1], PolyM(0)));
    }
  }

  // Every Y table collapses at m = 1.
  {
    const std::vector<std::pair<std::string, DeltaOperator>> ops = {
        {"forward", DeltaOperator::forward(7)},
        {"central", DeltaOperator::central(7)},
        {"steffensen(1,2)", steffensen_phi(Rational(1), Rational(2), 7)},
    };
    for (const auto& [name, op] : ops) {
      const auto y = generic_y(op, 6);
      for (unsigned nu = 1; nu <= 6; ++nu)
        cases.push_back(rational_case("y_vanishes_at_one", name + " nu=" + std::to_string(nu),
                                      y[nu - 1].eval(Rational(1)), Rational(0)));
    }
  }

  // Quoted low-order closed forms for Y1..Y3 carry one undetermined global
  // sign; resolve it against the series route over three operators.
  {
    struct OpData {
      std::string name;
      DeltaOperator op;
      Rational a, b, c, d;
    };
    const std::vector<OpData> ops = {
        {"forward", DeltaOperator::forward(4), Rational(1), Rational(1), Rational(1), Rational(1)},
        {"central", DeltaOperator::central(4), Rational(1), Rational(0), Rational(1, 4), Rational(0)},
        {"steffensen(1,2)", steffensen_phi(Rational(1), Rational(2), 4), Rational(1), Rational(4),
         Rational(13), Rational(40)},
    };
    const auto printed_y = [&m](unsigned nu, const Rational& a, const Rational& b,
                                const Rational& c, const Rational& d) -> PolyM {
      const PolyM m_minus_1 = m - PolyM(1);
      if (nu == 1) return m_minus_1 * (b / (Rational(2) * a.pow(2)));
      if (nu == 2)
        return m_sq_minus(1) *
               ((Rational(2) * a * c - Rational(3) * b.pow(2)) / (Rational(12) * a.pow(4)));
      const Rational k1 = a.pow(2) * d - Rational(4) * a * b * c + Rational(3) * b.pow(3);
      const Rational k2 = a.pow(2) * d - Rational(6) * a * b * c + Rational(6) * b.pow(3);
      const PolyM bracket = m * m * k1 + (m + PolyM(1)) * k2;
      return m_minus_1 * bracket / (Rational(24) * a.pow(6));
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
    const bool resolved = plus_ok != minus_ok;
    const std::string sigma = plus_ok ? "+1" : (minus_ok ? "-1" : "none");
    cases.push_back(flag_case("printed_y_sign_resolution", "operators forward, central, steffensen(1,2)",
                              resolved, "sigma=" + sigma, "a single global sign",
                              resolved ? "" : "no single sign reconciles the quoted list"));
    if (resolved)
      rep.findings.push_back("global sign sigma=" + sigma +
                             " reconciles the quoted low-order Y1..Y3 closed forms with the series "
                             "route (recorded; applied only to that quoted list)");
  }

  // Steffensen operator: quoted coefficients, reductions, and the exact
  // Bernoulli closed form for its Y table.
  {
    const DeltaOperator s12 = steffensen_phi(Rational(1), Rational(2), 4);
    const std::vector<Rational> expect = {Rational(1), Rational(4), Rational(13), Rational(40)};
    bool ok = s12.coeffs == expect;
    cases.push_back(flag_case("steffensen_phi_coefficients", "alpha=1 beta=2 first four", ok,
                              "(1, 4, 13, 40)", "(1, 4, 13, 40)"));
    const DeltaOperator red_f = steffensen_phi(Rational(0), Rational(1), 6);
    cases.push_back(flag_case("steffensen_reduces_forward", "alpha=0 beta=1",
                              red_f.coeffs == DeltaOperator::forward(6).coeffs, "coefficients",
                              "forward difference"));
    const DeltaOperator red_c = steffensen_phi(Rational(-1, 2), Rational(1), 6);
    cases.push_back(flag_case("steffensen_reduces_central", "alpha=-1/2 beta=1",
                              red_c.coeffs == DeltaOperator::central(6).coeffs, "coefficients",
                              "central difference"));

    const std::vector<std::pair<Rational, Rational>> pairs = {
        {Rational(0), Rational(1)}, {Rational(1), Rational(1)},
        {Rational(-1, 2), Rational(1)}, {Rational(1), Rational(2)}};
    for (const auto& [alpha, beta] : pairs) {
      const auto y = generic_y(steffensen_phi(alpha, beta, 7), 6);
      for (unsigned nu = 1; nu <= 6; ++nu) {
        std::ostringstream os;
        os << "alpha=" << alpha << " beta=" << beta << " nu=" << nu;
        cases.push_back(poly_case("steffensen_closed_form", os.str(),
                                  steffensen_y_closed(nu, alpha, beta), y[nu - 1]));
      }
    }
  }

  finish(rep);
  return rep;
}

Report suite_bernoulli(const SuiteOptions& opt) {
  Report rep;
  rep.suite = "bernoulli";
  auto& cases = rep.cases;
  const unsigned nu_max = static_cast<unsigned>(std::max(opt.nu_max, 1));

  // Spot values of the ordinary numbers.
  cases.push_back(rational_case("bernoulli_number", "s=1", bernoulli_number(1), Rational(-1, 2)));
  cases.push_back(rational_case("bernoulli_number", "s=2", bernoulli_number(2), Rational(1, 6)));
  cases.push_back(rational_case("bernoulli_number", "s=4", bernoulli_number(4), Rational(-1, 30)));
  cases.push_back(
      rational_case("bernoulli_number", "s=12", bernoulli_number(12), Rational(-691, 2730)));

  // Generating-function route vs convolution route.
  {
    std::vector<CaseJob> jobs;
    for (unsigned n_plus_1 = 1; n_plus_1 <= 5; ++n_plus_1) {
      jobs.push_back([n_plus_1] {
        std::vector<VerificationCase> out;
        const std::vector<PolyM> args = {PolyM(0), PolyM(1), PolyM::var(),
                                         (PolyM::var() + PolyM(1)) * Rational(1, 2)};
        for (unsigned nu = 0; nu <= 8; ++nu) {
          for (size_t ai = 0; ai < args.size(); ++ai) {
            std::ostringstream os;
            os << "n=" << n_plus_1 << " nu=" << nu << " arg#" << ai;
            out.push_back(poly_case(
                "route_equivalence", os.str(),
                gen_bernoulli(n_plus_1, nu, args[ai], DegreeVector::m_and_units(n_plus_1 - 1)),
                gen_bernoulli_convolution(n_plus_1, nu, args[ai])));
          }
        }
        return out;
      });
    }
    for (auto& c : run_parallel(std::move(jobs))) cases.push_back(std::move(c));
  }

  // All-unit-degree factorial structure and the order-step special value.
  for (unsigned n = 1; n <= 8; ++n) {
    for (const Rational& a : {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(7, 3)}) {
      std::ostringstream os;
      os << "n=" << n << " a=" << a;
      cases.push_back(rational_case(
          "factorial_structure", os.str(),
          gen_bernoulli(n + 1, n, PolyM(a), DegreeVector::units(n + 1)).constant(),
          falling_factorial(a, n, /*reduced=*/true)));
    }
  }
  for (unsigned n = 1; n <= 8; ++n) {
    const std::vector<Rational> bn = unit_bernoulli_numbers(n, n);
    for (unsigned nu = 1; nu <= n; ++nu) {
      std::ostringstream os;
      os << "n=" << n << " nu=" << nu;
      const Rational lhs =
          gen_bernoulli(n + 1, nu, PolyM(1), DegreeVector::units(n + 1)).constant();
      const Rational rhs = Rational(static_cast<long>(n) - static_cast<long>(nu)) /
                           Rational(static_cast<long>(n)) * bn[nu];
      cases.push_back(rational_case("order_step_special_value", os.str(), lhs, rhs));
    }
  }

  // First-order polynomial is the argument minus half the degree sum.
  {
    const std::vector<DegreeVector> vecs = {DegreeVector::units(3), DegreeVector::m_and_units(2),
                                            DegreeVector::scaled_and_units(Rational(1, 3), 4)};
    for (size_t vi = 0; vi < vecs.size(); ++vi) {
      PolyM half_sum;
      for (const auto& w : vecs[vi].entries) half_sum += w;
      half_sum = half_sum * Rational(1, 2);
      for (const PolyM& x : {PolyM(Rational(2, 3)), PolyM::var()}) {
        std::ostringstream os;
        os << "vec#" << vi;
        cases.push_back(poly_case(
            "degree_one", os.str(),
            gen_bernoulli(static_cast<unsigned>(vecs[vi].entries.size()), 1, x, vecs[vi]),
            x - half_sum));
      }
    }
  }

  // Setting the symbolic degree to 1 reduces to the all-unit-degree value.
  for (unsigned n = 2; n <= 5; ++n) {
    for (unsigned nu = 0; nu <= 5; ++nu) {
      std::ostringstream os;
      os << "n=" << n << " nu=" << nu;
      const Rational lhs =
          gen_bernoulli(n, nu, PolyM(Rational(1, 3)), DegreeVector::m_and_units(n - 1))
              .eval(Rational(1));
      const Rational rhs =
          gen_bernoulli(n, nu, PolyM(Rational(1, 3)), DegreeVector::units(n)).constant();
      cases.push_back(rational_case("unit_degree_reduction", os.str(), lhs, rhs));
    }
  }

  // The identity chain. The quoted chain fails as printed at nu=1 (three of
  // the five statements); those exact deviations become findings, and the
  // suite gates on the full observed pattern instead.
  {
    const auto chain = bernoulli_identity_suite(nu_max);
    const auto expected_to_fail = [](const std::string& identity, unsigned nu) {
      return nu == 1 && (identity == "chain_leads_to" || identity == "antisymmetry" ||
                         identity == "difference_vanishes");
    };
    bool pattern_ok = true;
    for (size_t i = 0; i < chain.size(); ++i) {
      const unsigned nu = static_cast<unsigned>(i / 5) + 1;
      const VerificationCase& c = chain[i];
      if (expected_to_fail(c.identity, nu)) {
        if (c.passed) {
          pattern_ok = false;
          cases.push_back(c);
        } else {
          rep.findings.push_back("identity chain: " + c.identity + " fails as stated at nu=1 (" +
                                 c.lhs + " vs " + c.rhs + "); it holds for every nu >= 2");
        }
      } else {
        cases.push_back(c);
        if (!c.passed) pattern_ok = false;
      }
    }
    cases.push_back(flag_case("identity_chain_pattern", "nu_max=" + std::to_string(nu_max),
                              pattern_ok, "observed hold/fail pattern",
                              "holds everywhere except three nu=1 statements"));
  }

  // Recursion diagnostic: reported, never gated.
  {
    const auto diag = norlund_recursion_diagnostic(4, 5);
    std::vector<std::string> holds;
    for (const auto& c : diag) {
      rep.findings.push_back("recursion diagnostic " + c.params + ": " +
                             (c.passed ? "holds" : "fails") + " (lhs " + c.lhs + ", rhs " + c.rhs +
                             ")");
      if (c.passed) holds.push_back(c.params);
    }
    std::ostringstream os;
    os << "the quoted self-recursion for all-unit-degree values is not an identity; on the grid "
          "n<=4, nu<=5 it holds only at: ";
    for (size_t i = 0; i < holds.size(); ++i) os << (i ? ", " : "") << holds[i];
    rep.findings.push_back(os.str());
    cases.push_back(flag_case("norlund_diagnostic_produced", "n<=4 nu<=5", !diag.empty(),
                              std::to_string(diag.size()) + " diagnostic entries", "non-empty"));
  }

  finish(rep);
  return rep;
}

Report suite_all(const SuiteOptions& opt) {
  Report rep;
  rep.suite = "all";
  for (const auto* name : {"appendix", "image", "gf", "operators", "bernoulli"}) {
    Report sub = suite_by_name(name, opt);
    for (auto& c : sub.cases) {
      c.identity = sub.suite + "/" + c.identity;
      rep.cases.push_back(std::move(c));
    }
    for (auto& f : sub.findings) rep.findings.push_back(sub.suite + ": " + f);
  }
  finish(rep);
  return rep;
}

Report suite_by_name(const std::string& name, const SuiteOptions& opt) {
  if (name == "appendix") return suite_appendix(opt);
  if (name == "image") return suite_image(opt);
  if (name == "gf") return suite_gf(opt);
  if (name == "operators") return suite_operators(opt);
  if (name == "bernoulli") return suite_bernoulli(opt);
  if (name == "all") return suite_all(opt);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string report_to_json(const Report& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["cases"] = nlohmann::json::array();
  for (const auto& c : report.cases) {
    j["cases"].push_back({{"identity", c.identity},
                          {"params", c.params},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"rel_err", c.rel_err},
                          {"passed", c.passed},
                          {"note", c.note}});
  }
  j["findings"] = report.findings;
  j["all_passed"] = report.all_passed;
  return j.dump(2);
}

namespace {
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}
}  // namespace

std::string report_to_csv(const Report& report) {
  std::ostringstream os;
  os << "identity,params,lhs,rhs,rel_err,passed,note\n";
  for (const auto& c : report.cases) {
    os << csv_escape(c.identity) << ',' << csv_escape(c.params) << ',' << csv_escape(c.lhs) << ','
       << csv_escape(c.rhs) << ',' << c.rel_err << ',' << (c.passed ? "true" : "false") << ','
       << csv_escape(c.note) << '\n';
  }
  for (const auto& f : report.findings) os << "# finding: " << f << '\n';
  return os.str();
}

}  // namespace lubbock
