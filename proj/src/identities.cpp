/**
 * @file identities.cpp
 * @brief Implementation of the identity checks.
 */
#include "lubbock/identities.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "lubbock/bernoulli.hpp"
#include "lubbock/operators.hpp"
#include "lubbock/series.hpp"

namespace lubbock {

namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

double rel_against(double lhs, double rhs) {
  return std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs));
}

/// Evaluates every coefficient of a polynomial-valued series at a rational.
Series<Rational> eval_series_at(const Series<PolyM>& f, const Rational& m) {
  if (f.is_zero()) return Series<Rational>::zero_through(f.trunc());
  std::vector<Rational> out;
  for (long k = f.val(); k <= f.trunc(); ++k) out.push_back(f.coeff(k).eval(m));
  return Series<Rational>::from_coeffs(f.val(), std::move(out));
}

}  // namespace

int canonical_twist(int m, int w) {
  const int r = ((w % m) + m) % m;
  return std::min(r, m - r);
}

int canonical_argument(int m, int a) {
  return (((a - 1) % m) + m) % m + 1;
}

double cos_two_pi(const Rational& q) {
  const Rational frac = q - Rational(q.floor());
  return std::cos(2.0 * std::numbers::pi_v<double> * frac.to_double());
}

double sin_two_pi(const Rational& q) {
  const Rational frac = q - Rational(q.floor());
  return std::sin(2.0 * std::numbers::pi_v<double> * frac.to_double());
}

double cosec_sum_numeric(int m, int w, int nu) {
  double sum = 0.0;
  for (int l = 1; l < m; ++l) {
    const double c = cos_two_pi(Rational(static_cast<long>(w) * l, m));
    const double s = std::sin(std::numbers::pi_v<double> * l / m);
    sum += c * std::pow(1.0 / s, 2 * nu);
  }
  return sum;
}

Rational cosec_sum_exact(int m, int w, int nu) {
  if (m < 1) throw std::invalid_argument("cosec_sum_exact: m must be positive");
  if (nu < 1) throw std::invalid_argument("cosec_sum_exact: nu must be positive");
  if (m == 1) return Rational(0);
  const int wc = canonical_twist(m, w);
  const PolyM arg(Rational(nu + wc));
  const Rational value = n1_residue(2 * static_cast<unsigned>(nu) + 1, arg).eval(Rational(m));
  const Rational scale = Rational(4).pow(nu);
  return (nu % 2 == 0) ? -(scale * value) : scale * value;
}

VerificationCase appendix_sum_check(AppendixKind kind, int m, int a, int nu, double tol) {
  VerificationCase vc;
  vc.identity = (kind == AppendixKind::Even) ? "appendix_even" : "appendix_odd";
  {
    std::ostringstream os;
    os << "m=" << m << " a=" << a << " nu=" << nu;
    vc.params = os.str();
  }
  if (kind == AppendixKind::Even) {
    double lhs = 0.0;
    for (int l = 1; l < m; ++l) {
      const double c = cos_two_pi(Rational(static_cast<long>(a - nu) * l, m));
      const double s = std::sin(std::numbers::pi_v<double> * l / m);
      lhs += c * std::pow(1.0 / s, 2 * nu);
    }
    const Rational rhs = cosec_sum_exact(m, a - nu, nu);
    vc.lhs = fmt_double(lhs);
    vc.rhs = rhs.to_string();
    vc.rel_err = rel_against(lhs, rhs.to_double());
    vc.passed = vc.rel_err <= tol;
    return vc;
  }
  double lhs = 0.0;
  for (int l = 1; l < m; ++l) {
    // twist (a - nu + 1/2): angle l (2(a - nu) + 1) / (2m) of a full turn.
    const double s = sin_two_pi(Rational(static_cast<long>(l) * (2L * (a - nu) + 1), 2L * m));
    const double d = std::sin(std::numbers::pi_v<double> * l / m);
    lhs += s * std::pow(1.0 / d, 2 * nu - 1);
  }
  const int ac = canonical_argument(m, a);
  const unsigned two_nu = 2 * static_cast<unsigned>(nu);
  const PolyM bern = gen_bernoulli(two_nu, two_nu - 1, PolyM(Rational(ac)),
                                   DegreeVector::m_and_units(two_nu - 1));
  Rational pref = Rational(2).pow(2 * nu - 1) / factorial(2 * static_cast<unsigned>(nu) - 1);
  if (nu % 2 != 0) pref = -pref;
  const Rational rhs = pref * bern.eval(Rational(m));
  vc.lhs = fmt_double(lhs);
  vc.rhs = rhs.to_string();
  vc.rel_err = rel_against(lhs, rhs.to_double());
  vc.passed = vc.rel_err <= tol;
  return vc;
}

OddPrefactor calibrate_odd_prefactor(double tol) {
  // Anchor point: the smallest grid point with a nonzero sum.
  const int m = 2, nu = 1, a = 1;
  double lhs = 0.0;
  for (int l = 1; l < m; ++l) {
    const double s = sin_two_pi(Rational(static_cast<long>(l) * (2L * (a - nu) + 1), 2L * m));
    const double d = std::sin(std::numbers::pi_v<double> * l / m);
    lhs += s * std::pow(1.0 / d, 2 * nu - 1);
  }
  const int ac = canonical_argument(m, a);
  const Rational bern =
      gen_bernoulli(2, 1, PolyM(Rational(ac)), DegreeVector::m_and_units(1)).eval(Rational(m));
  OddPrefactor result;
  for (int eps : {1, -1}) {
    for (int p : {-1, 0, 1}) {
      Rational cand = Rational(2).pow(2 * nu - 1) / factorial(2u * nu - 1);
      if (nu % 2 != 0) cand = -cand;
      cand = cand * Rational(eps) * Rational(m).pow(p);
      const double rhs = (cand * bern).to_double();
      if (rel_against(lhs, rhs) <= tol) {
        if (result.determined) throw std::logic_error("odd prefactor calibration is ambiguous");
        result.eps = eps;
        result.m_power = p;
        result.determined = true;
      }
    }
  }
  return result;
}

VerificationCase image_check(unsigned n, unsigned nu, const Rational& a, unsigned h) {
  VerificationCase vc;
  vc.identity = "image";
  {
    std::ostringstream os;
    os << "n=" << n << " nu=" << nu << " a=" << a << " h=" << h;
    vc.params = os.str();
  }
  const DegreeVector units = DegreeVector::units(n + 1);
  Rational lhs(0);
  for (unsigned s = 0; s < h; ++s) {
    const PolyM x(a + Rational(s, h));
    lhs += gen_bernoulli(n + 1, nu, x, units).constant();
  }
  const DegreeVector scaled = DegreeVector::scaled_and_units(Rational(1, h), n);
  const Rational rhs =
      Rational(h) * gen_bernoulli(n + 1, nu, PolyM(a), scaled).constant();
  vc.lhs = lhs.to_string();
  vc.rhs = rhs.to_string();
  vc.rel_err = 0.0;
  vc.passed = (lhs == rhs);
  if (!vc.passed) vc.rel_err = rel_against(lhs.to_double(), rhs.to_double());
  return vc;
}

std::vector<VerificationCase> gf_check(int m, int w, long order) {
  if (m < 1) throw std::invalid_argument("gf_check: m must be positive");
  if (order < 2) throw std::invalid_argument("gf_check: order must be at least 2");
  std::vector<VerificationCase> out;
  const int wc = canonical_twist(m, w);
  const long t = order + 1;
  const Rational mr(m);

  const Series<Rational> x = Series<Rational>::identity(t);
  const Series<Rational> th = tanh_series(x.scaled(Rational(1, 2)));
  const Series<Rational> sm = sinh_series(x.scaled(mr / Rational(2)));
  const Series<Rational> ch = cosh_series(x.scaled(Rational(wc) - mr / Rational(2)));
  const Series<Rational> s_in_d =
      Series<Rational>::constant(Rational(1), t) - (ch * (th / sm)).scaled(mr);
  const Series<Rational> rev = series_central_delta(t).revert();
  const Series<Rational> s_in_delta = s_in_d.compose(rev);

  for (int nu = 1; 2L * nu <= order; ++nu) {
    VerificationCase vc;
    vc.identity = "gf_coefficient";
    {
      std::ostringstream os;
      os << "m=" << m << " w=" << w << " nu=" << nu;
      vc.params = os.str();
    }
    const Rational actual = s_in_delta.coeff(2 * nu);
    Rational expected = cosec_sum_exact(m, wc, nu) / Rational(4).pow(nu);
    if (nu % 2 != 0) expected = -expected;
    vc.lhs = actual.to_string();
    vc.rhs = expected.to_string();
    vc.passed = (actual == expected);
    if (!vc.passed) vc.rel_err = rel_against(actual.to_double(), expected.to_double());
    out.push_back(std::move(vc));
  }

  const auto reduction_case = [&](Family family, const char* name) {
    VerificationCase vc;
    vc.identity = name;
    {
      std::ostringstream os;
      os << "m=" << m << " w=" << w;
      vc.params = os.str();
    }
    const Series<Rational> gen = eval_series_at(family_generating(family, order), mr);
    const Series<Rational> expected = Series<Rational>::constant(Rational(1), order) - gen;
    vc.passed = s_in_delta.agrees_with(expected);
    vc.lhs = "series expansion";
    vc.rhs = "1 - family generating series";
    if (!vc.passed) vc.rel_err = 1.0;
    out.push_back(std::move(vc));
  };
  if (wc == 0) reduction_case(Family::Q, "gf_q_reduction");
  if (m % 2 == 1 && wc == (m - 1) / 2) reduction_case(Family::P, "gf_p_reduction");
  return out;
}

std::vector<VerificationCase> bernoulli_identity_suite(unsigned nu_max) {
  std::vector<VerificationCase> out;
  const PolyM mvar = PolyM::var();
  for (unsigned nu = 1; nu <= nu_max; ++nu) {
    const unsigned hi = 2 * nu;
    const DegreeVector deg_hi = DegreeVector::m_and_units(hi - 1);
    const auto b_hi = [&](const PolyM& x) { return gen_bernoulli(hi, hi - 1, x, deg_hi); };
    const PolyM at_nu = b_hi(PolyM(Rational(nu)));
    const PolyM at_nu_minus = b_hi(PolyM(Rational(nu) - Rational(1)));
    const PolyM at_m_plus_nu = b_hi(mvar + PolyM(Rational(nu)));

    const auto add_case = [&](const char* name, const PolyM& lhs, const PolyM& rhs) {
      VerificationCase vc;
      vc.identity = name;
      {
        std::ostringstream os;
        os << "nu=" << nu;
        vc.params = os.str();
      }
      vc.lhs = lhs.to_string();
      vc.rhs = rhs.to_string();
      vc.passed = (lhs == rhs);
      if (!vc.passed) vc.note = "difference " + (lhs - rhs).to_string();
      out.push_back(std::move(vc));
    };

    PolyM chain_rhs;
    if (hi >= 2) {
      const DegreeVector deg_lo = DegreeVector::m_and_units(hi - 2);
      chain_rhs =
          Rational(static_cast<long>(hi) - 1) *
          gen_bernoulli(hi - 1, hi - 2, PolyM(Rational(nu) - Rational(1)), deg_lo);
    }
    add_case("chain_leads_to", Rational(2) * at_nu, chain_rhs);
    add_case("antisymmetry", at_nu, -at_nu_minus);
    add_case("parity", at_nu_minus, -at_m_plus_nu);
    const PolyM diff = at_m_plus_nu - at_nu;
    const PolyM unit_value =
        mvar * (Rational(static_cast<long>(hi) - 1) *
                gen_bernoulli(hi - 1, hi - 2, PolyM(Rational(nu)),
                              DegreeVector::units(hi - 1)));
    add_case("difference_matches_unit_value", diff, unit_value);
    add_case("difference_vanishes", diff, PolyM(0));
  }
  return out;
}

std::vector<VerificationCase> norlund_recursion_diagnostic(unsigned n_max, unsigned nu_max) {
  std::vector<VerificationCase> out;
  for (unsigned n = 1; n <= n_max; ++n) {
    const std::vector<Rational> b_n = unit_bernoulli_numbers(n, nu_max);
    for (unsigned nu = 1; nu <= nu_max; ++nu) {
      Rational rhs(0);
      for (unsigned s = 1; s <= nu; ++s) {
        Rational term = binom(Rational(nu), s) * bernoulli_number(s) * b_n[nu - s];
        rhs += (s % 2 == 0) ? term : -term;
      }
      VerificationCase vc;
      vc.identity = "norlund_diagnostic";
      {
        std::ostringstream os;
        os << "n=" << n << " nu=" << nu;
        vc.params = os.str();
      }
      vc.lhs = b_n[nu].to_string();
      vc.rhs = rhs.to_string();
      vc.passed = (b_n[nu] == rhs);
      out.push_back(std::move(vc));
    }
  }
  return out;
}

}  // namespace lubbock
