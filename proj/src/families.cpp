/**
 * @file families.cpp
 * @brief Coefficient families: closed forms, series, factorial sums, recursion.
 */
#include "lubbock/families.hpp"

#include <stdexcept>

#include "lubbock/bernoulli.hpp"
#include "lubbock/factorials.hpp"

namespace lubbock {

std::string family_name(Family f) {
  switch (f) {
    case Family::Lambda: return "lambda";
    case Family::P: return "p";
    case Family::Q: return "q";
    case Family::Y: return "y";
  }
  return "?";
}

std::string route_name(Route r) {
  switch (r) {
    case Route::Bernoulli: return "bernoulli";
    case Route::SeriesExpansion: return "series";
    case Route::FactorialSum: return "factorial";
    case Route::Recursion: return "recursion";
  }
  return "?";
}

namespace {

void require_even_positive(Family f, unsigned order) {
  if (order == 0 || order % 2 != 0)
    throw std::invalid_argument("coeff: family " + family_name(f) + " has even positive orders only");
}

PolyM coeff_bernoulli(Family f, unsigned order) {
  switch (f) {
    case Family::Lambda:
      if (order == 0) return PolyM(1);
      return n1_residue(order + 1, PolyM(1));
    case Family::Q: {
      require_even_positive(f, order);
      return n1_residue(order + 1, PolyM(static_cast<int>(order / 2)));
    }
    case Family::P: {
      require_even_positive(f, order);
      PolyM arg = PolyM(static_cast<int>(order / 2)) + (PolyM::var() - PolyM(1)) * Rational(1, 2);
      return n1_residue(order + 1, arg);
    }
    case Family::Y:
      break;
  }
  throw std::invalid_argument("coeff: family y requires a delta operator; use generic_y");
}

}  // namespace

PolyM coeff(Family f, unsigned order, Route route) {
  switch (route) {
    case Route::Bernoulli:
      return coeff_bernoulli(f, order);
    case Route::SeriesExpansion: {
      if (f == Family::Lambda && order == 0) return PolyM(1);
      if (f != Family::Lambda) require_even_positive(f, order);
      if (f == Family::Y) throw std::invalid_argument("coeff: family y requires a delta operator; use generic_y");
      return family_generating(f, static_cast<long>(order)).coeff(static_cast<long>(order));
    }
    case Route::FactorialSum:
      throw std::invalid_argument("coeff: the factorial route yields values at m = 1/h; use coeff_factorial_sum");
    case Route::Recursion:
      throw std::invalid_argument("coeff: the recursion route builds whole tables; use de_morgan_lambda");
  }
  throw std::invalid_argument("coeff: unknown route");
}

CoeffTable coeff_table(Family f, unsigned max_order, Route route) {
  CoeffTable t{f, route, {}, ""};
  if (f == Family::Lambda) {
    // The generating series gives all orders in one expansion.
    if (route == Route::SeriesExpansion) {
      Series<PolyM> g = family_generating(f, static_cast<long>(max_order));
      for (unsigned nu = 0; nu <= max_order; ++nu)
        t.entries.push_back({nu, g.coeff(static_cast<long>(nu))});
    } else {
      for (unsigned nu = 0; nu <= max_order; ++nu) t.entries.push_back({nu, coeff(f, nu, route)});
    }
  } else {
    if (route == Route::SeriesExpansion) {
      Series<PolyM> g = family_generating(f, static_cast<long>(max_order));
      for (unsigned o = 2; o <= max_order; o += 2) t.entries.push_back({o, g.coeff(static_cast<long>(o))});
    } else {
      for (unsigned o = 2; o <= max_order; o += 2) t.entries.push_back({o, coeff(f, o, route)});
    }
  }
  return t;
}

Rational coeff_factorial_sum(Family f, unsigned order, unsigned h) {
  if (h == 0) throw std::invalid_argument("coeff_factorial_sum: h must be positive");
  Rational hh(static_cast<long>(h));
  switch (f) {
    case Family::Lambda: {
      Rational acc(0);
      for (unsigned x = 0; x < h; ++x)
        acc += falling_factorial(Rational(static_cast<long>(x)) / hh, order);
      return acc / factorial(order);
    }
    case Family::P: {
      require_even_positive(f, order);
      Rational acc(0);
      Rational x = -Rational(static_cast<long>(h) - 1, 2);
      for (unsigned i = 0; i < h; ++i, x += Rational(1))
        acc += central_factorial(x / hh, order);
      return acc / factorial(order);
    }
    case Family::Q: {
      require_even_positive(f, order);
      Rational acc(0);
      Rational x = -Rational(static_cast<long>(h) - 2, 2);
      for (unsigned i = 0; i + 1 < h; ++i, x += Rational(1))
        acc += central_factorial(x / hh, order + 1, /*reduced=*/true);
      return acc / factorial(order);
    }
    case Family::Y:
      break;
  }
  throw std::invalid_argument("coeff_factorial_sum: factorial sums exist for lambda, p, q");
}

CoeffTable de_morgan_lambda(unsigned nu_max) {
  CoeffTable t{Family::Lambda, Route::Recursion, {}, "binomial recursion"};
  std::vector<PolyM> lam(nu_max + 1);
  lam[0] = PolyM(1);
  for (unsigned nu = 1; nu <= nu_max; ++nu) {
    PolyM acc;
    for (unsigned k = 2; k <= nu + 1; ++k)
      acc += binom(PolyM::var(), k).divide_exact(PolyM::var()) * lam[nu + 1 - k];
    lam[nu] = -acc;
  }
  for (unsigned nu = 0; nu <= nu_max; ++nu) t.entries.push_back({nu, lam[nu]});
  return t;
}

Rational adams_coefficient(unsigned nu) {
  Rational v = coeff(Family::Lambda, nu, Route::Bernoulli).eval(Rational(0));
  return nu % 2 == 0 ? v : -v;
}

Rational adams_integral_oracle(unsigned nu) {
  // Expand t(t-1)...(t-nu+1) in powers of t, then integrate termwise on [0,1].
  PolyM prod(1);
  for (unsigned i = 0; i < nu; ++i)
    prod *= PolyM::var() - PolyM(Rational(static_cast<long>(i)));
  Rational integral(0);
  for (size_t k = 0; k < prod.coeffs().size(); ++k)
    integral += prod.coeffs()[k] / Rational(static_cast<long>(k) + 1);
  Rational v = integral / factorial(nu);
  return nu % 2 == 0 ? v : -v;
}

std::vector<CrossCheckMismatch> cross_check(unsigned lambda_max, unsigned pq_max_order,
                                            const std::vector<unsigned>& h_set) {
  std::vector<CrossCheckMismatch> bad;
  auto check_family = [&](Family f, const CoeffTable& bern, const CoeffTable& ser) {
    for (size_t i = 0; i < bern.entries.size(); ++i) {
      unsigned order = bern.entries[i].order;
      const PolyM& pb = bern.entries[i].m_scaled;
      const PolyM& ps = ser.entries[i].m_scaled;
      if (!(pb == ps))
        bad.push_back({f, order, "bernoulli " + pb.to_string() + " vs series " + ps.to_string()});
      for (unsigned h : h_set) {
        Rational scaled = pb.eval(Rational(1, static_cast<long>(h))) * Rational(static_cast<long>(h));
        Rational fact = coeff_factorial_sum(f, order, h);
        if (!(scaled == fact))
          bad.push_back({f, order, "factorial sum at h=" + std::to_string(h) + ": " + fact.to_string() +
                                       " vs scaled closed form " + scaled.to_string()});
      }
    }
  };
  CoeffTable lam_b = coeff_table(Family::Lambda, lambda_max, Route::Bernoulli);
  CoeffTable lam_s = coeff_table(Family::Lambda, lambda_max, Route::SeriesExpansion);
  check_family(Family::Lambda, lam_b, lam_s);
  CoeffTable lam_r = de_morgan_lambda(lambda_max);
  for (size_t i = 0; i < lam_b.entries.size(); ++i)
    if (!(lam_b.entries[i].m_scaled == lam_r.entries[i].m_scaled))
      bad.push_back({Family::Lambda, lam_b.entries[i].order,
                     "recursion " + lam_r.entries[i].m_scaled.to_string() + " vs bernoulli " +
                         lam_b.entries[i].m_scaled.to_string()});
  for (Family f : {Family::P, Family::Q})
    check_family(f, coeff_table(f, pq_max_order, Route::Bernoulli),
                 coeff_table(f, pq_max_order, Route::SeriesExpansion));
  return bad;
}

}  // namespace lubbock
