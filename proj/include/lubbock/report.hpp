/**
 * @file report.hpp
 * @brief Verification suites and their JSON/CSV report serialization.
 *
 * Each suite runs a grid of independent verification cases (fanned out across
 * worker threads, merged in deterministic order) and collects findings:
 * observations that are true about the implemented mathematics but deviate
 * from a quoted closed form (calibrated prefactors, a resolved global sign,
 * identities that fail at an edge index). Findings are report content, not
 * failures; all_passed reflects the cases only.
 */
#pragma once

#include <string>
#include <vector>

#include "lubbock/identities.hpp"

namespace lubbock {

struct Report {
  std::string suite;
  std::vector<VerificationCase> cases;
  std::vector<std::string> findings;
  bool all_passed = true;
};

struct SuiteOptions {
  int m_max = 8;
  int nu_max = 5;
  double tol = 1e-9;
};

/// Image sums: cosec-power sums against the residue closed form (numeric vs
/// exact), the even/odd finite image sums over a full integer grid, the two
/// anchored spot values, and the odd-prefactor calibration.
Report suite_appendix(const SuiteOptions& opt);

/// The exact image relation grid over subdivisions, orders, and arguments.
Report suite_image(const SuiteOptions& opt);

/// The generating-function expansion grid, including the Q and P reductions.
Report suite_gf(const SuiteOptions& opt);

/// Operator expansions: the printed polynomials, residue closed forms for all
/// three families, the generalized Y construction, and Steffensen's operator.
Report suite_operators(const SuiteOptions& opt);

/// Bernoulli machinery: spot values, route equivalence, factorial structure,
/// special values, the identity chain, and the recursion diagnostic.
Report suite_bernoulli(const SuiteOptions& opt);

/// All of the above, merged.
Report suite_all(const SuiteOptions& opt);

Report suite_by_name(const std::string& name, const SuiteOptions& opt);

std::string report_to_json(const Report& report);
std::string report_to_csv(const Report& report);

}  // namespace lubbock
