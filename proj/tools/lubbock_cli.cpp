/**
 * @file lubbock_cli.cpp
 * @brief Command-line front end: coefficient tables, verification suites,
 *        summation runs, and direct generalized-Bernoulli evaluation.
 *
 * Exit codes: 0 success, 1 verification or cross-check failure, 2 usage error
 * (bad flags, unparsable input, insufficient sample margins).
 */
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lubbock/bernoulli.hpp"
#include "lubbock/expr.hpp"
#include "lubbock/families.hpp"
#include "lubbock/report.hpp"
#include "lubbock/summation.hpp"

namespace {

using namespace lubbock;

/// Thrown by subcommand handlers on post-parse usage problems; mapped to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& text, const std::string& what) {
  auto r = Rational::parse(text);
  if (!r) throw UsageError(what + ": cannot parse '" + text + "' as a rational");
  return *r;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

// ---------------------------------------------------------------------------
// coeffs

struct CoeffsFlags {
  std::string family;
  int max_order = 0;
  std::string m_value;
  int h_value = 0;
  std::string route = "bernoulli";
  std::string phi;
  std::string format = "pretty";
};

struct TableRow {
  unsigned order = 0;
  PolyM poly;                      // symbolic m-scaled polynomial (when known)
  std::optional<Rational> value;   // evaluated entry (when --m/--h or factorial route)
};

int run_coeffs(const CoeffsFlags& fl) {
  const Family fam = fl.family == "lambda" ? Family::Lambda
                     : fl.family == "p"    ? Family::P
                     : fl.family == "q"    ? Family::Q
                                           : Family::Y;
  const unsigned max_order = static_cast<unsigned>(fl.max_order);
  const bool has_h = fl.h_value > 0;
  const bool has_m = !fl.m_value.empty();

  std::vector<unsigned> orders;
  if (fam == Family::Lambda)
    for (unsigned k = 0; k <= max_order; ++k) orders.push_back(k);
  else if (fam == Family::Y)
    for (unsigned k = 1; k <= max_order; ++k) orders.push_back(k);
  else
    for (unsigned k = 2; k <= max_order; k += 2) orders.push_back(k);

  std::vector<TableRow> rows;
  std::string route_label = fl.route;

  if (fam == Family::Y) {
    if (fl.phi.empty())
      throw UsageError("--family y needs --phi with the operator coefficients a,b,c,...");
    if (fl.route == "factorial" || fl.route == "all")
      throw UsageError("family y supports only the series construction");
    std::vector<Rational> phi_coeffs;
    for (const auto& tok : split_list(fl.phi)) phi_coeffs.push_back(parse_rational(tok, "--phi"));
    if (phi_coeffs.empty() || phi_coeffs.front().is_zero())
      throw UsageError("--phi needs a nonzero leading coefficient");
    const auto ys = generic_y(DeltaOperator(phi_coeffs), max_order);
    for (unsigned k : orders) rows.push_back({k, ys[k - 1], std::nullopt});
    route_label = "series";
  } else if (fl.route == "factorial") {
    if (!has_h) throw UsageError("route 'factorial' needs --h (the coefficients live at m = 1/h)");
    for (unsigned k : orders)
      rows.push_back({k, PolyM(), coeff_factorial_sum(fam, k, static_cast<unsigned>(fl.h_value))});
  } else {
    if (fl.route == "all") {
      const unsigned lambda_max = fam == Family::Lambda ? max_order : 8;
      unsigned pq_max = fam == Family::Lambda ? 12 : (max_order - max_order % 2);
      if (pq_max < 2) pq_max = 2;
      std::vector<unsigned> h_set = {1, 2, 3, 4};
      if (has_h) h_set = {static_cast<unsigned>(fl.h_value)};
      const auto mismatches = cross_check(lambda_max, pq_max, h_set);
      if (!mismatches.empty()) {
        for (const auto& mm : mismatches)
          std::cerr << "cross-check mismatch: " << family_name(mm.family) << " order " << mm.order
                    << ": " << mm.detail << "\n";
        return 1;
      }
      std::cerr << "cross-check: all routes agree (lambda through " << lambda_max
                << ", p/q through " << pq_max << ", h in {";
      for (size_t i = 0; i < h_set.size(); ++i) std::cerr << (i ? "," : "") << h_set[i];
      std::cerr << "})\n";
    }
    const Route route = fl.route == "series" ? Route::SeriesExpansion : Route::Bernoulli;
    for (unsigned k : orders) rows.push_back({k, coeff(fam, k, route), std::nullopt});
  }

  // Optional evaluation of symbolic rows.
  std::string eval_label;
  if (has_m || has_h) {
    Rational m_point = has_m ? parse_rational(fl.m_value, "--m")
                             : Rational(1, static_cast<long>(fl.h_value));
    for (auto& row : rows) {
      if (row.value) continue;  // factorial route rows are already values
      Rational v = row.poly.eval(m_point);
      if (has_h) v *= Rational(static_cast<long>(fl.h_value));  // strip the m scaling
      row.value = v;
    }
    eval_label = has_h ? ("value at m=1/" + std::to_string(fl.h_value))
                       : ("m-scaled at m=" + m_point.to_string());
  }

  const std::string fname = family_name(fam);
  if (fl.format == "json") {
    nlohmann::json j;
    j["family"] = fname;
    j["route"] = route_label;
    j["scaling"] = (has_h || fl.route == "factorial") ? "plain" : "m_scaled";
    if (has_m) j["m"] = parse_rational(fl.m_value, "--m").to_string();
    if (has_h) j["h"] = fl.h_value;
    j["entries"] = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json e;
      e["order"] = row.order;
      if (row.value)
        e["value"] = row.value->to_string();
      else
        e["coeffs"] = row.poly.coeff_strings();
      j["entries"].push_back(e);
    }
    std::cout << j.dump(2) << "\n";
  } else if (fl.format == "csv") {
    if (rows.empty() || rows.front().value) {
      std::cout << "order,value\n";
      for (const auto& row : rows) std::cout << row.order << ',' << row.value->to_string() << '\n';
    } else {
      std::cout << "order,coeffs_ascending\n";
      for (const auto& row : rows) {
        std::cout << row.order << ',';
        const auto cs = row.poly.coeff_strings();
        for (size_t i = 0; i < cs.size(); ++i) std::cout << (i ? ";" : "") << cs[i];
        std::cout << '\n';
      }
    }
  } else {
    for (const auto& row : rows) {
      if (row.value)
        std::cout << fname << " order " << row.order << " (" << (eval_label.empty() ? "plain" : eval_label)
                  << ") = " << row.value->to_string() << "\n";
      else
        std::cout << "m*" << fname << " order " << row.order << " = " << row.poly.to_string()
                  << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyFlags {
  std::string suite = "all";
  SuiteOptions options;
  std::string report_path;
};

int run_verify(const VerifyFlags& fl) {
  const Report rep = suite_by_name(fl.suite, fl.options);
  size_t failed = 0;
  for (const auto& c : rep.cases) {
    if (c.passed) continue;
    ++failed;
    std::cout << "FAIL " << c.identity << " [" << c.params << "]: lhs " << c.lhs << " vs rhs "
              << c.rhs;
    if (!c.note.empty()) std::cout << " (" << c.note << ")";
    std::cout << "\n";
  }
  for (const auto& f : rep.findings) std::cout << "finding: " << f << "\n";
  std::cout << "suite " << rep.suite << ": " << rep.cases.size() << " cases, " << failed
            << " failed, " << rep.findings.size() << " findings -> "
            << (rep.all_passed ? "PASS" : "FAIL") << "\n";
  if (!fl.report_path.empty()) {
    std::ofstream out(fl.report_path);
    if (!out) throw UsageError("cannot open report path '" + fl.report_path + "'");
    const bool csv = fl.report_path.size() >= 4 &&
                     fl.report_path.compare(fl.report_path.size() - 4, 4, ".csv") == 0;
    out << (csv ? report_to_csv(rep) : report_to_json(rep));
  }
  return rep.all_passed ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sum

struct SumFlags {
  std::string expr;
  std::string samples_path;
  std::string from = "0";
  unsigned coarse_n = 0;
  unsigned h = 1;
  unsigned order = 1;
  std::string variant = "forward";
  bool exact = false;
  bool compare_direct = false;
};

template <typename S>
void print_sum_result(const SummationResult<S>& res, SummationVariant variant) {
  std::cout << "estimate = " << res.estimate << "\n";
  std::cout << "coarse term = " << res.coarse_term << "\n";
  for (size_t i = 0; i < res.corrections.size(); ++i) {
    const unsigned nu = variant == SummationVariant::Forward ? static_cast<unsigned>(i + 1)
                                                             : 2 * static_cast<unsigned>(i + 1);
    std::cout << "correction[" << nu << "] = " << res.corrections[i] << "\n";
  }
  std::cout << "error indicator = " << res.error_indicator
            << (res.indicator_is_fallback ? " (fallback: next-order margin unavailable)" : "")
            << "\n";
}

template <typename S, typename F>
int run_sum_typed(F&& f, const S& x0, const SumFlags& fl, SummationVariant variant) {
  const auto req = make_request<S>(f, x0, fl.coarse_n, fl.h, fl.order, variant);
  const auto res = lubbock_sum(req);
  print_sum_result(res, variant);
  if (fl.compare_direct) {
    const S direct = direct_fine_sum<S>(f, x0, fl.coarse_n, fl.h, variant);
    const S err = SummationScalar<S>::abs_value(res.estimate - direct);
    std::cout << "direct = " << direct << "\n";
    std::cout << "error = " << err << "\n";
  }
  return 0;
}

template <typename S>
int run_sum_samples(std::vector<S> samples, const SumFlags& fl, SummationVariant variant) {
  SummationRequest<S> req;
  req.samples = std::move(samples);
  req.n = fl.coarse_n;
  req.h = fl.h;
  req.order = fl.order;
  req.variant = variant;
  req.k_min = required_sample_range(variant, fl.coarse_n, fl.order).first;
  const auto res = lubbock_sum(req);
  print_sum_result(res, variant);
  return 0;
}

int run_sum(const SumFlags& fl) {
  if (fl.expr.empty() == fl.samples_path.empty())
    throw UsageError("need exactly one of --expr or --samples");
  const SummationVariant variant =
      fl.variant == "central" ? SummationVariant::Central : SummationVariant::Forward;
  const Rational x0 = parse_rational(fl.from, "--from");

  if (!fl.samples_path.empty()) {
    if (fl.compare_direct)
      throw UsageError("--compare-direct needs --expr (fine-grid values are not in the sample file)");
    std::ifstream in(fl.samples_path);
    if (!in) throw UsageError("cannot open samples file '" + fl.samples_path + "'");
    std::vector<Rational> values;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      const auto e = line.find_last_not_of(" \t\r");
      values.push_back(parse_rational(line.substr(b, e - b + 1),
                                      "samples line " + std::to_string(line_no)));
    }
    if (fl.exact) return run_sum_samples<Rational>(std::move(values), fl, variant);
    std::vector<double> dvals;
    dvals.reserve(values.size());
    for (const auto& v : values) dvals.push_back(v.to_double());
    return run_sum_samples<double>(std::move(dvals), fl, variant);
  }

  Expr e = Expr::parse(fl.expr);
  if (fl.exact) {
    if (!e.rational_closed())
      throw UsageError("--exact needs a rational-closed expression (no sin/cos/tan/exp/log/sqrt/"
                       "sinh/cosh/tanh)");
    return run_sum_typed<Rational>([&e](const Rational& x) { return e.eval_exact(x); }, x0, fl,
                                   variant);
  }
  return run_sum_typed<double>([&e](double x) { return e.eval(x); }, x0.to_double(), fl, variant);
}

// ---------------------------------------------------------------------------
// bernoulli

struct BernoulliFlags {
  unsigned n = 0;
  unsigned nu = 0;
  std::string x = "0";
  std::string degrees;
};

int run_bernoulli(const BernoulliFlags& fl) {
  DegreeVector omega;
  for (const auto& tok : split_list(fl.degrees)) {
    if (tok == "m") {
      omega.entries.push_back(PolyM::var());
    } else {
      const Rational w = parse_rational(tok, "--degrees");
      if (w.sign() <= 0) throw UsageError("--degrees entries must be positive (got " + tok + ")");
      omega.entries.push_back(PolyM(w));
    }
  }
  if (omega.entries.size() != fl.n)
    throw UsageError("--degrees lists " + std::to_string(omega.entries.size()) +
                     " entries but --n is " + std::to_string(fl.n));
  const PolyM x = fl.x == "m" ? PolyM::var() : PolyM(parse_rational(fl.x, "--x"));
  const PolyM b = gen_bernoulli(fl.n, fl.nu, x, omega);
  std::cout << "B^(" << fl.n << ")_" << fl.nu << "(" << (fl.x == "m" ? "m" : fl.x) << " | "
            << fl.degrees << ") = " << b.to_string() << "\n";
  std::cout << "coeffs ascending in m: [";
  const auto cs = b.coeff_strings();
  for (size_t i = 0; i < cs.size(); ++i) std::cout << (i ? ", " : "") << '"' << cs[i] << '"';
  std::cout << "]\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::cout << std::setprecision(17);
  std::cerr << std::setprecision(17);

  CLI::App app{"Exact summation-coefficient families, identity verification, and accelerated "
               "summation of tabulated functions"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print help");

  CoeffsFlags cf;
  auto* coeffs = app.add_subcommand("coeffs", "Print a coefficient-family table");
  coeffs->set_help_flag("--help", "Print help");
  coeffs->add_option("--family", cf.family, "Family: lambda, p, q, or y (generic operator)")
      ->required()
      ->check(CLI::IsMember({"lambda", "p", "q", "y"}));
  coeffs->add_option("--max-order", cf.max_order, "Largest order to include")
      ->required()
      ->check(CLI::NonNegativeNumber);
  auto* opt_m = coeffs->add_option("--m", cf.m_value,
                                   "Evaluate the m-scaled polynomials at this rational m");
  auto* opt_h =
      coeffs->add_option("--h", cf.h_value, "Evaluate at m = 1/h and print plain coefficients")
          ->check(CLI::PositiveNumber);
  opt_m->excludes(opt_h);
  opt_h->excludes(opt_m);
  coeffs->add_option("--route", cf.route, "Computation route (default bernoulli)")
      ->check(CLI::IsMember({"bernoulli", "series", "factorial", "all"}));
  coeffs->add_option("--phi", cf.phi, "Operator coefficients a,b,c,... (family y only)");
  coeffs->add_option("--format", cf.format, "Output format (default pretty)")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", vf.suite, "Suite name (default all)")
      ->check(CLI::IsMember({"appendix", "image", "gf", "operators", "bernoulli", "all"}));
  verify->add_option("--m-max", vf.options.m_max, "Largest step ratio m in the grids")
      ->check(CLI::PositiveNumber);
  verify->add_option("--nu-max", vf.options.nu_max, "Largest coefficient index in the grids")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", vf.options.tol, "Relative tolerance for float comparisons");
  verify->add_option("--report", vf.report_path, "Write the report here (.csv for CSV, else JSON)");

  SumFlags sf;
  auto* sum = app.add_subcommand("sum", "Accelerated summation of a tabulated function");
  sum->set_help_flag("--help", "Print help");
  auto* opt_expr = sum->add_option("--expr", sf.expr, "Expression in x for the summand");
  auto* opt_samples =
      sum->add_option("--samples", sf.samples_path,
                      "File with one coarse sample per line (decimal or p/q), starting at the "
                      "variant's lowest required index");
  opt_expr->excludes(opt_samples);
  opt_samples->excludes(opt_expr);
  sum->add_option("--from", sf.from, "Left endpoint x0 (rational; default 0)");
  sum->add_option("--coarse-n", sf.coarse_n, "Number of coarse intervals n")
      ->required()
      ->check(CLI::PositiveNumber);
  sum->add_option("--h", sf.h, "Subdivisions per coarse interval (default 1)")
      ->check(CLI::PositiveNumber);
  sum->add_option("--order", sf.order, "Correction order K (default 1)")
      ->check(CLI::PositiveNumber);
  sum->add_option("--variant", sf.variant, "forward or central (default forward)")
      ->check(CLI::IsMember({"forward", "central"}));
  sum->add_flag("--exact", sf.exact, "Exact rational pipeline (rational-closed input only)");
  sum->add_flag("--compare-direct", sf.compare_direct,
                "Also evaluate the fine sum directly and print the actual error");

  BernoulliFlags bf;
  auto* bern = app.add_subcommand("bernoulli", "Evaluate a generalized Bernoulli polynomial");
  bern->add_option("--n", bf.n, "Order (number of degree entries)")->required();
  bern->add_option("--nu", bf.nu, "Index nu")->required();
  bern->add_option("--x", bf.x, "Argument: rational or the symbol m (default 0)");
  bern->add_option("--degrees", bf.degrees, "Comma list of degrees, each a positive rational or m")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(coeffs)) return run_coeffs(cf);
    if (app.got_subcommand(verify)) return run_verify(vf);
    if (app.got_subcommand(sum)) return run_sum(sf);
    if (app.got_subcommand(bern)) return run_bernoulli(bf);
  } catch (const MarginError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ExprError& e) {
    std::cerr << "error: expression: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
