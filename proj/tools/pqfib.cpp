// pqfib: evaluate (p,q)-Fibonacci and Lucas polynomials, numbers and
// generating functions, and run the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cmath>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pqfib/pqfib.hpp"

namespace {

using json = nlohmann::ordered_json;
using pqfib::Family;
using pqfib::Rational;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "json";
  std::string mode = "exact";
};

Family parse_family(const std::string& name) { return name == "lucas" ? Family::lucas : Family::fibonacci; }

template <class S>
S parse_value(const std::string& name, const std::string& text);

template <>
Rational parse_value<Rational>(const std::string& name, const std::string& text) {
  auto v = pqfib::parse_rational(text);
  if (!v) throw UsageError("--" + name + ": expected an exact NUM or NUM/DEN literal, got '" + text + "'");
  return *v;
}

template <>
double parse_value<double>(const std::string& name, const std::string& text) {
  auto v = pqfib::parse_decimal(text);
  if (!v) throw UsageError("--" + name + ": expected a decimal literal in float mode, got '" + text + "'");
  return *v;
}

json to_json(const Rational& v) { return pqfib::to_string(v); }
json to_json(double v) { return v; }

std::string to_cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool close_enough(const Rational& a, const Rational& b) { return a == b; }
bool close_enough(double a, double b) { return std::abs(a - b) <= 1e-10 * std::max({1.0, std::abs(a), std::abs(b)}); }

json make_record(const std::string& command, json inputs, json results) {
  json out;
  out["command"] = command;
  out["inputs"] = std::move(inputs);
  out["results"] = std::move(results);
  out["version"] = pqfib::kVersion;
  return out;
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  std::string family = "fib";
  int n = 0;
  std::string p, q, s;
  std::optional<std::string> x;
};

template <class S>
json run_eval(const EvalArgs& a) {
  const pqfib::PQParams<S> params(parse_value<S>("p", a.p), parse_value<S>("q", a.q));
  const S s = parse_value<S>("s", a.s);
  const Family fam = parse_family(a.family);
  const auto poly = fam == Family::fibonacci ? pqfib::fibonacci_poly(a.n, params, s) : pqfib::lucas_poly(a.n, params, s);
  json coeffs = json::object();
  for (std::size_t i = 0; i < poly.coeffs().size(); ++i) {
    if (!pqfib::is_zero(poly.coeffs()[i])) coeffs[std::to_string(i)] = to_json(poly.coeffs()[i]);
  }
  json res;
  res["degree"] = poly.degree();
  res["coefficients"] = std::move(coeffs);
  if (a.x) res["value"] = to_json(poly.evaluate(parse_value<S>("x", *a.x)));
  return res;
}

void emit_eval(const json& rec, const std::string& format) {
  const json& res = rec["results"];
  if (format == "csv") {
    std::cout << "power,coefficient\n";
    for (const auto& [k, v] : res["coefficients"].items()) std::cout << k << "," << to_cell(v) << "\n";
    if (res.contains("value")) std::cout << "value," << to_cell(res["value"]) << "\n";
  } else {
    std::cout << rec["inputs"]["family"].get<std::string>() << " n=" << rec["inputs"]["n"].get<int>() << "\n";
    for (const auto& [k, v] : res["coefficients"].items()) std::cout << "  x^" << k << ": " << to_cell(v) << "\n";
    if (res["coefficients"].empty()) std::cout << "  (zero polynomial)\n";
    if (res.contains("value")) std::cout << "value: " << to_cell(res["value"]) << "\n";
  }
}

// ---------------------------------------------------------------------------
// numbers

struct NumbersArgs {
  std::string family = "fib";
  int n_max = 10;
  std::string p, q;
};

template <class S>
json run_numbers(const NumbersArgs& a) {
  const pqfib::PQParams<S> params(parse_value<S>("p", a.p), parse_value<S>("q", a.q));
  const Family fam = parse_family(a.family);
  const bool classical = params.p() == S(1) && params.q() == S(1);
  json rows = json::array();
  for (int n = 0; n <= a.n_max; ++n) {
    const S v = fam == Family::fibonacci ? pqfib::fibonacci_number(n, params) : pqfib::lucas_number(n, params);
    json row;
    row["n"] = n;
    row["value"] = to_json(v);
    if (classical) {
      // The closed binomial formula gives 2 at n = 0 for Lucas, which is
      // not L_0; that row carries no cross-check.
      if (fam == Family::lucas && n == 0) {
        row["classical"] = nullptr;
        row["match"] = nullptr;
      } else {
        const Rational c = pqfib::classical_number_formula(fam, n);
        if constexpr (std::is_same_v<S, Rational>) {
          row["classical"] = to_json(c);
          row["match"] = c == v;
        } else {
          const double cd = static_cast<double>(c);
          row["classical"] = cd;
          row["match"] = close_enough(cd, v);
        }
      }
    }
    rows.push_back(std::move(row));
  }
  return json{{"rows", std::move(rows)}};
}

void emit_numbers(const json& rec, const std::string& format) {
  const json& rows = rec["results"]["rows"];
  const bool classical = !rows.empty() && rows[0].contains("classical");
  if (format == "csv") {
    std::cout << (classical ? "n,value,classical,match\n" : "n,value\n");
  }
  for (const auto& row : rows) {
    if (format == "csv") {
      std::cout << row["n"].get<int>() << "," << to_cell(row["value"]);
      if (classical) {
        std::cout << "," << (row["classical"].is_null() ? "" : to_cell(row["classical"])) << ","
                  << (row["match"].is_null() ? "" : row["match"].dump());
      }
      std::cout << "\n";
    } else {
      std::cout << "n=" << row["n"].get<int>() << "  " << to_cell(row["value"]);
      if (classical && !row["classical"].is_null()) {
        std::cout << "  classical=" << to_cell(row["classical"]) << (row["match"].get<bool>() ? "" : "  MISMATCH");
      }
      std::cout << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// genfunc

struct GenfuncArgs {
  std::string family = "fib";
  std::string p, q, s, x;
  int order = pqfib::kDefaultSeriesOrder;
};

template <class S>
json series_json(const pqfib::TruncatedSeries<S>& t, int order) {
  json arr = json::array();
  for (int m = 0; m <= order; ++m) arr.push_back(to_json(t.coeff(m)));
  return arr;
}

template <class S>
bool series_match(const pqfib::TruncatedSeries<S>& a, const pqfib::TruncatedSeries<S>& b, int order) {
  for (int m = 0; m <= order; ++m) {
    if (!close_enough(a.coeff(m), b.coeff(m))) return false;
  }
  return true;
}

template <class S>
json run_genfunc(const GenfuncArgs& a) {
  const pqfib::PQParams<S> params(parse_value<S>("p", a.p), parse_value<S>("q", a.q));
  const S s = parse_value<S>("s", a.s);
  const S x = parse_value<S>("x", a.x);
  json res;
  if (parse_family(a.family) == Family::fibonacci) {
    const auto def = pqfib::fib_genfunc_definitional(x, s, params, a.order);
    const auto closed = pqfib::fib_genfunc_closed(x, s, params, a.order);
    res["definitional"] = series_json(def, a.order);
    res["closed"] = series_json(closed, a.order);
    res["match"] = series_match(def, closed, a.order);
  } else {
    const auto def = pqfib::lucas_genfunc_definitional(x, s, params, a.order);
    const auto closed = pqfib::lucas_genfunc_closed(x, s, params, a.order);
    const auto split = pqfib::lucas_genfunc_closed_split(x, s, params, a.order);
    res["definitional"] = series_json(def, a.order);
    res["closed"] = series_json(closed, a.order);
    res["closed_split"] = series_json(split, a.order);
    res["match"] = series_match(def, closed, a.order);
    res["match_split"] = series_match(def, split, a.order);
  }
  return res;
}

void emit_genfunc(const json& rec, const std::string& format) {
  const json& res = rec["results"];
  const bool split = res.contains("closed_split");
  if (format == "csv") {
    std::cout << (split ? "m,definitional,closed,closed_split\n" : "m,definitional,closed\n");
    for (std::size_t m = 0; m < res["definitional"].size(); ++m) {
      std::cout << m << "," << to_cell(res["definitional"][m]) << "," << to_cell(res["closed"][m]);
      if (split) std::cout << "," << to_cell(res["closed_split"][m]);
      std::cout << "\n";
    }
    return;
  }
  auto line = [&](const char* label, const json& arr) {
    std::cout << label;
    for (std::size_t m = 0; m < arr.size(); ++m) std::cout << (m ? ", " : " ") << to_cell(arr[m]);
    std::cout << "\n";
  };
  line("definitional:", res["definitional"]);
  line("closed:      ", res["closed"]);
  if (split) line("closed_split:", res["closed_split"]);
  std::cout << "match: " << res["match"].dump();
  if (split) std::cout << "  match_split: " << res["match_split"].dump();
  std::cout << "\n";
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 1;
  int n_max = 30;
  int samples = 10;
};

json check_json(const pqfib::CheckResult& c) {
  json j;
  j["id"] = c.id;
  j["statement"] = c.statement;
  j["status"] = c.passed() ? "pass" : "fail";
  j["cases"] = c.cases;
  j["failures"] = c.failures;
  j["max_residual"] = c.max_residual;
  j["tolerance"] = c.tolerance;
  j["known_discrepancy"] = c.known_discrepancy;
  if (!c.passed()) j["first_failure"] = c.first_failure;
  return j;
}

json run_verify(const VerifyArgs& a, bool& passed) {
  pqfib::VerifyOptions opt;
  opt.seed = a.seed;
  opt.n_max = a.n_max;
  opt.samples = a.samples;
  std::vector<std::string> names;
  if (a.suite == "all") {
    for (auto n : pqfib::kSuiteNames) names.emplace_back(n);
  } else {
    names.push_back(a.suite);
  }
  json suites = json::array();
  passed = true;
  for (const auto& name : names) {
    const auto rep = pqfib::verify_suite(name, opt);
    json sj;
    sj["suite"] = rep.suite;
    sj["status"] = rep.passed() ? "pass" : "fail";
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back(check_json(c));
    sj["checks"] = std::move(checks);
    suites.push_back(std::move(sj));
    passed = passed && rep.passed();
  }
  json res;
  res["status"] = passed ? "pass" : "fail";
  res["suites"] = std::move(suites);
  return res;
}

void emit_verify(const json& rec, const std::string& format) {
  const json& res = rec["results"];
  if (format == "csv") {
    std::cout << "suite,check,status,cases,failures,max_residual,tolerance,known_discrepancy\n";
    for (const auto& s : res["suites"]) {
      for (const auto& c : s["checks"]) {
        std::cout << s["suite"].get<std::string>() << "," << c["id"].get<std::string>() << ","
                  << c["status"].get<std::string>() << "," << c["cases"].dump() << "," << c["failures"].dump() << ","
                  << c["max_residual"].dump() << "," << c["tolerance"].dump() << "," << c["known_discrepancy"].dump()
                  << "\n";
      }
    }
    return;
  }
  for (const auto& s : res["suites"]) {
    std::cout << "[" << s["status"].get<std::string>() << "] " << s["suite"].get<std::string>() << "\n";
    for (const auto& c : s["checks"]) {
      std::cout << "  " << (c["status"] == "pass" ? "pass" : "FAIL") << "  " << c["id"].get<std::string>() << "  ("
                << c["cases"].dump() << " cases, max residual " << c["max_residual"].dump() << ")";
      if (c["known_discrepancy"].get<bool>()) std::cout << "  [known discrepancy]";
      std::cout << "\n";
    }
  }
  std::cout << "overall: " << res["status"].get<std::string>() << "\n";
}

void emit(const json& rec, const std::string& format, void (*tabular)(const json&, const std::string&)) {
  if (format == "json") {
    std::cout << rec.dump(2) << "\n";
  } else {
    tabular(rec, format);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(p,q)-deformed Fibonacci and Lucas polynomials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pqfib::kVersion));

  Common common;
  auto add_common = [&](CLI::App* sub, bool with_mode) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
    if (with_mode) {
      sub->add_option("--mode", common.mode, "exact: NUM/DEN inputs; float: decimal inputs")
          ->check(CLI::IsMember({"exact", "float"}))
          ->capture_default_str();
    }
  };
  const auto families = CLI::IsMember({"fib", "lucas"});

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Coefficients of F_n or L_n, optionally evaluated at x");
  eval->add_option("--family", ea.family)->check(families)->capture_default_str();
  eval->add_option("--n", ea.n, "Subscript")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--p", ea.p)->required();
  eval->add_option("--q", ea.q)->required();
  eval->add_option("--s", ea.s)->required();
  eval->add_option("--x", ea.x, "Evaluation point");
  add_common(eval, true);

  NumbersArgs na;
  auto* numbers = app.add_subcommand("numbers", "F_n(p,q) or L_n(p,q) for n <= n-max");
  numbers->add_option("--family", na.family)->check(families)->capture_default_str();
  numbers->add_option("--n-max", na.n_max)->check(CLI::NonNegativeNumber)->capture_default_str();
  numbers->add_option("--p", na.p)->required();
  numbers->add_option("--q", na.q)->required();
  add_common(numbers, true);

  GenfuncArgs ga;
  auto* genfunc = app.add_subcommand("genfunc", "Generating-function coefficients, definitional and closed form");
  genfunc->add_option("--family", ga.family)->check(families)->capture_default_str();
  genfunc->add_option("--p", ga.p)->required();
  genfunc->add_option("--q", ga.q)->required();
  genfunc->add_option("--s", ga.s)->required();
  genfunc->add_option("--x", ga.x)->required();
  genfunc->add_option("--order", ga.order)->check(CLI::Range(0, 64))->capture_default_str();
  add_common(genfunc, true);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a seeded verification suite");
  verify->add_option("--suite", va.suite)
      ->check(CLI::IsMember({"binomials", "recursions", "hypergeometric", "genfunc", "fourier", "all"}))
      ->capture_default_str();
  verify->add_option("--seed", va.seed)->capture_default_str();
  verify->add_option("--n-max", va.n_max)->check(CLI::Range(0, 60))->capture_default_str();
  verify->add_option("--samples", va.samples)->check(CLI::Range(1, 1000))->capture_default_str();
  add_common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const bool exact = common.mode == "exact";
  try {
    if (eval->parsed()) {
      json inputs{{"family", ea.family}, {"n", ea.n}, {"p", ea.p}, {"q", ea.q}, {"s", ea.s}};
      if (ea.x) inputs["x"] = *ea.x;
      inputs["mode"] = common.mode;
      json res = exact ? run_eval<Rational>(ea) : run_eval<double>(ea);
      emit(make_record("eval", std::move(inputs), std::move(res)), common.format, emit_eval);
      return 0;
    }
    if (numbers->parsed()) {
      json inputs{{"family", na.family}, {"n_max", na.n_max}, {"p", na.p}, {"q", na.q}, {"mode", common.mode}};
      json res = exact ? run_numbers<Rational>(na) : run_numbers<double>(na);
      emit(make_record("numbers", std::move(inputs), std::move(res)), common.format, emit_numbers);
      return 0;
    }
    if (genfunc->parsed()) {
      json inputs{{"family", ga.family}, {"p", ga.p},         {"q", ga.q},
                  {"s", ga.s},           {"x", ga.x},         {"order", ga.order},
                  {"mode", common.mode}};
      json res = exact ? run_genfunc<Rational>(ga) : run_genfunc<double>(ga);
      emit(make_record("genfunc", std::move(inputs), std::move(res)), common.format, emit_genfunc);
      return 0;
    }
    if (verify->parsed()) {
      json inputs{{"suite", va.suite}, {"seed", va.seed}, {"n_max", va.n_max}, {"samples", va.samples}};
      bool passed = false;
      json res = run_verify(va, passed);
      emit(make_record("verify", std::move(inputs), std::move(res)), common.format, emit_verify);
      return passed ? 0 : kExitFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
