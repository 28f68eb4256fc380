#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "extremal/constructions.hpp"
#include "extremal/errors.hpp"
#include "extremal/family_json.hpp"
#include "extremal/formulas.hpp"
#include "extremal/invariants.hpp"
#include "extremal/oracle.hpp"
#include "extremal/shifting.hpp"
#include "extremal/table.hpp"
#include "extremal/verify.hpp"

namespace ex = extremal;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kInternal = 1, kArgument = 2, kInconclusive = 3, kFailed = 4 };

json big(const ex::BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return ex::to_string(v);
}

json rational(const ex::Rational& v) {
  if (boost::multiprecision::denominator(v) == 1) return big(boost::multiprecision::numerator(v));
  return ex::to_string(v);
}

json vertex_list(ex::VertexSet v) { return v.vertices(); }

json summary(const ex::Family& f) {
  const ex::InvariantReport r = ex::invariants(f);
  json matching = json::array();
  for (ex::Edge e : r.matching_witness) matching.push_back(vertex_list(e));
  return {{"n", f.n()},
          {"k", f.k()},
          {"size", f.size()},
          {"nu", r.nu},
          {"tau", r.tau},
          {"omega", r.omega},
          {"shifted", ex::is_shifted(f)},
          {"matching", matching},
          {"cover", vertex_list(r.cover_witness)},
          {"clique", vertex_list(r.clique_witness)}};
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

// Options that feed integer parameters; only flags the user set are forwarded.
struct IntFlags {
  std::map<std::string, int> values;

  void add(CLI::App* app, const std::string& name, const std::string& help) {
    app->add_option_function<int>("--" + name, [this, name](int v) { values[name] = v; }, help);
  }
  int get(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end()) throw ex::ArgumentError("missing required flag --" + name);
    return it->second;
  }
};

struct Budget {
  std::uint64_t node_limit = ex::SearchBudget{}.node_limit;
  double time_limit = 600;

  void add(CLI::App* app) {
    app->add_option("--node-limit", node_limit, "Search node budget")->capture_default_str();
    app->add_option("--time-limit", time_limit, "Wall-clock budget in seconds")->capture_default_str();
  }
  ex::SearchBudget get() const {
    if (time_limit < 0) throw ex::ArgumentError("--time-limit must be nonnegative");
    ex::SearchBudget b;
    b.node_limit = node_limit;
    b.time_limit = std::chrono::milliseconds(static_cast<long long>(time_limit * 1000));
    return b;
  }
};

std::pair<int, int> parse_range(const std::string& text, const char* flag) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used == text.size()) return {v, v};
    } else {
      const int lo = std::stoi(text.substr(0, dots), &used);
      if (used == dots) {
        const std::string rest = text.substr(dots + 2);
        const int hi = std::stoi(rest, &used);
        if (used == rest.size()) return {lo, hi};
      }
    }
  } catch (const std::exception&) {
  }
  throw ex::ArgumentError(std::string(flag) + " expects N or LO..HI, got '" + text + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"Extremal set theory toolkit: constructions, invariants, closed forms and an exact oracle."};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "Build a named family and write it as JSON");
  std::string family_name, out_path;
  std::vector<int> sigma;
  IntFlags build_params;
  build->add_option("--family", family_name, "E, HM, T3, B, L, A, CLIQUE, LEX or CYC")->required();
  for (const char* p : {"n", "k", "s", "q", "m", "l"}) build_params.add(build, p, std::string("parameter ") + p);
  build->add_option("--sigma", sigma, "Permutation for CYC, e.g. --sigma 1 3 5 2 4");
  build->add_option("--out", out_path, "Write the family here (default: stdout)");

  // invariants
  auto* inv = app.add_subcommand("invariants", "Report nu, tau, omega and shiftedness of a family file");
  std::string inv_path;
  inv->add_option("file", inv_path, "Family JSON file")->required();

  // formula
  auto* formula = app.add_subcommand("formula", "Evaluate a closed form");
  std::string formula_name;
  std::string beta_text = "1";
  IntFlags formula_params;
  formula->add_option("--name", formula_name, "sizeA, emc, hm, mstar, m, conjecture, cross, crossdirect")->required();
  for (const char* p : {"n", "q", "k", "s", "l", "t", "n1", "n2", "lp"})
    formula_params.add(formula, p, std::string("parameter ") + p);
  formula->add_option("--beta", beta_text, "Weight for cross (integer, p/q or decimal)")->capture_default_str();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact m or m* by branch and bound");
  IntFlags oracle_params;
  for (const char* p : {"n", "q", "k", "s"}) oracle_params.add(oracle, p, std::string("parameter ") + p);
  std::string mode = "m";
  int threads = 1;
  bool via_stars = false;
  std::string witness_path;
  Budget oracle_budget;
  oracle->add_option("--mode", mode, "m or mstar")->check(CLI::IsMember({"m", "mstar"}))->capture_default_str();
  oracle->add_option("--threads", threads, "Worker threads")->capture_default_str();
  oracle->add_flag("--via-stars", via_stars, "Mode m: take the maximum of m* over the clique number");
  oracle->add_option("--emit-witness", witness_path, "Write the optimal family here");
  oracle_budget.add(oracle);

  // table
  auto* table = app.add_subcommand("table", "Closed form, conjecture and oracle side by side");
  int table_k = 2, table_s = 2, table_threads = 1;
  std::string n_range, q_range, format = "csv", table_out;
  std::vector<std::string> columns;
  Budget table_budget;
  table->add_option("--k", table_k, "Uniformity")->capture_default_str();
  table->add_option("--s", table_s, "Matching bound")->capture_default_str();
  table->add_option("--n", n_range, "Ground set sizes, N or LO..HI")->required();
  table->add_option("--q", q_range, "Clique numbers, N or LO..HI")->required();
  table->add_option("--columns", columns, "Subset of formula, conjecture, oracle, gap")->delimiter(',');
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  table->add_option("--threads", table_threads, "Oracle worker threads")->capture_default_str();
  table->add_option("--out", table_out, "Write the table here (default: stdout)");
  table_budget.add(table);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  std::string suite;
  bool list = false;
  ex::SuiteOptions suite_options;
  Budget verify_budget;
  verify->add_option("--suite", suite, "Suite name, or 'all'");
  verify->add_flag("--list", list, "List the suites");
  verify->add_option("--seed", suite_options.seed, "Seed for randomized suites")->capture_default_str();
  verify->add_option("--k", suite_options.k, "Uniformity (conjecture, shifting: largest k)");
  verify->add_option("--s", suite_options.s, "Matching bound");
  verify->add_option("--n-max", suite_options.n_max, "Largest ground set");
  verify->add_option("--samples", suite_options.samples, "Sample count for randomized suites");
  verify_budget.add(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kArgument;
  }

  if (*build) {
    ex::ConstructionSpec spec;
    spec.kind = ex::parse_kind(family_name);
    spec.params = build_params.values;
    spec.sigma = sigma;
    const ex::Family f = ex::build(spec);
    json report = summary(f);
    report.erase("matching");
    report.erase("cover");
    report.erase("clique");
    report["family"] = std::string(ex::kind_name(spec.kind));
    if (out_path.empty()) {
      std::cout << ex::family_to_json(f) << "\n";
      std::cerr << report.dump() << "\n";
    } else {
      ex::write_family_file(out_path, f);
      report["file"] = out_path;
      print(report);
    }
    return kOk;
  }

  if (*inv) {
    print(summary(ex::read_family_file(inv_path)));
    return kOk;
  }

  if (*formula) {
    const auto& p = formula_params;
    json out;
    if (formula_name == "sizeA") {
      out["value"] = big(ex::size_A(p.get("n"), p.get("q"), p.get("k"), p.get("s")));
    } else if (formula_name == "emc") {
      out["value"] = big(ex::emc_bound(p.get("n"), p.get("k"), p.get("s")));
    } else if (formula_name == "hm") {
      out["value"] = big(ex::hm_bound(p.get("n"), p.get("k")));
    } else if (formula_name == "conjecture") {
      out["value"] = big(ex::conjecture_rhs(p.get("n"), p.get("q"), p.get("k"), p.get("s")));
    } else if (formula_name == "m" || formula_name == "mstar") {
      const ex::BoundResult r = formula_name == "m" ? ex::m_closed(p.get("n"), p.get("q"), p.get("k"), p.get("s"))
                                                    : ex::m_star_closed(p.get("n"), p.get("q"), p.get("k"), p.get("s"));
      out = {{"value", big(r.value)},
             {"regime", std::string(ex::regime_name(r.regime))},
             {"hypotheses_met", r.hypotheses_met},
             {"note", r.note}};
    } else if (formula_name == "cross") {
      const ex::CrossBoundResult r =
          ex::cross_bound(p.get("n"), p.get("k"), p.get("l"), p.get("t"), p.get("s"), ex::parse_rational(beta_text));
      out = {{"value", rational(r.value)}, {"argmax", r.argmax}, {"hypotheses_met", r.hypotheses_met}, {"note", r.note}};
    } else if (formula_name == "crossdirect") {
      out["value"] =
          big(ex::cross_direct_bound(p.get("n1"), p.get("n2"), p.get("k"), p.get("l"), p.get("lp"), p.get("s")));
    } else {
      throw ex::ArgumentError("unknown formula '" + formula_name +
                              "' (expected sizeA, emc, hm, mstar, m, conjecture, cross, crossdirect)");
    }
    print(out);
    return kOk;
  }

  if (*oracle) {
    ex::SearchProblem problem;
    problem.n = oracle_params.get("n");
    problem.q = oracle_params.get("q");
    problem.k = oracle_params.get("k");
    problem.s = oracle_params.get("s");
    problem.budget = oracle_budget.get();
    problem.threads = threads;
    if (via_stars && mode != "m") throw ex::ArgumentError("--via-stars applies to --mode m only");
    const ex::SearchResult r = mode == "mstar" ? ex::exact_m_star(problem)
                               : via_stars     ? ex::exact_m_via_stars(problem)
                                               : ex::exact_m(problem);
    if (!witness_path.empty()) ex::write_family_file(witness_path, r.witness);
    print({{"value", r.value}, {"proven_optimal", r.proven_optimal}, {"nodes", r.nodes_explored}});
    return r.proven_optimal ? kOk : kInconclusive;
  }

  if (*table) {
    ex::TableRequest request;
    request.k = table_k;
    request.s = table_s;
    std::tie(request.n_lo, request.n_hi) = parse_range(n_range, "--n");
    std::tie(request.q_lo, request.q_hi) = parse_range(q_range, "--q");
    if (!columns.empty()) {
      request.columns.clear();
      for (const auto& c : columns) request.columns.push_back(ex::parse_column(c));
    }
    request.budget = table_budget.get();
    request.threads = table_threads;
    const ex::Table t = ex::compute_table(request);
    const std::string text = format == "csv" ? ex::table_csv(t) : ex::table_json(t);
    if (table_out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(table_out, std::ios::binary);
      if (!out) throw ex::ArgumentError("cannot write " + table_out);
      out << text;
    }
    return t.complete() ? kOk : kInconclusive;
  }

  if (*verify) {
    if (list) {
      for (const auto& info : ex::suite_names()) std::cout << info.name << "\t" << info.summary << "\n";
      return kOk;
    }
    if (suite.empty()) throw ex::ArgumentError("verify requires --suite NAME (see --list)");
    suite_options.budget = verify_budget.get();
    std::vector<std::string> names;
    if (suite == "all")
      for (const auto& info : ex::suite_names()) names.emplace_back(info.name);
    else
      names.push_back(suite);
    int code = kOk;
    for (const auto& name : names) {
      const ex::SuiteReport r = ex::run_suite(name, suite_options);
      for (const auto& line : r.lines) std::cout << "[" << r.suite << "] " << line << "\n";
      const char* verdict = r.violations > 0 ? "FAIL" : r.inconclusive ? "INCONCLUSIVE" : "PASS";
      std::cout << "[" << r.suite << "] " << verdict << "\n";
      if (r.violations > 0) code = kFailed;
      else if (r.inconclusive && code == kOk) code = kInconclusive;
    }
    return code;
  }
  return kArgument;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ex::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kArgument;
  } catch (const ex::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kArgument;
  } catch (const ex::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kArgument;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
