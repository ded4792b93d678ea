#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "partasym/asymptotics/estimate.hpp"
#include "partasym/cli/report.hpp"
#include "partasym/cli/reproduce.hpp"
#include "partasym/errors.hpp"
#include "partasym/oracle/table_cache.hpp"

namespace {

using namespace partasym;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitReproduce = 3;
constexpr long kCompareBudget = 1'000'000;

struct Options {
  std::string family;
  std::optional<int> r;
  std::string n;
  long kmax = 0;
  int terms = 0;
  int digits = 0;
  bool double_run = false;
  std::string format = "text";
  bool grouped = false;
  std::optional<std::string> cache_dir;
  std::string table = "all";
};

void add_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "nsp|basic|colored3|planestrict|prings|concave")
      ->check(CLI::IsMember({"nsp", "basic", "colored3", "planestrict", "prings", "concave"}));
  cmd->add_option("--r", o.r, "smallest allowed part (nsp)");
  cmd->add_option("--n", o.n, "index; `exact` also takes a range A..B");
  cmd->add_option("--kmax", o.kmax, "largest k of Phi_k")->check(CLI::NonNegativeNumber);
  cmd->add_option("--terms", o.terms, "nsp: Bessel-sum index J; planestrict, concave: correction terms")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--digits", o.digits, "working precision in decimal digits (default: 30 + answer digits)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--double-run", o.double_run, "rerun at +20 digits and report agreeing digits");
  cmd->add_option("--format", o.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--grouped", o.grouped, "group integer digits in fives");
  cmd->add_option("--cache-dir", o.cache_dir, "directory for count tables (PARTASYM_CACHE overrides)");
}

FamilySpec family_of(const Options& o) {
  if (o.family.empty()) throw InvalidArgument("--family is required");
  return FamilySpec::parse(o.family, o.r);
}

long parse_index(const std::string& s) {
  size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || v < 0) throw InvalidArgument("--n: expected a non-negative integer, got '" + s + "'");
  return v;
}

long require_n(const Options& o) {
  if (o.n.empty()) throw InvalidArgument("--n is required");
  return parse_index(o.n);
}

int cmd_exact(const Options& o, oracle::TableCache& cache) {
  const FamilySpec f = family_of(o);
  if (o.n.empty()) throw InvalidArgument("--n is required");
  long lo = 0, hi = 0;
  if (const auto dots = o.n.find(".."); dots != std::string::npos) {
    lo = parse_index(o.n.substr(0, dots));
    hi = parse_index(o.n.substr(dots + 2));
    if (hi < lo) throw InvalidArgument("--n: empty range " + o.n);
  } else {
    lo = hi = parse_index(o.n);
  }
  const auto table = cache.get(f, hi);
  auto show = [&](long n) {
    const std::string s = table->coeffs[static_cast<size_t>(n)].get_str();
    return o.grouped ? cli::group_digits(s) : s;
  };
  if (o.format == "json") {
    nlohmann::ordered_json j{{"family", f.name()}};
    j["params"] = f.family == Family::nsp ? nlohmann::ordered_json{{"r", f.r}} : nlohmann::ordered_json::object();
    nlohmann::ordered_json counts = nlohmann::ordered_json::array();
    for (long n = lo; n <= hi; ++n) counts.push_back({{"n", n}, {"count", table->coeffs[static_cast<size_t>(n)].get_str()}});
    j["counts"] = counts;
    std::cout << j.dump(2) << "\n";
  } else if (lo == hi) {
    std::cout << show(lo) << "\n";
  } else {
    for (long n = lo; n <= hi; ++n) std::cout << n << " " << show(n) << "\n";
  }
  return kExitOk;
}

int cmd_estimate(const Options& o, oracle::TableCache& cache, bool compare) {
  const FamilySpec f = family_of(o);
  const long n = require_n(o);
  if (compare && n > kCompareBudget) {
    throw InvalidArgument("compare: n = " + std::to_string(n) + " exceeds the oracle budget of " +
                          std::to_string(kCompareBudget));
  }
  asymptotics::EstimateConfig c;
  c.kmax = o.kmax;
  c.terms = o.terms;
  c.digits = o.digits;
  c.double_run = o.double_run;
  c.oracle = compare ? asymptotics::OracleMode::always : asymptotics::OracleMode::if_cached;
  const auto start = std::chrono::steady_clock::now();
  const auto b = asymptotics::estimate(f, n, c, &cache);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  if (o.format == "json") {
    std::cout << cli::render_json(b);
  } else {
    std::cout << cli::render_text(b, o.grouped);
    // Timing goes to stderr so that stdout depends only on the flags.
    std::cerr << "elapsed " << ms.count() << " ms\n";
  }
  return kExitOk;
}

int cmd_reproduce(const Options& o, oracle::TableCache& cache) {
  std::vector<std::string> names;
  if (o.table == "all") {
    names = cli::table_names();
  } else {
    names.push_back(o.table);
  }
  bool ok = true;
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (const auto& name : names) {
    const cli::ReproTable t = cli::reproduce(name, {0, &cache});
    ok = ok && t.passed();
    if (o.format == "json") {
      all.push_back(cli::repro_to_json(t));
    } else {
      std::cout << cli::render_repro_text(t, o.grouped) << (names.size() > 1 ? "\n" : "");
    }
  }
  if (o.format == "json") std::cout << (names.size() == 1 ? all.at(0) : all).dump(2) << "\n";
  return ok ? kExitOk : kExitReproduce;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymptotics of partition-like sequences"};
  app.require_subcommand(1);
  Options o;
  auto* exact = app.add_subcommand("exact", "exact counts from the power-series oracle");
  auto* estimate = app.add_subcommand("estimate", "asymptotic estimate with its Phi_k breakdown");
  auto* compare = app.add_subcommand("compare", "estimate plus exact count and signed error");
  auto* reproduce = app.add_subcommand("reproduce", "recompute a table of published values and check it");
  for (auto* cmd : {exact, estimate, compare, reproduce}) add_options(cmd, o);
  std::vector<std::string> tables = cli::table_names();
  tables.push_back("all");
  reproduce->add_option("--table", o.table, "sec2..sec7, dedekind, identities, or all")->check(CLI::IsMember(tables));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    oracle::TableCache cache(oracle::resolve_cache_dir(o.cache_dir));
    if (*exact) return cmd_exact(o, cache);
    if (*estimate) return cmd_estimate(o, cache, false);
    if (*compare) return cmd_estimate(o, cache, true);
    return cmd_reproduce(o, cache);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
