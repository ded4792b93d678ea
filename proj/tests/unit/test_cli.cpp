#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "partasym/asymptotics/estimate.hpp"
#include "partasym/cli/report.hpp"
#include "partasym/cli/reproduce.hpp"
#include "partasym/errors.hpp"

using namespace partasym;
using namespace partasym::cli;
using nlohmann::ordered_json;

namespace {

asymptotics::PhiBreakdown run(const FamilySpec& f, long n, asymptotics::OracleMode mode, bool double_run = false) {
  return asymptotics::estimate(f, n, {.double_run = double_run, .oracle = mode});
}

}  // namespace

TEST_CASE("group_digits") {
  CHECK(group_digits("49001590791729816727884124") == "4 90015 90791 72981 67278 84124");
  CHECK(group_digits("12345") == "12345");
  CHECK(group_digits("123456") == "1 23456");
  CHECK(group_digits("-123456.789") == "-1 23456.789");
  CHECK(group_digits("0.5") == "0.5");
  CHECK(group_digits("") == "");
}

TEST_CASE("JSON report: field order and types") {
  const auto b = run(FamilySpec::nsp(12), 1200, asymptotics::OracleMode::always, true);
  const ordered_json j = breakdown_to_json(b);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"family", "params", "n", "xi", "config", "phi", "total", "rounded", "exact",
                                         "error", "digits", "agreement_digits"});
  CHECK(j["family"] == "nsp");
  CHECK(j["params"]["r"] == 12);
  CHECK(j["n"] == 1200);
  CHECK(j["xi"] == "28007/24");
  CHECK(j["phi"].size() == 16);
  CHECK(j["phi"][0]["k"] == 1);
  CHECK(j["phi"][0]["value"].is_string());
  CHECK(j["exact"] == "49001590791729816727884124");
  CHECK(j["rounded"] == j["exact"]);
  CHECK(j["digits"].is_number_integer());

  const auto plain = breakdown_to_json(run(FamilySpec::of(Family::basic), 100, asymptotics::OracleMode::never));
  CHECK(!plain.contains("exact"));
  CHECK(!plain.contains("error"));
  CHECK(!plain.contains("agreement_digits"));
  CHECK(plain["params"] == ordered_json::object());
}

TEST_CASE("JSON report: byte-identical round trip and repeatable output") {
  for (const auto& [f, n] : std::vector<std::pair<FamilySpec, long>>{{FamilySpec::nsp(12), 1200},
                                                                     {FamilySpec::of(Family::basic), 1000},
                                                                     {FamilySpec::of(Family::colored3), 200},
                                                                     {FamilySpec::of(Family::planestrict), 200},
                                                                     {FamilySpec::of(Family::prings), 200},
                                                                     {FamilySpec::of(Family::concave), 2000}}) {
    const std::string a = render_json(run(f, n, asymptotics::OracleMode::always));
    const std::string b = render_json(run(f, n, asymptotics::OracleMode::always));
    CAPTURE(f.name());
    CHECK(a == b);
    CHECK(json_round_trips(a));
    CHECK(ordered_json::parse(a).dump(2) + "\n" == a);
  }
  CHECK(!json_round_trips("{\"a\":1}"));
}

TEST_CASE("text report") {
  const auto b = run(FamilySpec::nsp(12), 1200, asymptotics::OracleMode::always);
  const std::string text = render_text(b, false);
  CHECK(text.find("Phi_13") != std::string::npos);
  CHECK(text.find("0.8939933103") != std::string::npos);
  CHECK(text.find("26 digits agree") != std::string::npos);
  CHECK(render_text(b, true).find("4 90015 90791 72981 67278 84124") != std::string::npos);
  const auto q = run(FamilySpec::of(Family::concave), 2000, asymptotics::OracleMode::never);
  CHECK(render_text(q, false).find("q_0") != std::string::npos);
}

TEST_CASE("fixture file is well formed") {
  const auto doc = ordered_json::parse(paper_values_json());
  CHECK(doc["version"] == 1);
  const std::set<std::string> checks{"abs", "equal", "at_least", "at_most", "factor"};
  const std::set<std::string> provenance{"PAPER", "PAPER-TYPO", "ORACLE-RESOLVED", "DERIVED"};
  std::vector<std::string> names;
  for (const auto& [name, table] : doc["tables"].items()) {
    names.push_back(name);
    std::set<std::string> ids;
    for (const auto& row : table["rows"]) {
      CAPTURE(name);
      CHECK(ids.insert(row["id"].get<std::string>()).second);
      CHECK(checks.count(row["check"].get<std::string>()) == 1);
      CHECK(provenance.count(row["provenance"].get<std::string>()) == 1);
      CHECK(row["expected"].is_string());
      const std::string check = row["check"];
      if (check == "abs" || check == "factor") CHECK(row.contains("tol"));
      if (row["provenance"] == "PAPER-TYPO" || row["provenance"] == "ORACLE-RESOLVED")
        CHECK((row.contains("printed") || row.contains("note")));
    }
  }
  CHECK(names == table_names());
}

TEST_CASE("reproduce: exact tables pass, unknown names are rejected") {
  for (const char* name : {"dedekind", "identities", "sec3", "sec6"}) {
    const ReproTable t = reproduce(name);
    CAPTURE(name);
    CHECK(t.passed());
    CHECK(!t.rows.empty());
    for (const auto& row : t.rows) CHECK(!row.computed.empty());
  }
  CHECK_THROWS_AS(reproduce("sec9"), InvalidArgument);
  const ReproTable t = reproduce("dedekind");
  const ordered_json j = repro_to_json(t);
  CHECK(j["table"] == "dedekind");
  CHECK(j["rows"].size() == t.rows.size());
  CHECK(render_repro_text(t, false).find("PASS") != std::string::npos);
}
