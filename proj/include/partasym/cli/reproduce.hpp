#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "partasym/oracle/table_cache.hpp"

namespace partasym::cli {

/// The compiled-in copy of data/paper_values.json.
std::string_view paper_values_json();

struct ReproRow {
  std::string id;
  std::string label;
  std::string check;  // abs | equal | at_least | at_most | factor
  std::string provenance;
  std::string note;
  std::string expected;
  std::string printed;  // the paper's digits, when they differ from `expected`
  std::string tolerance;
  std::string computed;
  bool pass = false;
};

struct ReproTable {
  std::string name;
  std::string title;
  std::vector<ReproRow> rows;
  bool passed() const;
};

struct ReproduceOptions {
  /// Added to every working precision; acceptance reruns with +20.
  int extra_digits = 0;
  /// Null means oracle::default_cache().
  oracle::TableCache* cache = nullptr;
};

/// sec2 .. sec7, dedekind, identities.
const std::vector<std::string>& table_names();

/// Recomputes every row of `table` and checks it against the fixtures. Throws
/// InvalidArgument for an unknown table name.
ReproTable reproduce(std::string_view table, const ReproduceOptions& options = {});

std::string render_repro_text(const ReproTable& table, bool grouped);
nlohmann::ordered_json repro_to_json(const ReproTable& table);

}  // namespace partasym::cli
