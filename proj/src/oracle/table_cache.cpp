#include "partasym/oracle/table_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <system_error>

#include "partasym/errors.hpp"

namespace partasym::oracle {

namespace {

std::shared_ptr<const CountTable> prefix(const CountTable& table, long max_n) {
  if (table.max_n() == max_n) return std::make_shared<const CountTable>(table);
  return std::make_shared<const CountTable>(
      CountTable{table.family, {table.coeffs.begin(), table.coeffs.begin() + max_n + 1}});
}

}  // namespace

std::string serialize_table(const CountTable& table) {
  std::string out = table.family.name() + " " + table.family.params() + " " +
                    std::to_string(table.max_n()) + "\n";
  for (const auto& c : table.coeffs) {
    out += c.get_str();
    out += '\n';
  }
  return out;
}

CountTable parse_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string name, params;
  long max_n = -1;
  if (!(in >> name >> params >> max_n) || max_n < 0) {
    throw InvalidArgument("count table: malformed header");
  }
  std::optional<int> r;
  if (params != "-") {
    if (params.rfind("r=", 0) != 0) throw InvalidArgument("count table: bad params '" + params + "'");
    r = std::stoi(params.substr(2));
  }
  CountTable table{FamilySpec::parse(name, r), {}};
  table.coeffs.reserve(static_cast<size_t>(max_n) + 1);
  std::string line;
  std::getline(in, line);  // rest of header
  while (std::getline(in, line)) {
    BigCount v;
    if (line.empty() || v.set_str(line, 10) != 0) throw InvalidArgument("count table: bad entry '" + line + "'");
    table.coeffs.push_back(v);
  }
  if (table.max_n() != max_n) throw InvalidArgument("count table: entry count does not match header");
  if (serialize_table(table) != text) throw InvalidArgument("count table: non-canonical text");
  return table;
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (const char* env = std::getenv("PARTASYM_CACHE"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  return std::nullopt;
}

TableCache::TableCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

std::filesystem::path TableCache::file_for(const FamilySpec& family, long max_n) const {
  std::string params = family.params();
  if (params == "-") params = "none";
  return dir_.value_or(".") / (family.name() + "_" + params + "_" + std::to_string(max_n) + ".txt");
}

std::shared_ptr<const CountTable> TableCache::lookup(const FamilySpec& family, long max_n) const {
  std::shared_lock lock(mutex_);
  const auto it = tables_.find(family);
  if (it == tables_.end() || it->second->max_n() < max_n) return nullptr;
  return prefix(*it->second, max_n);
}

std::optional<CountTable> TableCache::load(const FamilySpec& family, long max_n) const {
  if (!dir_) return std::nullopt;
  // Smallest file for this family with N' ≥ max_n.
  std::string params = family.params();
  if (params == "-") params = "none";
  const std::string stem = family.name() + "_" + params + "_";
  std::optional<long> best;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(*dir_, ec)) {
    const std::string name = entry.path().filename().string();
    if (name.size() <= stem.size() + 4 || name.compare(0, stem.size(), stem) != 0) continue;
    if (name.compare(name.size() - 4, 4, ".txt") != 0) continue;
    const std::string digits = name.substr(stem.size(), name.size() - stem.size() - 4);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) continue;
    const long n = std::stol(digits);
    if (n >= max_n && (!best || n < *best)) best = n;
  }
  if (!best) return std::nullopt;
  std::ifstream in(file_for(family, *best), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    CountTable t = parse_table(buf.str());
    if (t.family == family && t.max_n() == *best) return t;
  } catch (const InvalidArgument&) {
    // A corrupt cache file is rebuilt and overwritten.
  }
  return std::nullopt;
}

void TableCache::store(const CountTable& table) const {
  if (!dir_) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  const auto target = file_for(table.family, table.max_n());
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;  // read-only cache directory: stay memory-only
    out << serialize_table(table);
  }
  std::filesystem::rename(tmp, target, ec);
}

std::shared_ptr<const CountTable> TableCache::remember(CountTable table, long max_n) {
  auto shared = std::make_shared<const CountTable>(std::move(table));
  {
    std::unique_lock lock(mutex_);
    auto& slot = tables_[shared->family];
    if (!slot || slot->max_n() < shared->max_n()) slot = shared;
  }
  return shared->max_n() == max_n ? shared : prefix(*shared, max_n);
}

std::shared_ptr<const CountTable> TableCache::cached(const FamilySpec& family, long max_n) {
  if (auto hit = lookup(family, max_n)) return hit;
  if (std::optional<CountTable> table = load(family, max_n)) return remember(std::move(*table), max_n);
  return nullptr;
}

std::shared_ptr<const CountTable> TableCache::get(const FamilySpec& family, long max_n) {
  if (auto hit = cached(family, max_n)) return hit;
  CountTable table = count_table(family, max_n);
  store(table);
  return remember(std::move(table), max_n);
}

TableCache& default_cache() {
  static TableCache cache;
  return cache;
}

}  // namespace partasym::oracle
