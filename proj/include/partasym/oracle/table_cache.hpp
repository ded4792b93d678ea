#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>

#include "partasym/oracle/count_table.hpp"

namespace partasym::oracle {

/// Plain-text table: header line `family params N`, then a_0..a_N one per line.
std::string serialize_table(const CountTable& table);
/// Inverse of serialize_table; throws InvalidArgument on malformed input.
CountTable parse_table(std::string_view text);

/// Cache directory: PARTASYM_CACHE if set, else `flag`, else none.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

/// Process-local memory cache of count tables, optionally backed by one file per
/// (family, params, N) under a directory. A request for N is served from any cached table
/// with N' ≥ N. Concurrent readers share a lock; builds happen outside it.
class TableCache {
 public:
  explicit TableCache(std::optional<std::filesystem::path> dir = std::nullopt);

  std::shared_ptr<const CountTable> get(const FamilySpec& family, long max_n);
  /// Like get, but never builds: null unless memory or disk already covers max_n.
  std::shared_ptr<const CountTable> cached(const FamilySpec& family, long max_n);

  const std::optional<std::filesystem::path>& directory() const { return dir_; }
  std::filesystem::path file_for(const FamilySpec& family, long max_n) const;

 private:
  std::shared_ptr<const CountTable> lookup(const FamilySpec& family, long max_n) const;
  std::optional<CountTable> load(const FamilySpec& family, long max_n) const;
  void store(const CountTable& table) const;
  std::shared_ptr<const CountTable> remember(CountTable table, long max_n);

  std::optional<std::filesystem::path> dir_;
  mutable std::shared_mutex mutex_;
  std::map<FamilySpec, std::shared_ptr<const CountTable>> tables_;
};

/// Memory-only cache shared by count().
TableCache& default_cache();

}  // namespace partasym::oracle
