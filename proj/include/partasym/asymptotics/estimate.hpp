#pragma once

#include <optional>
#include <vector>

#include "partasym/family.hpp"
#include "partasym/hp/real.hpp"
#include "partasym/oracle/table_cache.hpp"

namespace partasym::asymptotics {

using hp::BigCount;
using hp::ExactRational;
using hp::PreciseReal;

enum class OracleMode {
  never,
  if_cached,  // attach the exact count only when a cached table already covers n
  always,
};

/// Zero fields take the family default (see defaults_for).
struct EstimateConfig {
  long kmax = 0;
  /// nsp: Bessel-sum index J. planestrict, concave: number of correction terms.
  int terms = 0;
  /// Decimal digits; 0 means 30 + the digits of the answer.
  int digits = 0;
  bool double_run = false;
  OracleMode oracle = OracleMode::if_cached;
};

/// kmax and terms filled in from the paper's tables:
///   nsp 16/16, basic 13, colored3 7, planestrict 2/8, prings 2, concave 1/5.
EstimateConfig defaults_for(const FamilySpec& family, EstimateConfig config);

struct PhiTerm {
  /// k for Φ_k; for concave the correction index of q_k.
  long k;
  PreciseReal value;
};

struct PhiBreakdown {
  FamilySpec family;
  long n = 0;
  /// The family's shift: n - B₂(r)/4 (nsp), n, n + 7/8, n + 1/48, n, n.
  ExactRational xi;
  EstimateConfig config;
  std::vector<PhiTerm> terms;
  PreciseReal total;
  BigCount rounded;
  std::optional<BigCount> exact;
  std::optional<PreciseReal> error;
  std::optional<int> agreement_digits;
};

/// Throws InvalidArgument when kmax exceeds the terms the family has, or when the
/// family's ξ is not positive.
ExactRational family_xi(const FamilySpec& family, long n);

/// Evaluates the Φ terms concurrently (OpenMP over the term list) and sums them in
/// ascending order. `cache` may be null, in which case default_cache() is used.
PhiBreakdown estimate(const FamilySpec& family, long n, const EstimateConfig& config,
                      oracle::TableCache* cache = nullptr);

/// One-thread reference; bit-identical to estimate().
PhiBreakdown estimate_serial(const FamilySpec& family, long n, const EstimateConfig& config,
                             oracle::TableCache* cache = nullptr);

}  // namespace partasym::asymptotics
