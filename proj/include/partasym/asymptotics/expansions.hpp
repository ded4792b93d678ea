#pragma once

#include <limits>
#include <vector>

#include "partasym/dedekind.hpp"
#include "partasym/family.hpp"
#include "partasym/hp/complex.hpp"

namespace partasym::asymptotics {

using hp::PreciseComplex;
using hp::PreciseReal;

/// Leading modular part of log F(e^{2πih/k - t}) for Euler's F = Σ p(n) x^n:
///   ½ log(kt/2π) + πi s(h,k) + π²/(6k²t) - t/24.
PreciseComplex euler_log_main(long h, long k, const PreciseReal& t, int digits);
/// The rest, log F(e^{2πih'/k - 4π²/(k²t)}) with hh' ≡ -1 (mod k), summed directly.
PreciseComplex euler_log_tail(long h, long k, const PreciseReal& t, int digits);

/// Closed form of log f(e^{2πih/k - t}) as used to build the Φ terms.
struct ClosedExpansion {
  PreciseComplex value;
  /// Exactly known beyond-all-orders part (modular tails of F factors); zero if none.
  PreciseComplex known_tail;
  /// First power of t left out of `value`; infinity when the power series is complete.
  double omitted_order = std::numeric_limits<double>::infinity();
};

/// `terms` is the truncation: nsp the highest coefficient index J; planestrict and concave
/// the number of correction terms. basic, colored3 and prings are complete and ignore it.
ClosedExpansion closed_log_f(const FamilySpec& family, long h, long k, const PreciseReal& t, int terms,
                             int digits);

/// Singular points with a closed expansion, for k ≤ kmax where the family has several.
std::vector<dedekind::SingularPoint> expansion_points(const FamilySpec& family, long kmax);

struct ConsistencySample {
  double t = 0;
  /// |direct - closed - known tail|, imaginary part taken mod 2π.
  PreciseReal residual;
};

struct ConsistencyFit {
  std::vector<ConsistencySample> samples;
  /// Least-squares slope of log|residual| against log t.
  double fitted_order = 0;
  double omitted_order = 0;
};

/// Compares direct_log_f with closed_log_f at each t.
ConsistencyFit expansion_consistency(const FamilySpec& family, long h, long k, int terms,
                                     const std::vector<double>& ts, int digits);

}  // namespace partasym::asymptotics
