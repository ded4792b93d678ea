#pragma once

#include "partasym/family.hpp"
#include "partasym/hp/complex.hpp"

namespace partasym::qseries {

/// log f(e^{2πih/k - t}) by direct summation of the defining log-product:
///   log ∏_d (1 - x^d)^{-e_d} = Σ_{N≥1} (x^N / N) Σ_{d|N} d e_d.
/// Requires t ∈ (0, 1] and either (h,k) = (0,1) or 1 ≤ h < k with gcd 1. Throws
/// NumericalError when the geometric tail would need more than the term budget.
hp::PreciseComplex direct_log_f(const FamilySpec& family, long h, long k, const hp::PreciseReal& t,
                                int digits);

/// log F(e^{2πih/k - t}) for Euler's F(x) = ∏ 1/(1 - x^d) = Σ p(n) x^n, by the same
/// summation. Any t > 0; used for the exact modular tails of F-product families.
hp::PreciseComplex direct_log_euler(long h, long k, const hp::PreciseReal& t, int digits);

}  // namespace partasym::qseries
