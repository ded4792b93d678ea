#pragma once

#include <vector>

#include "partasym/qseries/power_series.hpp"

namespace partasym::qseries {

/// c_{2j}, j = 0..J, of exp{Σ_{j≥1} B_{2j} B_{2j+1}(r) t^{2j} / (2j (2j+1)!)}.
/// Entry j of the vector is the coefficient of t^{2j}.
std::vector<ExactRational> nsp_phi1_coeffs_exact(int r, int J);
/// Same as a real series in t of order 2J+1 (odd coefficients zero).
PowerSeries nsp_phi1_coeffs(int r, int J, int digits);

/// d_{2j}, j = 0..J, of
///   exp{Σ_{j≥1} 2^{2j} B_{2j} t^{2j} (B_{2j+1}(r/2) + (2^{2j}-1) B_{2j+1}((r+1)/2)) / (2j (2j+1)!)},
/// the correction factor of f̃_r(-e^{-t}). Throws for odd r.
std::vector<ExactRational> nsp_phi2_coeffs_exact(int r, int J);
PowerSeries nsp_phi2_coeffs(int r, int J, int digits);

enum class PlaneVariant { principal, alternating };

/// Coefficient of t^{2k} (k ≥ 1) in the exponent of the planestrict correction factor,
/// i.e. the residue of the Mellin transform at s = -2k.
///
/// Writing log f(e^{-t}) = Σ_{j,m} ⌊(j+1)/2⌋ e^{-jmt}/m, the Mellin transform is
///   Γ(s) ζ(s+1) M(s),      M(s) = Σ_j ⌊(j+1)/2⌋ j^{-s} = ½ζ(s-1) + ½(1-2^{-s})ζ(s).
/// At x = -e^{-t} the terms with j, m both odd change sign, which subtracts
///   2 Γ(s) (1-2^{-1-s}) ζ(s+1) M_odd(s),  M_odd(s) = ½(1-2^{1-s})ζ(s-1) + ½(1-2^{-s})ζ(s).
/// Γ has residue 1/(2k)! at s = -2k and ζ(-2k) = 0, leaving
///   principal:   ½ ζ(1-2k) ζ(-1-2k) / (2k)!
///   alternating: ½ ζ(1-2k) ζ(-1-2k) (1 - 2(1-2^{2k-1})(1-2^{2k+1})) / (2k)!
ExactRational plane_residue(int k, PlaneVariant variant);

/// c_{2m}, m = 0..J, of exp{Σ_{k≥1} plane_residue(k) t^{2k}}.
std::vector<ExactRational> plane_correction_coeffs_exact(int J, PlaneVariant variant);
PowerSeries plane_correction_coeffs(int J, PlaneVariant variant, int digits);

/// c_k, k = 0..J, of exp{(√(2π)/16) Σ_{k≥0} ζ(½-k) t^{k+½} / (8^k (k+1)!)} = Σ c_k t^{k/2}.
/// Half-integer grading.
PowerSeries concave_correction_coeffs(int J, int digits);

/// Taylor coefficients c_0..c_J in t of ∏_{j=1}^{rmax} (1 - ω^j e^{-jt}), ω = e^{2πih/k},
/// i.e. of g(e^{2πih/k - t}) for g(x) = ∏_{j≤rmax} (1 - x^j). Requires 1 ≤ h < k, gcd 1.
PowerSeries expand_finite_product(int rmax, long h, long k, int J, int digits);

}  // namespace partasym::qseries
