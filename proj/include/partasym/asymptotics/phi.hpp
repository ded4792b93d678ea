#pragma once

#include <utility>
#include <vector>

#include "partasym/hp/real.hpp"

namespace partasym::asymptotics {

using hp::ExactRational;
using hp::PreciseReal;

// ---- partitions without small parts, f̃_r = F / ∏_{j<r} (1 - x^j) ----------------------

/// ξ = n - B₂(r)/4, the shift used by Φ₁ and Φ₂.
ExactRational nsp_xi(int r, long n);
/// ξ = n - 1/24, the shift used by the numerical Φ_k, k ≥ 2.
ExactRational nsp_xi_higher(long n);

/// Φ₁ = (r-1)!/√(2π) Σ_{j≤J} c_{2j} (ζ(2)/ξ)^{r/2+1/4+j} I_{-(r+1/2+2j)}(2√(ζ(2)ξ)).
///
/// The power of ζ(2)/ξ is +r/2 (from the transfer of t^{r-1/2+2j}); −r/2 would not match
/// the Bessel order.
PreciseReal nsp_phi1(int r, long n, int J, int digits);
/// Variant with the −r/2+1/4+j power, kept only to demonstrate that it fails.
PreciseReal nsp_phi1_negative_exponent(int r, long n, int J, int digits);

/// Φ₂ = (-1)^n 2^{r-1}(r/2-1)!/√π Σ_{j≤J} d_{2j} (ζ(2)/(4ξ))^{r/4+1/4+j} I_{-(r/2+1/2+2j)}(√(ζ(2)ξ)).
/// Even r only.
PreciseReal nsp_phi2(int r, long n, int J, int digits);

/// Contribution of the single pair e^{±2πih/k}:
///   m √(k/2π) Σ_{j≤J} Re{c_j e^{πi s(h,k) - 2πinh/k}} (ζ(2)/(k²ξ))^{3/4+j/2} I_{-3/2-j}(2√(ζ(2)ξ)/k)
/// with c_j the expansion of ∏_{i<r}(1 - x^i) at x = e^{2πih/k - t}, and m = 2 (m = 1 when 2h = k).
PreciseReal nsp_phi_hk(int r, long n, long h, long k, int J, int digits);
/// (h, Φ_{k,h}) for each 1 ≤ h ≤ k/2 coprime to k.
std::vector<std::pair<long, PreciseReal>> nsp_phi_k_parts(int r, long n, long k, int J, int digits);
/// Φ_k = Σ_h Φ_{k,h}, for k ≥ 2.
PreciseReal nsp_phi_k(int r, long n, long k, int J, int digits);

// ---- basic partitions ∏ (1+x^j)/(1-x^j) -----------------------------------------------

/// Φ_k = ½√(k/π) (a/(k²n))^{3/4} Ã(k,n) I_{-3/2}(2√(an)/k), a = π²/4, k odd.
PreciseReal basic_phi(long n, long k, int digits);

// ---- 3-colored partitions -------------------------------------------------------------

/// ξ = n + 7/8.
ExactRational colored3_xi(long n);
/// Φ_1..Φ_7 with B(d) = (π²/(dξ))^{3/4} I_{-3/2}(2√(π²ξ/d)):
///   Φ₁ = (B(2) - 3B(18))/√(486π)
///   Φ₂ = (-1)^n (B(8) + 3B(72))/√(243π)
///   Φ₃ = 2cos(2πn/3 - π/6) B(18)/√(18π)
///   Φ₄ = 2cos(2πn/4 + π/8) √(4/(486π)) B(32)
///   Φ₅ = 2{cos(2πn/5 - 6π/5) + cos(4πn/5 - π/5)} √(5/(486π)) B(50)
///   Φ₆ = 2cos(2πn/6 - 5π/6) B(72)/√(9π)
///   Φ₇ = 2{cos(2πn/7 - 11π/14) + cos(4πn/7 - π/14) + cos(6πn/7 - 13π/14)} √(7/(486π)) B(98)
PreciseReal colored3_phi(long n, int k, int digits);

// ---- plane partitions strictly decreasing along rows ----------------------------------

/// ξ = n + 1/48.
ExactRational plane_xi(long n);
/// Φ₁ = c Σ_{m<M} c_{2m} S(1/24 + 2m; ζ(3)/2, π²/24) with c = 2^{-1/4} e^{ζ'(-1)/2}, and
/// Φ₂ = (-1)^n 2^{1/24} e^{ζ'(-1)} Σ_{m<M} d_{2m} S(1/12 + 2m; ζ(3)/16, -π²/48), where
/// S(τ; a, b) is the Γ double sum of t^τ exp(a t^{-2} + b t^{-1}) at ξ = n + 1/48.
PreciseReal plane_phi(long n, int which, int m_terms, int digits);
/// Same sums with caller-supplied correction coefficients c_{2m} (entry m ↔ t^{2m}).
PreciseReal plane_phi_from_coeffs(long n, int which, const std::vector<ExactRational>& coeffs, int digits);

// ---- semisimple p-rings ---------------------------------------------------------------

/// a = ζ(2)², b = (√π/2) ζ(½) ζ(3/2); a₂ = 7ζ(2)²/16, b₂ = (√π/8)(3√2 - 1) ζ(½) ζ(3/2).
struct PringsConstants {
  PreciseReal a, b, a2, b2;
};
PringsConstants prings_constants(int digits);
/// Φ₁ = (2π)^{3/4} Σ_{j,k} a^j b^k n^{j+k/2-3/4} / (j! k! Γ(j+k/2+1/4)); Φ₂ the same with
/// (a₂, b₂) and a factor (-1)^n.
PreciseReal prings_phi(long n, int which, int digits);
/// (2π√a)^{1/4} / (√2 n^{5/8}) exp{2√(an) + b(n/a)^{1/4} - b²/(16a)}.
PreciseReal prings_closed_form(long n, int digits);

// ---- concave partitions (triangular parts) --------------------------------------------

/// q_k = c_k/(4π) Σ_j a^j n^{j/2-2-k/2} / (j! Γ(j/2-1-k/2)), a = (√(2π)/2) ζ(3/2), with c_k
/// from concave_correction_coeffs and c_0 = 1.
PreciseReal concave_q(long n, int k, int digits);
/// A = (3/2) π^{1/3} ζ(3/2)^{2/3}, the rate in log a_n ~ A n^{1/3}.
PreciseReal concave_growth_constant(int digits);

/// |Σ_{j=0}^{k} binom(k,j) ζ(j-2k) - (-1)^k / (2(2k+1) binom(2k,k))|, exactly. k ≥ 1.
ExactRational petersson_check(int k);

}  // namespace partasym::asymptotics
