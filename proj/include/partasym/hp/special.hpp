#pragma once

#include "partasym/hp/real.hpp"

namespace partasym::hp {

/// Γ(x) at the precision of x. Throws PoleError at non-positive integers.
///
/// Positive integers up to 1000 are exact factorials. Otherwise x < 1/2 goes through the
/// reflection formula and x ≥ 1/2 is shifted up to x + N ≥ digits and evaluated with the
/// Stirling series.
PreciseReal gamma(const PreciseReal& x);
PreciseReal gamma(const ExactRational& x, int digits);

/// 1/Γ(x); exactly 0 at the poles of Γ.
PreciseReal reciprocal_gamma(const PreciseReal& x);
PreciseReal reciprocal_gamma(const ExactRational& x, int digits);

/// Modified Bessel function I_ν(z) from the ascending series
///   Σ_{m≥0} (z/2)^{ν+2m} / (m! Γ(ν+m+1)),
/// dropping terms whose reciprocal Γ vanishes. Any real order; z ≥ 0.
PreciseReal bessel_i(const PreciseReal& order, const PreciseReal& z, int digits);
PreciseReal bessel_i(const ExactRational& order, const PreciseReal& z, int digits);

/// Large-argument expansion
///   e^z/√(2πz) · Σ_{k<terms} (-1)^k (4ν²-1)(4ν²-9)…(4ν²-(2k-1)²) / (k! (8z)^k).
/// No validity check; the caller owns the domain.
PreciseReal bessel_i_asymptotic(const PreciseReal& order, const PreciseReal& z, int terms);

/// Riemann ζ(s), s ≠ 1.
///   s > 0           Borwein's alternating-series acceleration of η(s)
///   s ∈ Z, s ≤ 0    exact Bernoulli rational
///   s < 0 otherwise functional equation onto 1 - s > 1
PreciseReal zeta(const ExactRational& s, int digits);
PreciseReal zeta(const PreciseReal& s);

struct ZetaWithDerivative {
  PreciseReal value;
  PreciseReal derivative;
};

/// ζ(s) and ζ'(s) from Euler–Maclaurin summation, for any real s ≠ 1. Slower than zeta();
/// used for ζ'(2) and as an independent check of zeta().
ZetaWithDerivative zeta_euler_maclaurin(const PreciseReal& s);

/// ζ'(-1) = 1/12 - ln A, with the Glaisher–Kinkelin constant taken from
/// ln A = (γ + ln 2π)/12 - ζ'(2)/(2π²).
PreciseReal zeta_prime_minus1(int digits);

/// Glaisher–Kinkelin constant A = exp(1/12 - ζ'(-1)).
PreciseReal glaisher_kinkelin(int digits);

}  // namespace partasym::hp
