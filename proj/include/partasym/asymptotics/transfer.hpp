#pragma once

#include "partasym/hp/real.hpp"

namespace partasym::asymptotics {

using hp::ExactRational;
using hp::PreciseReal;

/// Image of t^a exp(c/t) under t^{-s} → ξ^{s-1}/Γ(s):
///   Σ_j c^j ξ^{j-a-1} / (j! Γ(j-a)) = (c/ξ)^{(1+a)/2} I_{-1-a}(2√(cξ)).
/// Requires c > 0 and ξ > 0.
PreciseReal transfer_single(const ExactRational& a, const PreciseReal& c, const PreciseReal& xi, int digits);

/// Term-by-term Γ sum for t_power and exp(a t^{-p} + b t^{-q}):
///   Σ_{j≤J, k≤K} a^j b^k ξ^{pj+qk-t_power-1} / (j! k! Γ(pj+qk-t_power)),
/// with 1/Γ = 0 at the poles. Real arithmetic throughout, so a and b may have either sign.
PreciseReal transfer_double(const ExactRational& t_power, const ExactRational& p, const PreciseReal& a,
                            const ExactRational& q, const PreciseReal& b, const PreciseReal& xi, int J,
                            int K, int digits);

struct DoubleSumResult {
  PreciseReal value;
  int j_used = 0;  // largest j index reached in any row
  int k_used = 0;  // rows summed
  /// log10 of the largest |term| relative to |value|: the digits lost to cancellation.
  double cancellation_digits = 0;
};

/// transfer_double with truncation chosen from the terms: each row runs past its peak until
/// terms fall below 10^{-digits-10} of the largest term seen, and rows stop once a whole
/// row is that small.
DoubleSumResult transfer_double_adaptive(const ExactRational& t_power, const ExactRational& p,
                                         const PreciseReal& a, const ExactRational& q, const PreciseReal& b,
                                         const PreciseReal& xi, int digits);

}  // namespace partasym::asymptotics
