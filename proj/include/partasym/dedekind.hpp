#pragma once

#include <vector>

#include "partasym/hp/real.hpp"

namespace partasym::dedekind {

using hp::ExactRational;
using hp::PreciseReal;

/// A root of unity e^{2πih/k}: 0 ≤ h < k, gcd(h,k) = 1, with h = 0 only for k = 1.
struct SingularPoint {
  long h;
  long k;

  /// Validating constructor; throws InvalidArgument on a non-reduced pair.
  static SingularPoint make(long h, long k);
  static SingularPoint principal() { return {0, 1}; }
  friend bool operator==(const SingularPoint&, const SingularPoint&) = default;
};

/// ((x)) = x - floor(x) - 1/2 for non-integer x, 0 for integer x.
ExactRational sawtooth(const ExactRational& x);

/// s(h,k) = Σ_{j=1}^{k-1} ((jh/k))((j/k)) by direct summation. h is reduced mod k.
ExactRational dedekind_sum(long h, long k);

/// Same value through the reciprocity law, O(log k) steps.
ExactRational dedekind_sum_fast(long h, long k);

/// T(h,k) = 2 s(h,k) - s(2h,k). Throws for even k.
ExactRational t_sum(long h, long k);

/// Ã(k,n) = Σ_{(h,k)=1} exp{πi T(h,k) - 2πi nh/k}. The imaginary part cancels; a residue
/// larger than 10^{-digits+5} throws NumericalError.
PreciseReal a_tilde(long k, long n, int digits);

/// h in [1,k) with gcd(h,k) = 1; empty for k = 1 (the principal point is h = 0).
std::vector<long> coprime_residues(long k);

/// h' in [0,k) with h h' ≡ -1 (mod k). Throws for non-coprime input.
long inverse_mod(long h, long k);

}  // namespace partasym::dedekind
