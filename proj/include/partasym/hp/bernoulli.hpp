#pragma once

#include "partasym/hp/real.hpp"

namespace partasym::hp {

/// B_m with B_1 = -1/2. Odd m > 1 gives 0. Results are cached process-wide; the cache
/// only grows and is guarded by a mutex.
ExactRational bernoulli_number(int m);

/// B_m(x) = Σ_k binom(m,k) B_k x^{m-k}.
ExactRational bernoulli_poly(int m, const ExactRational& x);

/// ζ(-m) for integer m ≥ 0, exactly: (-1)^m B_{m+1}/(m+1).
ExactRational zeta_nonpositive(int m);

/// binom(n, k) for n ≥ 0.
BigCount binomial(long n, long k);

}  // namespace partasym::hp
