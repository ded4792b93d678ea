#include "partasym/oracle/count_table.hpp"

#include <cstdlib>

#include "partasym/errors.hpp"
#include "partasym/oracle/table_cache.hpp"

namespace partasym::oracle {

namespace {

// Chains shorter than this are not worth a parallel region.
constexpr long kParallelMinStep = 32;

void require_nonnegative(long max_n) {
  if (max_n < 0) throw InvalidArgument("count_table: N must be >= 0");
}

void apply_factor_serial(std::vector<BigCount>& a, long d, long e) {
  const long n_max = static_cast<long>(a.size()) - 1;
  for (long rep = 0; rep < std::labs(e); ++rep) {
    if (e > 0) {
      for (long n = d; n <= n_max; ++n) a[n] += a[n - d];
    } else {
      for (long n = n_max; n >= d; --n) a[n] -= a[n - d];
    }
  }
}

void apply_factor_parallel(std::vector<BigCount>& a, long d, long e) {
  const long n_max = static_cast<long>(a.size()) - 1;
  if (d < kParallelMinStep || d > n_max) {
    apply_factor_serial(a, d, e);
    return;
  }
  const long reps = std::labs(e);
#pragma omp parallel for schedule(static)
  for (long rho = 0; rho < d; ++rho) {
    for (long rep = 0; rep < reps; ++rep) {
      if (e > 0) {
        for (long n = rho + d; n <= n_max; n += d) a[n] += a[n - d];
      } else {
        const long top = rho + ((n_max - rho) / d) * d;
        for (long n = top; n >= d; n -= d) a[n] -= a[n - d];
      }
    }
  }
}

template <typename Apply>
CountTable build(const FamilySpec& family, long max_n, Apply apply) {
  require_nonnegative(max_n);
  CountTable table{family, std::vector<BigCount>(static_cast<size_t>(max_n) + 1, 0)};
  table.coeffs[0] = 1;
  for (long d = 1; d <= max_n; ++d) {
    const long e = family.exponent(d);
    if (e != 0) apply(table.coeffs, d, e);
  }
  return table;
}

}  // namespace

CountTable count_table(const FamilySpec& family, long max_n) {
  return build(family, max_n, apply_factor_parallel);
}

CountTable count_table_serial(const FamilySpec& family, long max_n) {
  return build(family, max_n, apply_factor_serial);
}

BigCount count(const FamilySpec& family, long n) {
  require_nonnegative(n);
  return default_cache().get(family, n)->coeffs[static_cast<size_t>(n)];
}

}  // namespace partasym::oracle
