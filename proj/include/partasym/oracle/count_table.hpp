#pragma once

#include <vector>

#include "partasym/family.hpp"
#include "partasym/hp/real.hpp"

namespace partasym::oracle {

using hp::BigCount;

/// Exact coefficients a_0..a_N of a family's generating function.
struct CountTable {
  FamilySpec family;
  std::vector<BigCount> coeffs;

  long max_n() const { return static_cast<long>(coeffs.size()) - 1; }
  friend bool operator==(const CountTable&, const CountTable&) = default;
};

/// Multiplies 1 by (1 - x^d)^{-e_d} one factor at a time, each factor by the in-place
/// prefix recurrence a[n] += a[n-d] (or a[n] -= a[n-d], descending, for negative e_d).
/// The residue classes n mod d are independent chains and run under OpenMP.
CountTable count_table(const FamilySpec& family, long max_n);

/// The same recurrences in one thread; the reference the parallel kernel is tested against.
CountTable count_table_serial(const FamilySpec& family, long max_n);

/// a_n through the process-wide cache.
BigCount count(const FamilySpec& family, long n);

}  // namespace partasym::oracle
