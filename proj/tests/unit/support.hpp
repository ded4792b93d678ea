#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "partasym/hp/real.hpp"

namespace testsupport {

using partasym::hp::ExactRational;
using partasym::hp::PreciseReal;

// splitmix64; every property test seeds its own stream so failures replay exactly.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [lo, hi].
  long integer(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  /// Uniform in [lo, hi) on a grid of 2^-20, exact as a rational.
  ExactRational rational(long lo, long hi) {
    const long steps = (hi - lo) << 20;
    ExactRational q(lo * (1L << 20) + integer(0, steps - 1), 1L << 20);
    q.canonicalize();
    return q;
  }
  /// p/q with |p| ≤ max_num, 1 ≤ q ≤ max_den.
  ExactRational fraction(long max_num, long max_den) {
    ExactRational q(integer(-max_num, max_num), integer(1, max_den));
    q.canonicalize();
    return q;
  }

 private:
  std::uint64_t state_;
};

inline PreciseReal relative_error(const PreciseReal& a, const PreciseReal& b) {
  if (b.is_zero()) return partasym::hp::abs(a);
  return partasym::hp::abs(a - b) / partasym::hp::abs(b);
}

inline PreciseReal tenth_power(long e, int digits) {
  return partasym::hp::pow(PreciseReal::from_long(10, digits), e);
}

// The published cosine tables: Ã(k,n) = 2 Σ cos(2πmn/k - φπ) over (m, φ).
struct Cosine {
  long m;
  ExactRational phase;
};

inline const std::vector<std::pair<long, std::vector<Cosine>>>& atilde_closed_forms() {
  using partasym::hp::ratio;
  static const std::vector<std::pair<long, std::vector<Cosine>>> t{
      {3, {{1, ratio(1, 6)}}},
      {5, {{1, ratio(2, 5)}, {2, ratio(1, 5)}}},
      {7, {{1, ratio(9, 14)}, {2, ratio(1, 14)}, {3, ratio(3, 14)}}},
      {9, {{1, ratio(8, 9)}, {2, ratio(4, 9)}, {4, ratio(2, 9)}}},
      {11, {{1, ratio(25, 22)}, {2, ratio(7, 22)}, {3, ratio(1, 22)}, {4, ratio(9, 22)}, {5, ratio(5, 22)}}},
      {13,
       {{1, ratio(18, 13)}, {2, ratio(9, 13)}, {3, ratio(6, 13)}, {4, ratio(-2, 13)}, {5, ratio(1, 13)}, {6, ratio(3, 13)}}},
  };
  return t;
}

inline PreciseReal atilde_closed_form(const std::vector<Cosine>& cosines, long k, long n, int digits) {
  PreciseReal sum(digits);
  for (const auto& c : cosines) sum += 2 * partasym::hp::cos_pi(partasym::hp::ratio(2 * c.m * n, k) - c.phase, digits);
  return sum;
}

}  // namespace testsupport
