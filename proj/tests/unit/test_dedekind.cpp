#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <utility>
#include <vector>

#include "partasym/dedekind.hpp"
#include "partasym/errors.hpp"
#include "support.hpp"

using namespace partasym;
using namespace partasym::dedekind;
using hp::ratio;
using testsupport::Gen;

namespace {

// Cotangent form: s(h,k) = (1/4k) Σ_{j=1}^{k-1} cot(πj/k) cot(πhj/k).
double s_cot(long h, long k) {
  double s = 0;
  for (long j = 1; j < k; ++j) {
    s += 1.0 / std::tan(std::numbers::pi * j / k) / std::tan(std::numbers::pi * h * j / k);
  }
  return s / (4.0 * k);
}

// Ã from the cotangent sums in double precision.
double a_tilde_double(long k, long n) {
  if (k == 1) return 1.0;
  double sum = 0;
  for (long h = 1; h < k; ++h) {
    if (std::gcd(h, k) != 1) continue;
    const double t = 2 * s_cot(h, k) - s_cot(2 * h % k, k);
    sum += std::cos(std::numbers::pi * t - 2 * std::numbers::pi * double(n * h % k) / k);
  }
  return sum;
}

}  // namespace

TEST_CASE("sawtooth") {
  CHECK(sawtooth(ExactRational(3)) == 0);
  CHECK(sawtooth(ratio(1, 4)) == ratio(-1, 4));
  CHECK(sawtooth(ratio(-1, 4)) == ratio(1, 4));
  CHECK(sawtooth(ratio(7, 2)) == 0);
  Gen g(21);
  for (int i = 0; i < 200; ++i) {
    const ExactRational x = g.fraction(500, 37);
    CHECK(sawtooth(-x) == -sawtooth(x));
    CHECK(sawtooth(x + 5) == sawtooth(x));
  }
}

TEST_CASE("dedekind_sum: values") {
  CHECK(dedekind_sum(1, 7) == ratio(5, 14));
  CHECK(dedekind_sum(2, 7) == ratio(1, 14));
  CHECK(dedekind_sum(3, 7) == ratio(-1, 14));
  CHECK(dedekind_sum(1, 3) == ratio(1, 18));
  CHECK(dedekind_sum(0, 1) == 0);
  // s(1,k) = (k-1)(k-2)/12k
  for (long k = 1; k <= 80; ++k) CHECK(dedekind_sum(1, k) == ratio((k - 1) * (k - 2), 12 * k));
}

TEST_CASE("dedekind_sum: matches the cotangent form") {
  for (long k = 2; k <= 60; ++k) {
    for (long h : coprime_residues(k)) {
      CHECK(dedekind_sum(h, k).get_d() == doctest::Approx(s_cot(h, k)).epsilon(1e-9));
    }
  }
}

TEST_CASE("dedekind_sum: reciprocity, antisymmetry and the fast path") {
  for (long k = 1; k <= 60; ++k) {
    for (long h = 1; h <= 60; ++h) {
      if (std::gcd(h, k) != 1) continue;
      const ExactRational lhs = dedekind_sum(h, k) + dedekind_sum(k, h);
      const ExactRational rhs = ratio(h * h + k * k + 1, 12 * h * k) - ratio(1, 4);
      CHECK(lhs == rhs);
    }
  }
  Gen g(22);
  for (int i = 0; i < 300; ++i) {
    const long k = g.integer(1, 400);
    const long h = g.integer(0, 3 * k);
    if (std::gcd(h, k) != 1) continue;
    CHECK(dedekind_sum(k - h % k, k) == -dedekind_sum(h, k));
    CHECK(dedekind_sum_fast(h, k) == dedekind_sum(h, k));
  }
}

TEST_CASE("t_sum") {
  CHECK(t_sum(1, 3) == ratio(1, 6));
  CHECK(t_sum(2, 3) == ratio(-1, 6));
  CHECK(t_sum(0, 1) == 0);
  CHECK_THROWS_AS(t_sum(1, 4), InvalidArgument);
}

TEST_CASE("a_tilde: principal term and the double-precision oracle") {
  for (long n : {0L, 1L, 7L, 1000L}) CHECK(a_tilde(1, n, 40) == 1);
  for (long k = 3; k <= 41; k += 2) {
    for (long n = 0; n < 2 * k; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(a_tilde(k, n, 40).to_double() == doctest::Approx(a_tilde_double(k, n)).epsilon(1e-9).scale(1.0));
    }
  }
  CHECK_THROWS_AS(a_tilde(4, 1, 40), InvalidArgument);
}

TEST_CASE("a_tilde: printed cosine tables for k ≤ 13, n ∈ [0,25]") {
  const int digits = 50;
  for (const auto& [k, cosines] : testsupport::atilde_closed_forms()) {
    for (long n = 0; n <= 25; ++n) {
      const PreciseReal want = testsupport::atilde_closed_form(cosines, k, n, digits);
      CAPTURE(k);
      CAPTURE(n);
      CHECK(hp::abs(a_tilde(k, n, digits) - want) < hp::PreciseReal::parse("1e-30", digits));
    }
  }
}

TEST_CASE("a_tilde: periodic in n with period k") {
  Gen g(23);
  for (int i = 0; i < 40; ++i) {
    const long k = 2 * g.integer(0, 15) + 1;
    const long n = g.integer(0, 500);
    CHECK(hp::abs(a_tilde(k, n, 40) - a_tilde(k, n + k, 40)) < hp::PreciseReal::parse("1e-35", 40));
  }
}

TEST_CASE("coprime_residues") {
  CHECK(coprime_residues(1).empty());
  CHECK(coprime_residues(9) == std::vector<long>{1, 2, 4, 5, 7, 8});
  for (long k = 2; k <= 200; ++k) {
    long phi = 0;
    for (long h = 1; h < k; ++h) phi += std::gcd(h, k) == 1;
    CHECK(static_cast<long>(coprime_residues(k).size()) == phi);
  }
}

TEST_CASE("inverse_mod: h h' ≡ -1 exhaustively for k ≤ 150") {
  for (long k = 1; k <= 150; ++k) {
    for (long h : coprime_residues(k)) {
      const long hp = inverse_mod(h, k);
      CHECK(hp >= 0);
      CHECK(hp < k);
      CHECK((h * hp + 1) % k == 0);
    }
  }
  CHECK_THROWS_AS(inverse_mod(2, 4), InvalidArgument);
  CHECK_THROWS_AS(SingularPoint::make(2, 4), InvalidArgument);
  CHECK(SingularPoint::make(3, 7) == SingularPoint{3, 7});
}
