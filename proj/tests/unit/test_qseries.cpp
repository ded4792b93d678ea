#include <doctest.h>

#include <vector>

#include "partasym/errors.hpp"
#include "partasym/hp/bernoulli.hpp"
#include "partasym/qseries/coefficients.hpp"
#include "partasym/qseries/direct_log.hpp"
#include "partasym/qseries/power_series.hpp"
#include "support.hpp"

using namespace partasym;
using namespace partasym::qseries;
using hp::ratio;
using testsupport::Gen;
using testsupport::tenth_power;

namespace {

constexpr int D = 40;

PreciseReal num(const char* s, int digits = D) { return PreciseReal::parse(s, digits); }

bool near(const PreciseComplex& a, const PreciseComplex& b, long exponent) {
  return hp::abs(a - b) < tenth_power(exponent, a.digits());
}

ExactRational zeta_neg(int m) {  // ζ(-m) = (-1)^m B_{m+1}/(m+1)
  ExactRational v = hp::bernoulli_number(m + 1) / (m + 1);
  return m % 2 ? -v : v;
}

PowerSeries random_series(Gen& g, int order, bool zero_constant) {
  PowerSeries s(order, 1, D);
  for (int i = zero_constant ? 1 : 0; i < order; ++i) {
    s.set(i, PreciseComplex(PreciseReal::from_rational(g.fraction(50, 9), D),
                            PreciseReal::from_rational(g.fraction(50, 9), D)));
  }
  return s;
}

}  // namespace

TEST_CASE("PowerSeries: arithmetic") {
  const auto a = PowerSeries::from_rational({1, 1}, 1, D);
  const auto b = PowerSeries::from_rational({1, -1, 0}, 1, D);
  const auto p = mul(a, b);
  REQUIRE(p.order() == 2);
  CHECK(p[0].re == 1);
  CHECK(p[1].re.is_zero());
  const auto q = mul(PowerSeries::from_rational({1, 1, 0}, 1, D), b);
  CHECK(q[2].re == -1);
  CHECK(add(a, a)[1].re == 2);
  CHECK(sub(a, a)[0].re.is_zero());
  CHECK(truncate(q, 1).order() == 1);
  CHECK_THROWS_AS(truncate(q, 4), InvalidArgument);
  CHECK_THROWS_AS(q.coeff(3), InvalidArgument);
}

TEST_CASE("PowerSeries: exp of t is the exponential series") {
  const auto e = series_exp(PowerSeries::from_rational({0, 1, 0, 0, 0, 0, 0}, 1, D));
  ExactRational factorial = 1;
  for (int i = 0; i < 7; ++i) {
    if (i) factorial *= i;
    CHECK(near(e[i], PreciseComplex(PreciseReal::from_rational(1 / factorial, D)), -(D - 2)));
  }
  CHECK_THROWS(series_exp(PowerSeries::from_rational({1, 1}, 1, D)));
}

TEST_CASE("PowerSeries: log ∘ exp and exp ∘ log are identities") {
  Gen g(31);
  for (int trial = 0; trial < 20; ++trial) {
    const PowerSeries s = random_series(g, 12, true);
    const PowerSeries back = series_log(series_exp(s));
    for (int i = 0; i < 12; ++i) CHECK(near(back[i], s[i], -(D - 12)));
    PowerSeries u = random_series(g, 12, false);
    u.set(0, PreciseReal::from_long(1, D));
    const PowerSeries again = series_exp(series_log(u));
    for (int i = 0; i < 12; ++i) CHECK(near(again[i], u[i], -(D - 12)));
  }
}

TEST_CASE("PowerSeries: exp is a homomorphism") {
  Gen g(32);
  for (int trial = 0; trial < 20; ++trial) {
    const PowerSeries a = random_series(g, 10, true);
    const PowerSeries b = random_series(g, 10, true);
    const PowerSeries lhs = series_exp(add(a, b));
    const PowerSeries rhs = mul(series_exp(a), series_exp(b));
    for (int i = 0; i < 10; ++i) CHECK(near(lhs[i], rhs[i], -(D - 12)));
  }
}

TEST_CASE("series_exp_exact agrees with the real recurrence") {
  Gen g(33);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ExactRational> s{0};
    for (int i = 1; i < 9; ++i) s.push_back(g.fraction(20, 7));
    const auto exact = series_exp_exact(s);
    const auto real = series_exp(PowerSeries::from_rational(s, 1, D));
    for (int i = 0; i < 9; ++i) CHECK(near(real[i], PreciseComplex(PreciseReal::from_rational(exact[i], D)), -(D - 8)));
  }
}

TEST_CASE("nsp correction coefficients") {
  // Exponent coefficient of t² is B₂B₃(r)/12; with no higher terms contributing at t².
  const auto c12 = nsp_phi1_coeffs_exact(12, 3);
  CHECK(c12[0] == 1);
  CHECK(c12[1] == ratio(253, 12));
  for (int r = 2; r <= 20; ++r) {
    const auto c = nsp_phi1_coeffs_exact(r, 2);
    const ExactRational e2 = hp::bernoulli_number(2) * hp::bernoulli_poly(3, ExactRational(r)) / 12;
    const ExactRational e4 = hp::bernoulli_number(4) * hp::bernoulli_poly(5, ExactRational(r)) / (4 * 120);
    CHECK(c[1] == e2);
    CHECK(c[2] == e4 + e2 * e2 / 2);
  }
  CHECK_THROWS_AS(nsp_phi1_coeffs_exact(1, 2), InvalidArgument);
  // 4·B₂·(B₃(1) + 3B₃(3/2))/12 = 1/8
  CHECK(nsp_phi2_coeffs_exact(2, 2)[1] == ratio(1, 8));
  CHECK_THROWS_AS(nsp_phi2_coeffs_exact(3, 2), InvalidArgument);
  const auto real = nsp_phi1_coeffs(12, 3, D);
  CHECK(real.order() == 7);
  CHECK(real[1].re.is_zero());
  CHECK(near(real[2], PreciseComplex(PreciseReal::from_rational(ratio(253, 12), D)), -(D - 2)));
}

TEST_CASE("expand_finite_product") {
  // Taylor series against the product evaluated at a small t.
  const int digits = 60;
  const PreciseReal t = PreciseReal::parse("0.001", digits);
  for (auto [rmax, h, k] : std::vector<std::tuple<int, long, long>>{{1, 1, 2}, {3, 1, 5}, {11, 3, 7}, {11, 5, 13}, {5, 2, 9}}) {
    const int J = 20;  // c_J t^J stays below 1e-40 for rmax ≤ 11
    const auto c = expand_finite_product(rmax, h, k, J, digits);
    PreciseComplex product(PreciseReal::from_long(1, digits), PreciseReal(digits));
    for (int j = 1; j <= rmax; ++j) {
      const auto w = hp::cis_pi(ratio(2 * j * h, k), digits) * hp::exp(-(j * t));
      product *= PreciseComplex(PreciseReal::from_long(1, digits), PreciseReal(digits)) - w;
    }
    PreciseComplex series(digits), power(PreciseReal::from_long(1, digits), PreciseReal(digits));
    for (int i = 0; i <= J; ++i) {
      series += c[i] * power;
      power *= t;
    }
    CAPTURE(rmax);
    CAPTURE(k);
    CHECK(hp::abs(series - product) < tenth_power(-40, digits));
    // ω^k = 1 is one of the factors once k ≤ rmax.
    CHECK((k <= rmax) == (hp::abs(c[0]) < tenth_power(-50, digits)));
    // h ↦ k-h conjugates every coefficient.
    const auto cc = expand_finite_product(rmax, k - h, k, J, digits);
    for (int i = 0; i <= J; ++i) CHECK(near(cc[i], hp::conj(c[i]), -50));
  }
  CHECK_THROWS_AS(expand_finite_product(3, 2, 4, 3, D), InvalidArgument);
}

TEST_CASE("planestrict residues and correction coefficients") {
  for (int k = 1; k <= 8; ++k) {
    const ExactRational base = zeta_neg(2 * k - 1) * zeta_neg(2 * k + 1) / 2;
    ExactRational fact = 1;
    for (int i = 2; i <= 2 * k; ++i) fact *= i;
    CHECK(plane_residue(k, PlaneVariant::principal) == base / fact);
  }
  CHECK(plane_residue(1, PlaneVariant::principal) == ratio(-1, 5760));
  CHECK(plane_residue(1, PlaneVariant::alternating) == ratio(13, 5760));
  CHECK(plane_residue(2, PlaneVariant::alternating) == ratio(433, 1451520));
  CHECK(plane_residue(3, PlaneVariant::alternating) == ratio(7873, 87091200));
  const auto c = plane_correction_coeffs_exact(3, PlaneVariant::principal);
  CHECK(c[0] == 1);
  CHECK(c[1] == ratio(-1, 5760));
  CHECK(c[2] == ratio(-313, 464486400));
  CHECK(c[3] == ExactRational(mpz_class("-91207"), mpz_class("8026324992000")));
}

TEST_CASE("concave correction coefficients") {
  const auto c = concave_correction_coeffs(4, D);
  const PreciseReal pref = hp::sqrt(2 * hp::pi(D)) / 16;
  PreciseReal z_half(D), z_mhalf(D);
  mpfr_zeta(z_half.get(), num("0.5").get(), MPFR_RNDN);
  mpfr_zeta(z_mhalf.get(), num("-0.5").get(), MPFR_RNDN);
  const PreciseReal e1 = pref * z_half;
  const PreciseReal e3 = pref * z_mhalf / 16;
  CHECK(c.grading() == 2);
  CHECK(c[0].re == 1);
  CHECK(near(c[1], PreciseComplex(e1), -(D - 3)));
  CHECK(c[1].re.to_fixed(5) == "-0.22879");
  CHECK(near(c[2], PreciseComplex(e1 * e1 / 2), -(D - 3)));
  CHECK(near(c[3], PreciseComplex(e3 + e1 * e1 * e1 / 6), -(D - 3)));
}

TEST_CASE("direct_log_f against Euler's F") {
  const int digits = 40;
  for (const char* ts : {"0.05", "0.3", "1"}) {
    const PreciseReal t = PreciseReal::parse(ts, digits);
    const auto two_t = 2 * t;
    // basic = F(x)² / F(x²)
    const auto basic = direct_log_f(FamilySpec::of(Family::basic), 0, 1, t, digits);
    const auto via_f = direct_log_euler(0, 1, t, digits) * PreciseReal::from_long(2, digits) -
                       direct_log_euler(0, 1, two_t, digits);
    CHECK(near(basic, via_f, -(digits - 8)));
    // nsp(r) = F(x) ∏_{j<r} (1 - x^j)
    for (int r : {2, 5, 12}) {
      PreciseComplex want = direct_log_euler(0, 1, t, digits);
      for (int j = 1; j < r; ++j) want += PreciseComplex(hp::log(1 - hp::exp(-(j * t))));
      CHECK(near(direct_log_f(FamilySpec::nsp(r), 0, 1, t, digits), want, -(digits - 8)));
    }
    // At a root of unity: basic(ωx) with ω = -1 is F(-x)² / F(x²).
    const auto alt = direct_log_f(FamilySpec::of(Family::basic), 1, 2, t, digits);
    const auto alt_via = direct_log_euler(1, 2, t, digits) * PreciseReal::from_long(2, digits) -
                         direct_log_euler(0, 1, two_t, digits);
    CHECK(near(alt, alt_via, -(digits - 8)));
  }
  CHECK_THROWS_AS(direct_log_f(FamilySpec::of(Family::basic), 2, 4, num("0.5"), D), InvalidArgument);
}

TEST_CASE("direct_log_euler: the principal value obeys Dedekind η's leading behaviour") {
  // log F(e^{-t}) = π²/6t + ½ log(t/2π) - t/24 + O(e^{-4π²/t})
  const int digits = 40;
  const PreciseReal t = PreciseReal::parse("0.25", digits);
  const PreciseReal pi = hp::pi(digits);
  const PreciseReal want = pi * pi / (6 * t) + hp::log(t / (2 * pi)) / 2 - t / 24;
  const auto got = direct_log_euler(0, 1, t, digits);
  // The neglected term is e^{-4π²/t}/... ≈ 1e-68; the bound is the precision.
  CHECK(hp::abs(got.re - want) < tenth_power(-(digits - 5), digits));
  CHECK(got.im.is_zero());
}
