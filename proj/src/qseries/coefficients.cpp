#include "partasym/qseries/coefficients.hpp"

#include <numeric>
#include <string>

#include "partasym/errors.hpp"
#include "partasym/hp/bernoulli.hpp"
#include "partasym/hp/special.hpp"

namespace partasym::qseries {

namespace {

using hp::BigCount;
using hp::bernoulli_number;
using hp::bernoulli_poly;
using hp::zeta_nonpositive;

BigCount factorial(long n) {
  BigCount f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

BigCount pow2(long e) {
  BigCount p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return p;
}

void require_terms(int J, const char* what) {
  if (J < 1) throw InvalidArgument(std::string(what) + ": J must be >= 1");
}

PowerSeries even_to_series(const std::vector<ExactRational>& by_j, int digits) {
  PowerSeries s(2 * static_cast<int>(by_j.size()) - 1, 1, digits);
  for (size_t j = 0; j < by_j.size(); ++j) {
    s.set(2 * static_cast<int>(j), hp::PreciseReal::from_rational(by_j[j], digits));
  }
  return s;
}

}  // namespace

// A series in u = t² is exponentiated the same way as one in t, so the even-indexed
// exponents are handled as a dense series in u.
std::vector<ExactRational> nsp_phi1_coeffs_exact(int r, int J) {
  require_terms(J, "nsp_phi1_coeffs");
  if (r < 2) throw InvalidArgument("nsp_phi1_coeffs: r must be >= 2");
  std::vector<ExactRational> expo(static_cast<size_t>(J) + 1);
  for (int j = 1; j <= J; ++j) {
    expo[j] = bernoulli_number(2 * j) * bernoulli_poly(2 * j + 1, ExactRational(r)) /
              ExactRational(BigCount(2 * j) * factorial(2 * j + 1));
    expo[j].canonicalize();
  }
  return series_exp_exact(expo);
}

PowerSeries nsp_phi1_coeffs(int r, int J, int digits) {
  return even_to_series(nsp_phi1_coeffs_exact(r, J), digits);
}

std::vector<ExactRational> nsp_phi2_coeffs_exact(int r, int J) {
  require_terms(J, "nsp_phi2_coeffs");
  if (r < 2 || r % 2 != 0) {
    throw InvalidArgument("nsp_phi2_coeffs: r must be even and >= 2, got " + std::to_string(r));
  }
  std::vector<ExactRational> expo(static_cast<size_t>(J) + 1);
  for (int j = 1; j <= J; ++j) {
    const BigCount p = pow2(2 * j);
    const ExactRational inner = bernoulli_poly(2 * j + 1, hp::ratio(r, 2)) +
                                ExactRational(p - 1) * bernoulli_poly(2 * j + 1, hp::ratio(r + 1, 2));
    expo[j] = ExactRational(p) * bernoulli_number(2 * j) * inner /
              ExactRational(BigCount(2 * j) * factorial(2 * j + 1));
    expo[j].canonicalize();
  }
  return series_exp_exact(expo);
}

PowerSeries nsp_phi2_coeffs(int r, int J, int digits) {
  return even_to_series(nsp_phi2_coeffs_exact(r, J), digits);
}

ExactRational plane_residue(int k, PlaneVariant variant) {
  if (k < 1) throw InvalidArgument("plane_residue: k must be >= 1");
  ExactRational res = zeta_nonpositive(2 * k - 1) * zeta_nonpositive(2 * k + 1) /
                      ExactRational(2 * factorial(2 * k));
  if (variant == PlaneVariant::alternating) {
    const BigCount a = 1 - pow2(2 * k - 1);
    const BigCount b = 1 - pow2(2 * k + 1);
    res *= ExactRational(1 - 2 * a * b);
  }
  res.canonicalize();
  return res;
}

std::vector<ExactRational> plane_correction_coeffs_exact(int J, PlaneVariant variant) {
  require_terms(J, "plane_correction_coeffs");
  std::vector<ExactRational> expo(static_cast<size_t>(J) + 1);
  for (int k = 1; k <= J; ++k) expo[k] = plane_residue(k, variant);
  return series_exp_exact(expo);
}

PowerSeries plane_correction_coeffs(int J, PlaneVariant variant, int digits) {
  return even_to_series(plane_correction_coeffs_exact(J, variant), digits);
}

PowerSeries concave_correction_coeffs(int J, int digits) {
  require_terms(J, "concave_correction_coeffs");
  const int wd = digits + 10;
  const hp::PreciseReal pref = hp::sqrt(2 * hp::pi(wd)) / 16;
  PowerSeries expo(J + 1, 2, wd);
  // t^{k+1/2} sits at half-index 2k+1.
  for (int k = 0; 2 * k + 1 <= J; ++k) {
    const ExactRational s = ExactRational(1, 2) - k;
    const hp::PreciseReal denom =
        hp::PreciseReal::from_integer(factorial(k + 1), wd) * hp::pow(hp::PreciseReal::from_long(8, wd), static_cast<long>(k));
    expo.set(2 * k + 1, pref * hp::zeta(s, wd) / denom);
  }
  const PowerSeries e = series_exp(expo);
  PowerSeries out(J + 1, 2, digits);
  for (int i = 0; i <= J; ++i) out.set(i, e[i]);
  return out;
}

PowerSeries expand_finite_product(int rmax, long h, long k, int J, int digits) {
  require_terms(J, "expand_finite_product");
  if (rmax < 1) throw InvalidArgument("expand_finite_product: rmax must be >= 1");
  if (k < 2 || h < 1 || h >= k || std::gcd(h, k) != 1) {
    throw InvalidArgument("expand_finite_product: need 1 <= h < k with gcd(h,k) = 1");
  }
  const int wd = digits + 10;
  PowerSeries prod = PowerSeries::one(J + 1, 1, wd);
  for (int j = 1; j <= rmax; ++j) {
    // 1 - ω^j Σ_m (-j t)^m / m!
    const hp::PreciseComplex wj = hp::cis_pi(hp::ratio(2 * h * j % (2 * k), k), wd);
    PowerSeries factor(J + 1, 1, wd);
    hp::PreciseReal tm = hp::PreciseReal::from_long(1, wd);  // (-j)^m / m!
    for (int m = 0; m <= J; ++m) {
      hp::PreciseComplex c = wj * tm;
      c = -c;
      if (m == 0) c += hp::PreciseComplex(hp::PreciseReal::from_long(1, wd));
      factor.set(m, c);
      tm *= -j;
      tm /= (m + 1);
    }
    prod = mul(prod, factor);
  }
  PowerSeries out(J + 1, 1, digits);
  for (int i = 0; i <= J; ++i) out.set(i, prod[i]);
  return out;
}

}  // namespace partasym::qseries
