#include <numeric>
#include <string>

#include "partasym/asymptotics/phi.hpp"
#include "partasym/asymptotics/transfer.hpp"
#include "partasym/dedekind.hpp"
#include "partasym/errors.hpp"
#include "partasym/hp/bernoulli.hpp"
#include "partasym/hp/complex.hpp"
#include "partasym/hp/special.hpp"
#include "partasym/qseries/coefficients.hpp"

namespace partasym::asymptotics {

namespace {

constexpr int kGuardDigits = 10;

PreciseReal zeta2(int digits) {
  const PreciseReal p = hp::pi(digits);
  return p * p / 6;
}

PreciseReal factorial(long n, int digits) {
  hp::BigCount f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return PreciseReal::from_integer(f, digits);
}

void require_r(int r) {
  if (r < 2) throw InvalidArgument("nsp: r must be >= 2, got " + std::to_string(r));
}

PreciseReal phi1_impl(int r, long n, int J, int digits, int exponent_sign) {
  require_r(r);
  const int wd = digits + kGuardDigits;
  const PreciseReal xi = PreciseReal::from_rational(nsp_xi(r, n), wd);
  if (xi.sign() <= 0) throw InvalidArgument("nsp Φ₁: ξ = n - B₂(r)/4 must be positive");
  const PreciseReal z2 = zeta2(wd);
  const auto c = qseries::nsp_phi1_coeffs_exact(r, J);
  const PreciseReal z = 2 * hp::sqrt(z2 * xi);
  PreciseReal sum(wd);
  for (int j = 0; j <= J; ++j) {
    const ExactRational order = -(ExactRational(r) + ExactRational(1, 2) + 2 * j);
    const ExactRational power = hp::ratio(exponent_sign * r, 2) + ExactRational(1, 4) + j;
    sum += hp::pow(z2 / xi, power) * hp::bessel_i(order, z, wd) * c[j];
  }
  return (factorial(r - 1, wd) / hp::sqrt(2 * hp::pi(wd)) * sum).with_digits(digits);
}

}  // namespace

ExactRational nsp_xi(int r, long n) {
  ExactRational xi = ExactRational(n) - hp::bernoulli_poly(2, ExactRational(r)) / 4;
  xi.canonicalize();
  return xi;
}

ExactRational nsp_xi_higher(long n) { return hp::ratio(24 * n - 1, 24); }

PreciseReal nsp_phi1(int r, long n, int J, int digits) { return phi1_impl(r, n, J, digits, +1); }

PreciseReal nsp_phi1_negative_exponent(int r, long n, int J, int digits) {
  return phi1_impl(r, n, J, digits, -1);
}

PreciseReal nsp_phi2(int r, long n, int J, int digits) {
  require_r(r);
  if (r % 2 != 0) throw InvalidArgument("nsp Φ₂ needs even r, got " + std::to_string(r));
  const int wd = digits + kGuardDigits;
  const PreciseReal xi = PreciseReal::from_rational(nsp_xi(r, n), wd);
  if (xi.sign() <= 0) throw InvalidArgument("nsp Φ₂: ξ = n - B₂(r)/4 must be positive");
  const PreciseReal c = zeta2(wd) / 4;
  const auto d = qseries::nsp_phi2_coeffs_exact(r, J);
  PreciseReal sum(wd);
  for (int j = 0; j <= J; ++j) {
    sum += transfer_single(hp::ratio(r - 1, 2) + 2 * j, c, xi, wd) * d[j];
  }
  PreciseReal pref = hp::pow(PreciseReal::from_long(2, wd), static_cast<long>(r - 1)) *
                     factorial(r / 2 - 1, wd) / hp::sqrt(hp::pi(wd));
  if (n % 2 != 0) pref = -pref;
  return (pref * sum).with_digits(digits);
}

PreciseReal nsp_phi_hk(int r, long n, long h, long k, int J, int digits) {
  require_r(r);
  if (k < 2 || h < 1 || 2 * h > k || std::gcd(h, k) != 1) {
    throw InvalidArgument("nsp Φ_{k,h}: need 1 <= h <= k/2 with gcd(h,k) = 1");
  }
  const int wd = digits + kGuardDigits;
  const PreciseReal xi = PreciseReal::from_rational(nsp_xi_higher(n), wd);
  if (xi.sign() <= 0) throw InvalidArgument("nsp Φ_k: ξ = n - 1/24 must be positive");
  const PreciseReal c = zeta2(wd) / (k * k);
  const qseries::PowerSeries g = qseries::expand_finite_product(r - 1, h, k, J, wd);
  // e^{πi s(h,k) - 2πinh/k}, reduced exactly.
  const long nh = ((n % k) * h) % k;
  const ExactRational phase = dedekind::dedekind_sum_fast(h, k) - hp::ratio(2 * nh, k);
  const hp::PreciseComplex w = hp::cis_pi(phase, wd);
  PreciseReal sum(wd);
  for (int j = 0; j <= J; ++j) {
    const hp::PreciseComplex cw = g[j] * w;
    if (cw.re.is_zero()) continue;
    sum += cw.re * transfer_single(ExactRational(1, 2) + j, c, xi, wd);
  }
  const long mult = (2 * h == k) ? 1 : 2;
  const PreciseReal pref = hp::sqrt(PreciseReal::from_long(k, wd) / (2 * hp::pi(wd))) * mult;
  return (pref * sum).with_digits(digits);
}

std::vector<std::pair<long, PreciseReal>> nsp_phi_k_parts(int r, long n, long k, int J, int digits) {
  if (k < 2) throw InvalidArgument("nsp Φ_k: k must be >= 2");
  std::vector<std::pair<long, PreciseReal>> parts;
  for (long h = 1; 2 * h <= k; ++h) {
    if (std::gcd(h, k) == 1) parts.emplace_back(h, nsp_phi_hk(r, n, h, k, J, digits));
  }
  return parts;
}

PreciseReal nsp_phi_k(int r, long n, long k, int J, int digits) {
  PreciseReal total(digits);
  for (const auto& [h, v] : nsp_phi_k_parts(r, n, k, J, digits)) total += v;
  return total;
}

}  // namespace partasym::asymptotics
