#include <algorithm>
#include <string>

#include "partasym/asymptotics/phi.hpp"
#include "partasym/asymptotics/transfer.hpp"
#include "partasym/dedekind.hpp"
#include "partasym/errors.hpp"
#include "partasym/hp/bernoulli.hpp"
#include "partasym/hp/special.hpp"
#include "partasym/qseries/coefficients.hpp"

namespace partasym::asymptotics {

namespace {

constexpr int kGuardDigits = 10;

long mod(long n, long k) { return ((n % k) + k) % k; }

// cos(2π m n / k + π φ) with everything reduced exactly.
PreciseReal cos_phase(long m, long n, long k, const ExactRational& phi, int digits) {
  return hp::cos_pi(hp::ratio(2 * mod(m * mod(n, k), k), k) + phi, digits);
}

PreciseReal from_xi(const ExactRational& xi, int digits, const char* what) {
  if (xi <= 0) throw InvalidArgument(std::string(what) + ": ξ must be positive");
  return PreciseReal::from_rational(xi, digits);
}

}  // namespace

PreciseReal basic_phi(long n, long k, int digits) {
  if (k < 1 || k % 2 == 0) throw InvalidArgument("basic Φ_k needs odd k >= 1, got " + std::to_string(k));
  const int wd = digits + kGuardDigits;
  const PreciseReal xi = from_xi(ExactRational(n), wd, "basic Φ_k");
  const PreciseReal at = dedekind::a_tilde(k, n, wd);
  if (at.is_zero()) return PreciseReal(digits);
  const PreciseReal p = hp::pi(wd);
  const PreciseReal c = p * p / (4 * k * k);
  const PreciseReal pref = hp::sqrt(PreciseReal::from_long(k, wd) / p) / 2;
  return (pref * at * transfer_single(ExactRational(1, 2), c, xi, wd)).with_digits(digits);
}

ExactRational colored3_xi(long n) { return hp::ratio(8 * n + 7, 8); }

PreciseReal colored3_phi(long n, int k, int digits) {
  if (k < 1 || k > 7) throw InvalidArgument("colored3 Φ_k is defined for k = 1..7, got " + std::to_string(k));
  const int wd = digits + kGuardDigits;
  const PreciseReal xi = from_xi(colored3_xi(n), wd, "colored3 Φ_k");
  const PreciseReal p = hp::pi(wd);
  const auto B = [&](long d) { return transfer_single(ExactRational(1, 2), p * p / d, xi, wd); };
  const auto root = [&](long num, long den) { return hp::sqrt(PreciseReal::from_long(num, wd) / (den * p)); };
  PreciseReal v(wd);
  switch (k) {
    case 1:
      v = (B(2) - 3 * B(18)) / hp::sqrt(486 * p);
      break;
    case 2:
      v = (B(8) + 3 * B(72)) / hp::sqrt(243 * p);
      if (n % 2 != 0) v = -v;
      break;
    case 3:
      v = 2 * cos_phase(1, n, 3, ExactRational(-1, 6), wd) * B(18) / hp::sqrt(18 * p);
      break;
    case 4:
      v = 2 * cos_phase(1, n, 4, ExactRational(1, 8), wd) * root(4, 486) * B(32);
      break;
    case 5:
      v = 2 * (cos_phase(1, n, 5, ExactRational(-6, 5), wd) + cos_phase(2, n, 5, ExactRational(-1, 5), wd)) *
          root(5, 486) * B(50);
      break;
    case 6:
      v = 2 * cos_phase(1, n, 6, ExactRational(-5, 6), wd) * B(72) / hp::sqrt(9 * p);
      break;
    case 7:
      v = 2 *
          (cos_phase(1, n, 7, ExactRational(-11, 14), wd) + cos_phase(2, n, 7, ExactRational(-1, 14), wd) +
           cos_phase(3, n, 7, ExactRational(-13, 14), wd)) *
          root(7, 486) * B(98);
      break;
  }
  return v.with_digits(digits);
}

ExactRational plane_xi(long n) { return hp::ratio(48 * n + 1, 48); }

PreciseReal plane_phi_from_coeffs(long n, int which, const std::vector<ExactRational>& coeffs, int digits) {
  if (which != 1 && which != 2) throw InvalidArgument("planestrict: which must be 1 or 2");
  const int wd = digits + kGuardDigits;
  const PreciseReal xi = from_xi(plane_xi(n), wd, "planestrict Φ");
  const PreciseReal p = hp::pi(wd);
  const PreciseReal z3 = hp::zeta(ExactRational(3), wd);
  const PreciseReal zp = hp::zeta_prime_minus1(wd);
  PreciseReal a(wd), b(wd), pref(wd);
  ExactRational base;
  if (which == 1) {
    a = z3 / 2;
    b = p * p / 24;
    pref = hp::pow(PreciseReal::from_long(2, wd), ExactRational(-1, 4)) * hp::exp(zp / 2);
    base = ExactRational(1, 24);
  } else {
    a = z3 / 16;
    b = -(p * p) / 48;
    pref = hp::pow(PreciseReal::from_long(2, wd), ExactRational(1, 24)) * hp::exp(zp);
    if (n % 2 != 0) pref = -pref;
    base = ExactRational(1, 12);
  }
  PreciseReal sum(wd);
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (coeffs[m] == 0) continue;
    const ExactRational tp = base + ExactRational(2 * static_cast<long>(m));
    const auto r = transfer_double_adaptive(tp, ExactRational(2), a, ExactRational(1), b, xi, wd);
    sum += r.value * coeffs[m];
  }
  return (pref * sum).with_digits(digits);
}

PreciseReal plane_phi(long n, int which, int m_terms, int digits) {
  if (m_terms < 1) throw InvalidArgument("planestrict: need at least one correction term");
  const auto variant = which == 1 ? qseries::PlaneVariant::principal : qseries::PlaneVariant::alternating;
  return plane_phi_from_coeffs(n, which, qseries::plane_correction_coeffs_exact(m_terms - 1, variant), digits);
}

PringsConstants prings_constants(int digits) {
  const PreciseReal p = hp::pi(digits);
  const PreciseReal z2 = p * p / 6;
  const PreciseReal zz = hp::zeta(ExactRational(1, 2), digits) * hp::zeta(ExactRational(3, 2), digits);
  const PreciseReal sp = hp::sqrt(p);
  const PreciseReal s2 = hp::sqrt(PreciseReal::from_long(2, digits));
  return {z2 * z2, sp / 2 * zz, 7 * z2 * z2 / 16, sp / 8 * (3 * s2 - 1) * zz};
}

PreciseReal prings_phi(long n, int which, int digits) {
  if (which != 1 && which != 2) throw InvalidArgument("prings: which must be 1 or 2");
  const int wd = digits + kGuardDigits;
  const PreciseReal xi = from_xi(ExactRational(n), wd, "prings Φ");
  const PringsConstants c = prings_constants(wd);
  const PreciseReal& a = which == 1 ? c.a : c.a2;
  const PreciseReal& b = which == 1 ? c.b : c.b2;
  const auto r = transfer_double_adaptive(ExactRational(-1, 4), ExactRational(1), a, ExactRational(1, 2), b, xi, wd);
  PreciseReal v = hp::pow(2 * hp::pi(wd), ExactRational(3, 4)) * r.value;
  if (which == 2 && n % 2 != 0) v = -v;
  return v.with_digits(digits);
}

PreciseReal prings_closed_form(long n, int digits) {
  const int wd = digits + kGuardDigits;
  const PreciseReal xn = from_xi(ExactRational(n), wd, "prings closed form");
  const PringsConstants c = prings_constants(wd);
  const PreciseReal pref = hp::pow(2 * hp::pi(wd) * hp::sqrt(c.a), ExactRational(1, 4)) /
                           (hp::sqrt(PreciseReal::from_long(2, wd)) * hp::pow(xn, ExactRational(5, 8)));
  const PreciseReal e = 2 * hp::sqrt(c.a * xn) + c.b * hp::pow(xn / c.a, ExactRational(1, 4)) -
                        c.b * c.b / (16 * c.a);
  return (pref * hp::exp(e)).with_digits(digits);
}

PreciseReal concave_q(long n, int k, int digits) {
  if (k < 0) throw InvalidArgument("concave q_k needs k >= 0");
  const int wd = digits + kGuardDigits;
  const PreciseReal xi = from_xi(ExactRational(n), wd, "concave q_k");
  const PreciseReal ck = qseries::concave_correction_coeffs(std::max(k, 1), wd)[k].re;
  if (ck.is_zero()) return PreciseReal(digits);
  const PreciseReal p = hp::pi(wd);
  const PreciseReal a = hp::sqrt(2 * p) / 2 * hp::zeta(ExactRational(3, 2), wd);
  const auto r = transfer_double_adaptive(1 + hp::ratio(k, 2), ExactRational(1, 2), a, ExactRational(1),
                                          PreciseReal(wd), xi, wd);
  return (ck / (4 * p) * r.value).with_digits(digits);
}

PreciseReal concave_growth_constant(int digits) {
  const int wd = digits + kGuardDigits;
  const PreciseReal v = hp::pow(hp::pi(wd), ExactRational(1, 3)) *
                        hp::pow(hp::zeta(ExactRational(3, 2), wd), ExactRational(2, 3)) * 3 / 2;
  return v.with_digits(digits);
}

ExactRational petersson_check(int k) {
  if (k < 1) throw InvalidArgument("petersson_check needs k >= 1");
  ExactRational lhs = 0;
  for (int j = 0; j <= k; ++j) lhs += ExactRational(hp::binomial(k, j)) * hp::zeta_nonpositive(2 * k - j);
  ExactRational rhs(k % 2 == 0 ? 1 : -1);
  rhs /= ExactRational(2 * (2 * k + 1) * hp::binomial(2 * k, k));
  ExactRational diff = lhs - rhs;
  diff.canonicalize();
  return abs(diff);
}

}  // namespace partasym::asymptotics
