#include "partasym/asymptotics/expansions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "partasym/errors.hpp"
#include "partasym/hp/bernoulli.hpp"
#include "partasym/hp/special.hpp"
#include "partasym/asymptotics/phi.hpp"
#include "partasym/qseries/coefficients.hpp"
#include "partasym/qseries/direct_log.hpp"

namespace partasym::asymptotics {

namespace {

constexpr int kGuardDigits = 10;

using hp::ExactRational;

// F(x^m)^e as one factor of an F-product generating function.
struct EulerFactor {
  long m;
  long e;
};

std::vector<EulerFactor> euler_factors(Family f) {
  switch (f) {
    case Family::basic:
      return {{1, 2}, {2, -1}};
    case Family::colored3:
      return {{1, 3}, {3, 1}, {9, -3}};
    default:
      return {};
  }
}

// The point and scale seen by F(x^m) when x = e^{2πih/k - t}.
struct Reduced {
  long h, k, m;
};

Reduced reduce(long h, long k, long m) {
  const long g = std::gcd(m, k);
  const long k1 = k / g;
  const long h1 = k1 == 1 ? 0 : (h * (m / g)) % k1;
  return {h1, k1, m};
}

PreciseComplex real(const PreciseReal& x) { return PreciseComplex(x, PreciseReal(x.digits())); }

// log Σ_j c_j t^j over the leading `count` coefficients of a series with the given grading.
PreciseComplex log_truncated(const std::vector<PreciseComplex>& c, int count, int grading, const PreciseReal& t) {
  const PreciseReal step = grading == 1 ? t : hp::sqrt(t);
  PreciseComplex sum(t.digits());
  PreciseReal power = PreciseReal::from_long(1, t.digits());
  for (int j = 0; j < count; ++j) {
    sum += c[static_cast<size_t>(j)] * power;
    power *= step;
  }
  return hp::log(sum);
}

PreciseComplex log_truncated(const std::vector<ExactRational>& c, int stride, const PreciseReal& t) {
  PreciseReal sum(t.digits());
  const PreciseReal step = hp::pow(t, static_cast<long>(stride));
  PreciseReal power = PreciseReal::from_long(1, t.digits());
  for (const auto& q : c) {
    sum += power * q;
    power *= step;
  }
  return real(hp::log(sum));
}

ClosedExpansion closed_nsp(int r, long h, long k, const PreciseReal& t, int J) {
  const int wd = t.digits();
  if (J < 1) throw InvalidArgument("closed_log_f: nsp needs J >= 1");
  const PreciseReal p = hp::pi(wd);
  const PreciseReal z2 = p * p / 6;
  const PreciseReal lt = hp::log(t);
  ClosedExpansion out;
  out.known_tail = euler_log_tail(h, k, t, wd);
  if (k == 1) {
    hp::BigCount f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(r - 1));
    PreciseReal v = hp::log(PreciseReal::from_integer(f, wd) / hp::sqrt(2 * p)) +
                    PreciseReal::from_rational(hp::ratio(2 * r - 1, 2), wd) * lt + z2 / t -
                    t * (hp::bernoulli_poly(2, ExactRational(r)) / 4);
    out.value = real(v) + log_truncated(qseries::nsp_phi1_coeffs_exact(r, J), 2, t);
    out.omitted_order = 2.0 * J + 2;
    return out;
  }
  if (k == 2 && r % 2 == 0) {
    hp::BigCount f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(r / 2 - 1));
    const PreciseReal pref = hp::pow(PreciseReal::from_long(2, wd), static_cast<long>(r - 1)) *
                             PreciseReal::from_integer(f, wd) / hp::sqrt(p);
    PreciseReal v = hp::log(pref) + PreciseReal::from_rational(hp::ratio(r - 1, 2), wd) * lt + z2 / (4 * t) -
                    t * (hp::bernoulli_poly(2, ExactRational(r)) / 4);
    out.value = real(v) + log_truncated(qseries::nsp_phi2_coeffs_exact(r, J), 2, t);
    out.omitted_order = 2.0 * J + 2;
    return out;
  }
  const auto g = qseries::expand_finite_product(r - 1, h, k, J, wd);
  out.value = euler_log_main(h, k, t, wd) + log_truncated(g.coeffs(), J + 1, 1, t);
  // g vanishes to order ⌊(r-1)/k⌋ at the root of unity, which the log divides out.
  out.omitted_order = static_cast<double>(J + 1 - (r - 1) / k);
  return out;
}

ClosedExpansion closed_plane(long k, const PreciseReal& t, int M) {
  const int wd = t.digits();
  if (M < 1) throw InvalidArgument("closed_log_f: planestrict needs at least one term");
  const PreciseReal p = hp::pi(wd);
  const PreciseReal z3 = hp::zeta(ExactRational(3), wd);
  const PreciseReal zp = hp::zeta_prime_minus1(wd);
  const PreciseReal l2 = hp::log2(wd);
  const PreciseReal lt = hp::log(t);
  ClosedExpansion out;
  out.known_tail = PreciseComplex(wd);
  out.omitted_order = 2.0 * M;
  PreciseReal v(wd);
  qseries::PlaneVariant variant;
  if (k == 1) {
    v = zp / 2 - l2 / 4 + lt / 24 + z3 / (2 * t * t) + p * p / (24 * t) + t / 48;
    variant = qseries::PlaneVariant::principal;
  } else {
    v = l2 / 24 + zp + lt / 12 + z3 / (16 * t * t) - p * p / (48 * t) + t / 48;
    variant = qseries::PlaneVariant::alternating;
  }
  out.value = real(v) + log_truncated(qseries::plane_correction_coeffs_exact(M - 1, variant), 2, t);
  return out;
}

ClosedExpansion closed_prings(long k, const PreciseReal& t) {
  const int wd = t.digits();
  const PringsConstants c = prings_constants(wd);
  const PreciseReal& a = k == 1 ? c.a : c.a2;
  const PreciseReal& b = k == 1 ? c.b : c.b2;
  ClosedExpansion out;
  out.known_tail = PreciseComplex(wd);
  out.value = real(hp::log(2 * hp::pi(wd)) * 3 / 4 - hp::log(t) / 4 + a / t + b / hp::sqrt(t));
  return out;
}

ClosedExpansion closed_concave(const PreciseReal& t, int K) {
  const int wd = t.digits();
  if (K < 1) throw InvalidArgument("closed_log_f: concave needs at least one term");
  const PreciseReal p = hp::pi(wd);
  const PreciseReal root = hp::sqrt(2 * p);
  PreciseReal v = hp::log(t / (4 * p)) + root / 2 * hp::zeta(ExactRational(3, 2), wd) / hp::sqrt(t);
  PreciseReal series(wd);
  PreciseReal power = hp::sqrt(t);
  hp::BigCount denom = 1;  // 8^k (k+1)!
  for (int j = 0; j < K; ++j) {
    denom *= (j == 0 ? 1 : 8 * (j + 1));
    series += hp::zeta(ExactRational(1, 2) - j, wd) * power / PreciseReal::from_integer(denom, wd);
    power *= t;
  }
  ClosedExpansion out;
  out.known_tail = PreciseComplex(wd);
  out.value = real(v + root / 16 * series);
  out.omitted_order = K + 0.5;
  return out;
}

ClosedExpansion closed_euler_product(Family f, long h, long k, const PreciseReal& t) {
  const int wd = t.digits();
  ClosedExpansion out;
  out.value = PreciseComplex(wd);
  out.known_tail = PreciseComplex(wd);
  for (const auto& [m, e] : euler_factors(f)) {
    const Reduced r = reduce(h, k, m);
    const PreciseReal tm = t * m;
    PreciseComplex main = euler_log_main(r.h, r.k, tm, wd);
    PreciseComplex tail = euler_log_tail(r.h, r.k, tm, wd);
    main *= PreciseReal::from_long(e, wd);
    tail *= PreciseReal::from_long(e, wd);
    out.value += main;
    out.known_tail += tail;
  }
  return out;
}

// Imaginary parts of logs agree only mod 2π.
PreciseReal residual_abs(PreciseComplex d) {
  const PreciseReal two_pi = 2 * hp::pi(d.digits());
  d.im -= two_pi * hp::floor(d.im / two_pi + PreciseReal::from_rational(ExactRational(1, 2), d.digits()));
  return hp::abs(d);
}

}  // namespace

PreciseComplex euler_log_main(long h, long k, const PreciseReal& t, int digits) {
  const int wd = digits + kGuardDigits;
  const PreciseReal tw = t.with_digits(wd);
  const PreciseReal p = hp::pi(wd);
  const PreciseReal re = hp::log(tw * k / (2 * p)) / 2 + p * p / (6 * k * k * tw) - tw / 24;
  const ExactRational s = k == 1 ? ExactRational(0) : dedekind::dedekind_sum_fast(h, k);
  const PreciseReal im = p * s;
  return {re.with_digits(digits), im.with_digits(digits)};
}

PreciseComplex euler_log_tail(long h, long k, const PreciseReal& t, int digits) {
  const int wd = digits + kGuardDigits;
  const PreciseReal p = hp::pi(wd);
  const PreciseReal big_t = 4 * p * p / (t.with_digits(wd) * (k * k));
  // Below every digit we carry: log F(q) ≈ q.
  if (big_t.to_double() > (digits + 5) * std::log(10.0)) return PreciseComplex(digits);
  const long h_inv = k == 1 ? 0 : dedekind::inverse_mod(h, k);
  const PreciseComplex z = qseries::direct_log_euler(h_inv, k, big_t, wd);
  return {z.re.with_digits(digits), z.im.with_digits(digits)};
}

ClosedExpansion closed_log_f(const FamilySpec& family, long h, long k, const PreciseReal& t, int terms,
                             int digits) {
  dedekind::SingularPoint::make(h, k);
  if (t.sign() <= 0) throw InvalidArgument("closed_log_f: t must be positive");
  const PreciseReal tw = t.with_digits(digits + kGuardDigits);
  ClosedExpansion out;
  switch (family.family) {
    case Family::nsp:
      out = closed_nsp(family.r, h, k, tw, terms);
      break;
    case Family::basic:
      if (k % 2 == 0) throw InvalidArgument("closed_log_f: basic has no growing term at even k");
      out = closed_euler_product(family.family, h, k, tw);
      break;
    case Family::colored3:
      if (k > 7) throw InvalidArgument("closed_log_f: colored3 is implemented for k <= 7");
      out = closed_euler_product(family.family, h, k, tw);
      break;
    case Family::planestrict:
      if (k > 2) throw InvalidArgument("closed_log_f: planestrict is implemented for k <= 2");
      out = closed_plane(k, tw, terms);
      break;
    case Family::prings:
      if (k > 2) throw InvalidArgument("closed_log_f: prings is implemented for k <= 2");
      out = closed_prings(k, tw);
      break;
    case Family::concave:
      if (k != 1) throw InvalidArgument("closed_log_f: concave is implemented at the principal point only");
      out = closed_concave(tw, terms);
      break;
  }
  out.value = PreciseComplex(out.value.re.with_digits(digits), out.value.im.with_digits(digits));
  out.known_tail = PreciseComplex(out.known_tail.re.with_digits(digits), out.known_tail.im.with_digits(digits));
  return out;
}

std::vector<dedekind::SingularPoint> expansion_points(const FamilySpec& family, long kmax) {
  long top = 1;
  long stride = 1;
  switch (family.family) {
    case Family::nsp:
      top = kmax;
      break;
    case Family::basic:
      top = kmax;
      stride = 2;
      break;
    case Family::colored3:
      top = std::min<long>(kmax, 7);
      break;
    case Family::planestrict:
    case Family::prings:
      top = std::min<long>(kmax, 2);
      break;
    case Family::concave:
      top = 1;
      break;
  }
  std::vector<dedekind::SingularPoint> points{dedekind::SingularPoint::principal()};
  for (long k = 2; k <= top; ++k) {
    if (stride == 2 && k % 2 == 0) continue;
    for (long h : dedekind::coprime_residues(k)) {
      if (2 * h <= k) points.push_back({h, k});
    }
  }
  return points;
}

ConsistencyFit expansion_consistency(const FamilySpec& family, long h, long k, int terms,
                                     const std::vector<double>& ts, int digits) {
  if (ts.size() < 2) throw InvalidArgument("expansion_consistency: need at least two values of t");
  ConsistencyFit fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double tv : ts) {
    const PreciseReal t = PreciseReal::from_double(tv, digits);
    const PreciseComplex direct = qseries::direct_log_f(family, h, k, t, digits);
    const ClosedExpansion closed = closed_log_f(family, h, k, t, terms, digits);
    fit.omitted_order = closed.omitted_order;
    PreciseReal res = residual_abs(direct - closed.value - closed.known_tail);
    const double x = std::log(tv);
    // Floor at the working precision so exact agreement does not produce log 0.
    const double y = res.is_zero() ? -digits * std::log(10.0)
                                   : std::max(hp::log(res).to_double(), -digits * std::log(10.0));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    fit.samples.push_back({tv, std::move(res)});
  }
  const double n = static_cast<double>(ts.size());
  fit.fitted_order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return fit;
}

}  // namespace partasym::asymptotics
