#include "partasym/qseries/power_series.hpp"

#include <algorithm>
#include <string>

#include "partasym/errors.hpp"

namespace partasym::qseries {

namespace {

void check_grading(const PowerSeries& a, const PowerSeries& b) {
  if (a.grading() != b.grading()) {
    throw InvalidArgument("power series grading mismatch: " + std::to_string(a.grading()) + " vs " +
                          std::to_string(b.grading()));
  }
}

}  // namespace

PowerSeries::PowerSeries(int order, int grading, int digits) : grading_(grading), digits_(digits) {
  if (order < 0) throw InvalidArgument("power series order must be >= 0");
  if (grading != 1 && grading != 2) throw InvalidArgument("power series grading must be 1 or 2");
  coeffs_.assign(static_cast<size_t>(order), PreciseComplex(digits));
}

PowerSeries PowerSeries::one(int order, int grading, int digits) {
  PowerSeries s(order, grading, digits);
  if (order > 0) s.set(0, PreciseReal::from_long(1, digits));
  return s;
}

PowerSeries PowerSeries::from_real(const std::vector<PreciseReal>& coeffs, int grading, int digits) {
  PowerSeries s(static_cast<int>(coeffs.size()), grading, digits);
  for (size_t i = 0; i < coeffs.size(); ++i) s.set(static_cast<int>(i), coeffs[i]);
  return s;
}

PowerSeries PowerSeries::from_rational(const std::vector<ExactRational>& coeffs, int grading, int digits) {
  PowerSeries s(static_cast<int>(coeffs.size()), grading, digits);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    s.set(static_cast<int>(i), PreciseReal::from_rational(coeffs[i], digits));
  }
  return s;
}

const PreciseComplex& PowerSeries::operator[](int i) const { return coeff(i); }

const PreciseComplex& PowerSeries::coeff(int i) const {
  if (i < 0 || i >= order()) {
    throw InvalidArgument("coefficient index " + std::to_string(i) + " outside truncation order " +
                          std::to_string(order()));
  }
  return coeffs_[static_cast<size_t>(i)];
}

void PowerSeries::set(int i, const PreciseComplex& value) {
  coeff(i);
  coeffs_[static_cast<size_t>(i)] = PreciseComplex(value.re.with_digits(digits_), value.im.with_digits(digits_));
}

void PowerSeries::set(int i, const PreciseReal& value) {
  set(i, PreciseComplex(value, PreciseReal(digits_)));
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
  check_grading(a, b);
  PowerSeries out(std::min(a.order(), b.order()), a.grading(), std::max(a.digits(), b.digits()));
  for (int i = 0; i < out.order(); ++i) out.set(i, a[i] + b[i]);
  return out;
}

PowerSeries sub(const PowerSeries& a, const PowerSeries& b) {
  check_grading(a, b);
  PowerSeries out(std::min(a.order(), b.order()), a.grading(), std::max(a.digits(), b.digits()));
  for (int i = 0; i < out.order(); ++i) out.set(i, a[i] - b[i]);
  return out;
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
  check_grading(a, b);
  const int d = std::max(a.digits(), b.digits());
  PowerSeries out(std::min(a.order(), b.order()), a.grading(), d);
  for (int n = 0; n < out.order(); ++n) {
    PreciseComplex acc(d);
    for (int k = 0; k <= n; ++k) acc += a[k] * b[n - k];
    out.set(n, acc);
  }
  return out;
}

PowerSeries scale(const PowerSeries& a, const PreciseComplex& c) {
  PowerSeries out(a.order(), a.grading(), a.digits());
  for (int i = 0; i < a.order(); ++i) out.set(i, a[i] * c);
  return out;
}

PowerSeries scale(const PowerSeries& a, const PreciseReal& c) {
  PowerSeries out(a.order(), a.grading(), a.digits());
  for (int i = 0; i < a.order(); ++i) out.set(i, a[i] * c);
  return out;
}

PowerSeries truncate(const PowerSeries& a, int order) {
  if (order > a.order()) {
    throw InvalidArgument("cannot extend truncation order " + std::to_string(a.order()) + " to " +
                          std::to_string(order));
  }
  PowerSeries out(order, a.grading(), a.digits());
  for (int i = 0; i < order; ++i) out.set(i, a[i]);
  return out;
}

PowerSeries series_exp(const PowerSeries& s) {
  if (s.order() == 0) return s;
  if (!s[0].re.is_zero() || !s[0].im.is_zero()) {
    throw InvalidArgument("series_exp: constant term must be zero");
  }
  const int d = s.digits();
  PowerSeries e = PowerSeries::one(s.order(), s.grading(), d);
  for (int n = 1; n < s.order(); ++n) {
    PreciseComplex acc(d);
    for (int k = 1; k <= n; ++k) acc += (s[k] * e[n - k]) * PreciseReal::from_long(k, d);
    acc /= n;
    e.set(n, acc);
  }
  return e;
}

PowerSeries series_log(const PowerSeries& s) {
  if (s.order() == 0) return s;
  if (!(s[0].re == 1) || !s[0].im.is_zero()) {
    throw InvalidArgument("series_log: constant term must be 1");
  }
  const int d = s.digits();
  PowerSeries l(s.order(), s.grading(), d);
  for (int n = 1; n < s.order(); ++n) {
    PreciseComplex acc = s[n] * PreciseReal::from_long(n, d);
    for (int k = 1; k < n; ++k) acc -= (l[k] * s[n - k]) * PreciseReal::from_long(k, d);
    acc /= n;
    l.set(n, acc);
  }
  return l;
}

std::vector<ExactRational> series_exp_exact(const std::vector<ExactRational>& s) {
  if (s.empty()) return {};
  if (s[0] != 0) throw InvalidArgument("series_exp_exact: constant term must be zero");
  std::vector<ExactRational> e(s.size());
  e[0] = 1;
  for (size_t n = 1; n < s.size(); ++n) {
    ExactRational acc = 0;
    for (size_t k = 1; k <= n; ++k) {
      if (s[k] != 0) acc += ExactRational(static_cast<long>(k)) * s[k] * e[n - k];
    }
    acc /= ExactRational(static_cast<long>(n));
    acc.canonicalize();
    e[n] = acc;
  }
  return e;
}

}  // namespace partasym::qseries
