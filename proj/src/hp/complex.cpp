#include "partasym/hp/complex.hpp"

#include <algorithm>
#include <utility>

namespace partasym::hp {

PreciseComplex::PreciseComplex(PreciseReal real, PreciseReal imag) : re(std::move(real)), im(std::move(imag)) {
  const int d = std::max(re.digits(), im.digits());
  if (re.digits() != d) re = re.with_digits(d);
  if (im.digits() != d) im = im.with_digits(d);
}

PreciseComplex::PreciseComplex(PreciseReal real) : re(std::move(real)), im(re.digits()) {}

PreciseComplex& PreciseComplex::operator+=(const PreciseComplex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

PreciseComplex& PreciseComplex::operator-=(const PreciseComplex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

PreciseComplex& PreciseComplex::operator*=(const PreciseComplex& rhs) {
  *this = *this * rhs;
  return *this;
}

PreciseComplex& PreciseComplex::operator*=(const PreciseReal& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

PreciseComplex& PreciseComplex::operator/=(long rhs) {
  re /= rhs;
  im /= rhs;
  return *this;
}

PreciseComplex operator*(const PreciseComplex& a, const PreciseComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

PreciseComplex operator/(const PreciseComplex& a, const PreciseComplex& b) {
  const PreciseReal den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

PreciseComplex conj(const PreciseComplex& z) { return {z.re, -z.im}; }

PreciseReal abs(const PreciseComplex& z) {
  PreciseReal r(z.digits());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

PreciseReal arg(const PreciseComplex& z) { return atan2(z.im, z.re); }

PreciseComplex exp(const PreciseComplex& z) {
  const PreciseReal m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

PreciseComplex log(const PreciseComplex& z) { return {log(abs(z)), arg(z)}; }

PreciseComplex cis_pi(const ExactRational& q, int digits) {
  return {cos_pi(q, digits), sin_pi(q, digits)};
}

}  // namespace partasym::hp
