#pragma once

#include "partasym/hp/real.hpp"

namespace partasym::hp {

/// Complex value with equal-precision components.
struct PreciseComplex {
  PreciseReal re;
  PreciseReal im;

  explicit PreciseComplex(int digits = kMinDigits) : re(digits), im(digits) {}
  PreciseComplex(PreciseReal real, PreciseReal imag);
  explicit PreciseComplex(PreciseReal real);

  int digits() const { return re.digits(); }

  PreciseComplex& operator+=(const PreciseComplex& rhs);
  PreciseComplex& operator-=(const PreciseComplex& rhs);
  PreciseComplex& operator*=(const PreciseComplex& rhs);
  PreciseComplex& operator*=(const PreciseReal& rhs);
  PreciseComplex& operator/=(long rhs);

  friend PreciseComplex operator+(PreciseComplex a, const PreciseComplex& b) { return a += b; }
  friend PreciseComplex operator-(PreciseComplex a, const PreciseComplex& b) { return a -= b; }
  friend PreciseComplex operator*(const PreciseComplex& a, const PreciseComplex& b);
  friend PreciseComplex operator*(PreciseComplex a, const PreciseReal& b) { return a *= b; }
  friend PreciseComplex operator*(const PreciseReal& a, PreciseComplex b) { return b *= a; }
  friend PreciseComplex operator/(const PreciseComplex& a, const PreciseComplex& b);
  PreciseComplex operator-() const { return {-re, -im}; }
};

PreciseComplex conj(const PreciseComplex& z);
PreciseReal abs(const PreciseComplex& z);
PreciseReal arg(const PreciseComplex& z);
PreciseComplex exp(const PreciseComplex& z);
/// Principal branch.
PreciseComplex log(const PreciseComplex& z);
/// e^{iπq} for rational q, with q reduced exactly.
PreciseComplex cis_pi(const ExactRational& q, int digits);

}  // namespace partasym::hp
