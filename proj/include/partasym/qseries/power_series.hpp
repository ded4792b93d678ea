#pragma once

#include <vector>

#include "partasym/hp/complex.hpp"

namespace partasym::qseries {

using hp::ExactRational;
using hp::PreciseComplex;
using hp::PreciseReal;

/// Truncated power series Σ_{i<order} a_i t^{i/grading} with grading 1 (integer powers) or
/// 2 (half-integer powers). Coefficients at or beyond `order` are unknown, never zero-filled
/// on output; every coefficient carries the series precision.
class PowerSeries {
 public:
  PowerSeries(int order, int grading, int digits);

  static PowerSeries zero(int order, int grading, int digits) { return {order, grading, digits}; }
  static PowerSeries one(int order, int grading, int digits);
  static PowerSeries from_real(const std::vector<PreciseReal>& coeffs, int grading, int digits);
  static PowerSeries from_rational(const std::vector<ExactRational>& coeffs, int grading, int digits);

  int order() const { return static_cast<int>(coeffs_.size()); }
  int grading() const { return grading_; }
  int digits() const { return digits_; }

  const PreciseComplex& operator[](int i) const;
  /// Coefficient of t^{i/grading}; throws InvalidArgument at or beyond the order.
  const PreciseComplex& coeff(int i) const;
  void set(int i, const PreciseComplex& value);
  void set(int i, const PreciseReal& value);

  const std::vector<PreciseComplex>& coeffs() const { return coeffs_; }

 private:
  int grading_;
  int digits_;
  std::vector<PreciseComplex> coeffs_;
};

PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries sub(const PowerSeries& a, const PowerSeries& b);
/// Cauchy product truncated to the smaller order.
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries scale(const PowerSeries& a, const PreciseComplex& c);
PowerSeries scale(const PowerSeries& a, const PreciseReal& c);
/// Drops coefficients from `order` on; throws if order exceeds the current order.
PowerSeries truncate(const PowerSeries& a, int order);

/// exp(S) for S with zero constant term, by n E_n = Σ_{k=1}^{n} k S_k E_{n-k} (E' = S'E).
PowerSeries series_exp(const PowerSeries& s);
/// log(S) for S with constant term 1, by n L_n = n S_n - Σ_{k=1}^{n-1} k L_k S_{n-k}.
PowerSeries series_log(const PowerSeries& s);

/// Exact counterparts over rationals (grading-agnostic index arithmetic).
std::vector<ExactRational> series_exp_exact(const std::vector<ExactRational>& s);

}  // namespace partasym::qseries
