#include "partasym/hp/special.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "partasym/errors.hpp"
#include "partasym/hp/bernoulli.hpp"

namespace partasym::hp {

namespace {

constexpr int kGuardDigits = 12;
constexpr long kExactFactorialLimit = 1000;

bool is_nonpositive_integer(const PreciseReal& x) { return x.is_integer() && x.sign() <= 0; }

// ln Γ(y) for y ≥ ~digits via the Stirling series.
PreciseReal log_gamma_stirling(const PreciseReal& y) {
  const int d = y.digits();
  const PreciseReal eps = pow(PreciseReal::from_long(10, d), -static_cast<long>(d) - 5);
  PreciseReal acc = (y - ExactRational(1, 2)) * log(y) - y + log(2 * pi(d)) / 2;
  const PreciseReal inv_y2 = 1 / (y * y);
  PreciseReal y_pow = 1 / y;  // y^{-(2m-1)}
  for (int m = 1; m < 4 * d + 40; ++m) {
    const ExactRational coef = bernoulli_number(2 * m) / ExactRational(2 * m * (2 * m - 1));
    const PreciseReal term = y_pow * coef;
    acc += term;
    if (abs(term) < eps) break;
    y_pow *= inv_y2;
  }
  return acc;
}

PreciseReal gamma_positive(const PreciseReal& x) {
  const int d = x.digits();
  if (x.is_integer() && x <= kExactFactorialLimit) {
    BigCount f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(x.to_long() - 1));
    return PreciseReal::from_integer(f, d);
  }
  const long shift = std::max<long>(0, static_cast<long>(std::ceil(d - x.to_double())));
  PreciseReal y = x + shift;
  PreciseReal denom = PreciseReal::from_long(1, d);
  for (long i = 0; i < shift; ++i) denom *= (x + i);
  return exp(log_gamma_stirling(y)) / denom;
}

}  // namespace

PreciseReal gamma(const PreciseReal& x) {
  if (is_nonpositive_integer(x)) {
    throw PoleError("Γ has a pole at " + x.to_fixed(0));
  }
  const int d = x.digits();
  const PreciseReal xw = x.with_digits(d + kGuardDigits);
  PreciseReal result(d + kGuardDigits);
  if (xw * 2 < 1) {
    // Γ(x) Γ(1-x) = π / sin(πx)
    const PreciseReal pw = pi(xw.digits());
    result = pw / (sin(pw * xw) * gamma_positive(1 - xw));
  } else {
    result = gamma_positive(xw);
  }
  return result.with_digits(d);
}

PreciseReal gamma(const ExactRational& x_in, int digits) {
  ExactRational x = x_in;
  x.canonicalize();
  if (x.get_den() == 1 && x <= 0) {
    throw PoleError("Γ has a pole at " + x.get_str());
  }
  return gamma(PreciseReal::from_rational(x, digits));
}

PreciseReal reciprocal_gamma(const PreciseReal& x) {
  if (is_nonpositive_integer(x)) return PreciseReal(x.digits());
  return 1 / gamma(x);
}

PreciseReal reciprocal_gamma(const ExactRational& x_in, int digits) {
  ExactRational x = x_in;
  x.canonicalize();
  if (x.get_den() == 1 && x <= 0) return PreciseReal(digits);
  return 1 / gamma(PreciseReal::from_rational(x, digits));
}

PreciseReal bessel_i(const PreciseReal& order, const PreciseReal& z, int digits) {
  if (z.sign() < 0) {
    throw InvalidArgument("bessel_i: negative argument " + z.to_scientific(8));
  }
  const int wd = digits + kGuardDigits;
  const PreciseReal nu = order.with_digits(wd);
  if (z.is_zero()) {
    if (nu.is_zero()) return PreciseReal::from_long(1, digits);
    if (nu.sign() > 0 || nu.is_integer()) return PreciseReal(digits);
    throw PoleError("bessel_i: I_ν(0) is infinite for negative non-integer ν");
  }

  // First index whose 1/Γ(ν+m+1) is nonzero.
  long m0 = 0;
  if (is_nonpositive_integer(nu + 1)) m0 = -(nu + 1).to_long() + 1;

  const PreciseReal x = z.with_digits(wd) / 2;
  const PreciseReal x2 = x * x;
  const PreciseReal first_power = nu + 2 * m0;
  BigCount m0_fact;
  mpz_fac_ui(m0_fact.get_mpz_t(), static_cast<unsigned long>(m0));
  PreciseReal term = exp(first_power * log(x)) * reciprocal_gamma(nu + m0 + 1) /
                     PreciseReal::from_integer(m0_fact, wd);

  const PreciseReal eps = pow(PreciseReal::from_long(10, wd), -static_cast<long>(digits) - 10);
  PreciseReal sum = term;
  PreciseReal running_max = abs(term);
  for (long m = m0;; ++m) {
    const PreciseReal denom = (nu + (m + 1)) * (m + 1);
    term *= x2;
    term /= denom;
    sum += term;
    const PreciseReal mag = abs(term);
    if (mag > running_max) running_max = mag;
    // Past the peak, terms fall monotonically once (m+1)(ν+m+1) > (z/2)².
    if (denom > x2 && mag <= running_max * eps) break;
    if (m > 100000 + 10 * static_cast<long>(x2.to_double())) {
      throw NumericalError("bessel_i: ascending series did not converge");
    }
  }
  return sum.with_digits(digits);
}

PreciseReal bessel_i(const ExactRational& order, const PreciseReal& z, int digits) {
  return bessel_i(PreciseReal::from_rational(order, digits + kGuardDigits), z, digits);
}

PreciseReal bessel_i_asymptotic(const PreciseReal& order, const PreciseReal& z, int terms) {
  const int d = z.digits();
  const PreciseReal mu = 4 * order * order;
  const PreciseReal eight_z = 8 * z;
  PreciseReal term = PreciseReal::from_long(1, d);
  PreciseReal sum = term;
  for (int k = 1; k < terms; ++k) {
    term *= (mu - (2 * k - 1) * (2 * k - 1));
    term /= (eight_z * k);
    term = -term;
    sum += term;
    if (term.is_zero()) break;
  }
  return exp(z) / sqrt(2 * pi(d) * z) * sum;
}

}  // namespace partasym::hp
