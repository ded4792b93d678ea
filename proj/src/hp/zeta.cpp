#include <cmath>
#include <vector>

#include "partasym/errors.hpp"
#include "partasym/hp/bernoulli.hpp"
#include "partasym/hp/special.hpp"

namespace partasym::hp {

namespace {

constexpr int kGuardDigits = 12;

// Borwein's algorithm 2: η(s) = -1/d_n Σ_{k<n} (-1)^k (d_k - d_n)/(k+1)^s with
// d_k = n Σ_{i≤k} (n+i-1)! 4^i / ((n-i)! (2i)!). Error ~ (3+√8)^{-n}.
PreciseReal eta_borwein(const PreciseReal& s) {
  const int d = s.digits();
  const long n = static_cast<long>(std::ceil(1.31 * d)) + 10;
  std::vector<BigCount> dk(n + 1);
  ExactRational term = 1;
  BigCount acc = 0;
  for (long i = 0; i <= n; ++i) {
    acc += term.get_num();
    dk[i] = acc;
    term *= ratio(2 * (n + i) * (n - i), (2 * i + 1) * (i + 1));
    term.canonicalize();
  }
  PreciseReal sum(d);
  for (long k = 0; k < n; ++k) {
    const PreciseReal diff = PreciseReal::from_integer(dk[k] - dk[n], d);
    PreciseReal t = diff * exp(-s * log(PreciseReal::from_long(k + 1, d)));
    if (k % 2 == 1) t = -t;
    sum += t;
  }
  return -sum / PreciseReal::from_integer(dk[n], d);
}

PreciseReal zeta_positive(const PreciseReal& s) {
  return eta_borwein(s) / (1 - exp((1 - s) * log2(s.digits())));
}

}  // namespace

PreciseReal zeta(const ExactRational& s, int digits) {
  if (s == 1) throw PoleError("ζ has a pole at s = 1");
  if (s.get_den() == 1 && s <= 0) {
    return PreciseReal::from_rational(zeta_nonpositive(static_cast<int>(-s.get_num().get_si())), digits);
  }
  const int wd = digits + kGuardDigits;
  if (s > 0) return zeta_positive(PreciseReal::from_rational(s, wd)).with_digits(digits);
  // ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)
  const ExactRational one_minus_s = 1 - s;
  const PreciseReal sw = PreciseReal::from_rational(s, wd);
  const PreciseReal p = pi(wd);
  const PreciseReal result = exp(sw * log2(wd)) * exp((sw - 1) * log(p)) * sin_pi(s / 2, wd) *
                             gamma(one_minus_s, wd) *
                             zeta_positive(PreciseReal::from_rational(one_minus_s, wd));
  return result.with_digits(digits);
}

PreciseReal zeta(const PreciseReal& s) {
  if (s == 1) throw PoleError("ζ has a pole at s = 1");
  const int d = s.digits();
  if (s.is_integer() && s.sign() <= 0) {
    return PreciseReal::from_rational(zeta_nonpositive(static_cast<int>(-s.to_long())), d);
  }
  const PreciseReal sw = s.with_digits(d + kGuardDigits);
  if (sw.sign() > 0) return zeta_positive(sw).with_digits(d);
  const PreciseReal p = pi(sw.digits());
  const PreciseReal result = exp(sw * log2(sw.digits())) * exp((sw - 1) * log(p)) *
                             sin(p * sw / 2) * gamma(1 - sw) * zeta_positive(1 - sw);
  return result.with_digits(d);
}

ZetaWithDerivative zeta_euler_maclaurin(const PreciseReal& s_in) {
  if (s_in == 1) throw PoleError("ζ has a pole at s = 1");
  const int d = s_in.digits();
  const PreciseReal s = s_in.with_digits(d + kGuardDigits);
  const int wd = s.digits();
  const long big_n = wd + 10 + static_cast<long>(std::fabs(s.to_double()));
  const PreciseReal eps = pow(PreciseReal::from_long(10, wd), -static_cast<long>(wd));

  PreciseReal value(wd);
  PreciseReal deriv(wd);
  for (long k = 1; k < big_n; ++k) {
    const PreciseReal lk = log(PreciseReal::from_long(k, wd));
    const PreciseReal ks = exp(-s * lk);
    value += ks;
    deriv -= lk * ks;
  }
  const PreciseReal nn = PreciseReal::from_long(big_n, wd);
  const PreciseReal ln_n = log(nn);
  const PreciseReal n_pow = exp(-s * ln_n);  // N^{-s}
  const PreciseReal tail = nn * n_pow / (s - 1);  // N^{1-s}/(s-1)
  value += tail + n_pow / 2;
  deriv += -ln_n * tail - tail / (s - 1) - ln_n * n_pow / 2;

  // Σ_j B_{2j}/(2j)! · P_j(s) · N^{-s-2j+1}, P_j(s) = s(s+1)…(s+2j-2).
  PreciseReal poly = s;
  PreciseReal poly_d = PreciseReal::from_long(1, wd);
  PreciseReal n_factor = n_pow / nn;  // N^{-s-1}
  const PreciseReal inv_n2 = 1 / (nn * nn);
  BigCount fact = 2;
  for (int j = 1; j < 4 * wd + 40; ++j) {
    const ExactRational coef = bernoulli_number(2 * j) / ExactRational(fact);
    const PreciseReal t = n_factor * coef;
    const PreciseReal term = poly * t;
    value += term;
    deriv += poly_d * t - ln_n * term;
    if (abs(term) < eps * abs(value) && abs(poly_d * t) < eps * (abs(deriv) + 1)) break;
    const PreciseReal a = s + (2 * j - 1);
    const PreciseReal b = s + 2 * j;
    poly_d = poly_d * a * b + poly * (a + b);
    poly = poly * a * b;
    n_factor *= inv_n2;
    fact *= (2 * j + 1) * (2 * j + 2);
  }
  return {value.with_digits(d), deriv.with_digits(d)};
}

PreciseReal zeta_prime_minus1(int digits) {
  const int wd = digits + kGuardDigits;
  const PreciseReal p = pi(wd);
  const PreciseReal zeta_prime_2 = zeta_euler_maclaurin(PreciseReal::from_long(2, wd)).derivative;
  const PreciseReal log_a = (euler_gamma(wd) + log(2 * p)) / 12 - zeta_prime_2 / (2 * p * p);
  return (PreciseReal::from_rational(ExactRational(1, 12), wd) - log_a).with_digits(digits);
}

PreciseReal glaisher_kinkelin(int digits) {
  const int wd = digits + kGuardDigits;
  return exp(PreciseReal::from_rational(ExactRational(1, 12), wd) - zeta_prime_minus1(wd))
      .with_digits(digits);
}

}  // namespace partasym::hp
