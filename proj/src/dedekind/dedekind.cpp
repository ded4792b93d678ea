#include "partasym/dedekind.hpp"

#include <numeric>
#include <string>

#include "partasym/errors.hpp"
#include "partasym/hp/complex.hpp"

namespace partasym::dedekind {

namespace {

long mod(long a, long k) {
  const long r = a % k;
  return r < 0 ? r + k : r;
}

void require_positive(long k, const char* what) {
  if (k < 1) throw InvalidArgument(std::string(what) + ": k must be positive, got " + std::to_string(k));
}

}  // namespace

SingularPoint SingularPoint::make(long h, long k) {
  require_positive(k, "SingularPoint");
  if (h < 0 || h >= k) throw InvalidArgument("SingularPoint: h out of [0,k)");
  if (std::gcd(h, k) != 1) throw InvalidArgument("SingularPoint: gcd(h,k) != 1");
  return {h, k};
}

ExactRational sawtooth(const ExactRational& x) {
  if (x.get_den() == 1) return 0;
  hp::BigCount fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  ExactRational r = x - ExactRational(fl) - ExactRational(1, 2);
  r.canonicalize();
  return r;
}

ExactRational dedekind_sum(long h, long k) {
  require_positive(k, "dedekind_sum");
  h = mod(h, k);
  ExactRational acc = 0;
  for (long j = 1; j < k; ++j) {
    acc += sawtooth(hp::ratio(j * h, k)) * sawtooth(hp::ratio(j, k));
  }
  acc.canonicalize();
  return acc;
}

ExactRational dedekind_sum_fast(long h, long k) {
  require_positive(k, "dedekind_sum_fast");
  h = mod(h, k);
  const long g = std::gcd(h, k);
  if (h == 0) return 0;
  h /= g;
  k /= g;
  // s(h,k) + s(k,h) = -1/4 + (h/k + k/h + 1/(hk))/12 for coprime h, k.
  ExactRational acc = 0;
  int sign = 1;
  while (h > 0) {
    const ExactRational hq(h), kq(k);
    acc += sign * (ExactRational(-1, 4) + (hq / kq + kq / hq + 1 / (hq * kq)) / 12);
    sign = -sign;
    const long next_h = k % h;
    k = h;
    h = next_h;
  }
  acc.canonicalize();
  return acc;
}

ExactRational t_sum(long h, long k) {
  require_positive(k, "t_sum");
  if (k % 2 == 0) throw InvalidArgument("t_sum: k must be odd, got " + std::to_string(k));
  ExactRational r = 2 * dedekind_sum_fast(h, k) - dedekind_sum_fast(mod(2 * h, k), k);
  r.canonicalize();
  return r;
}

PreciseReal a_tilde(long k, long n, int digits) {
  require_positive(k, "a_tilde");
  if (k % 2 == 0) throw InvalidArgument("a_tilde: k must be odd, got " + std::to_string(k));
  const int wd = digits + 10;
  std::vector<long> hs = coprime_residues(k);
  if (k == 1) hs = {0};
  hp::PreciseComplex acc{PreciseReal(wd), PreciseReal(wd)};
  for (long h : hs) {
    // Phase reduced exactly: T(h,k) - 2 n h / k, with nh taken mod k first.
    const ExactRational phase = t_sum(h, k) - hp::ratio(2 * mod(n % k * h, k), k);
    acc += hp::cis_pi(phase, wd);
  }
  const PreciseReal tol = hp::pow(PreciseReal::from_long(10, wd), -static_cast<long>(digits) + 5);
  if (abs(acc.im) > tol) {
    throw NumericalError("a_tilde: imaginary part " + acc.im.to_scientific(6) + " does not vanish");
  }
  return acc.re.with_digits(digits);
}

std::vector<long> coprime_residues(long k) {
  require_positive(k, "coprime_residues");
  std::vector<long> out;
  for (long h = 1; h < k; ++h) {
    if (std::gcd(h, k) == 1) out.push_back(h);
  }
  return out;
}

long inverse_mod(long h, long k) {
  require_positive(k, "inverse_mod");
  if (std::gcd(mod(h, k), k) != 1) throw InvalidArgument("inverse_mod: gcd(h,k) != 1");
  if (k == 1) return 0;
  // Extended Euclid for h x ≡ 1, then negate.
  long old_r = mod(h, k), r = k, old_s = 1, s = 0;
  while (r != 0) {
    const long q = old_r / r;
    long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return mod(-old_s, k);
}

}  // namespace partasym::dedekind
