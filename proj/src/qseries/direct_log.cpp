#include "partasym/qseries/direct_log.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "partasym/errors.hpp"

namespace partasym::qseries {

namespace {

constexpr long kTermBudget = 5'000'000;

// Σ_{N≥1} (x^N / N) Σ_{d|N} d e_d at x = e^{2πih/k - t}.
template <typename Exponent>
hp::PreciseComplex log_product(Exponent exponent, long h, long k, const hp::PreciseReal& t, int digits) {
  using hp::PreciseReal;
  // Terms fall like N^3 e^{-Nt}; stop once that is below 10^{-digits-10}.
  const double td = t.to_double();
  const double target = (digits + 10) * std::log(10.0);
  long n_max = std::max<long>(8, static_cast<long>((target + 40.0) / td));
  while (n_max < kTermBudget && n_max * td - 3.0 * std::log(static_cast<double>(n_max)) < target) {
    n_max += n_max / 4 + 1;
  }
  if (n_max >= kTermBudget) {
    throw NumericalError("direct_log_f: log-product needs more than " + std::to_string(kTermBudget) +
                         " terms at t = " + t.to_scientific(6));
  }

  // b_N = Σ_{d|N} d e_d, by sieving over d.
  std::vector<long> b(static_cast<size_t>(n_max) + 1, 0);
  for (long d = 1; d <= n_max; ++d) {
    const long e = exponent(d);
    if (e == 0) continue;
    for (long m = d; m <= n_max; m += d) b[m] += d * e;
  }

  const int wd = digits + 10 + static_cast<int>(std::log10(static_cast<double>(n_max)));
  const PreciseReal step = hp::exp(-t.with_digits(wd));
  std::vector<hp::PreciseComplex> phases;
  phases.reserve(static_cast<size_t>(k));
  for (long j = 0; j < k; ++j) phases.push_back(hp::cis_pi(hp::ratio(2 * h * j, k), wd));

  PreciseReal re(wd), im(wd);
  PreciseReal power = PreciseReal::from_long(1, wd);
  for (long n = 1; n <= n_max; ++n) {
    power *= step;
    if (b[n] == 0) continue;
    const PreciseReal coef = power * PreciseReal::from_long(b[n], wd) / n;
    const auto& w = phases[static_cast<size_t>(n % k)];
    re += coef * w.re;
    im += coef * w.im;
  }
  return {re.with_digits(digits), im.with_digits(digits)};
}

void require_point(long h, long k) {
  const bool principal = (h == 0 && k == 1);
  if (!principal && (k < 2 || h < 1 || h >= k || std::gcd(h, k) != 1)) {
    throw InvalidArgument("direct_log_f: need (h,k) = (0,1) or 1 <= h < k coprime");
  }
}

}  // namespace

hp::PreciseComplex direct_log_f(const FamilySpec& family, long h, long k, const hp::PreciseReal& t,
                                int digits) {
  require_point(h, k);
  if (t.sign() <= 0 || t > 1) throw InvalidArgument("direct_log_f: t must lie in (0, 1]");
  return log_product([&](long d) { return family.exponent(d); }, h, k, t, digits);
}

hp::PreciseComplex direct_log_euler(long h, long k, const hp::PreciseReal& t, int digits) {
  require_point(h, k);
  if (t.sign() <= 0) throw InvalidArgument("direct_log_euler: t must be positive");
  return log_product([](long) { return 1L; }, h, k, t, digits);
}

}  // namespace partasym::qseries
