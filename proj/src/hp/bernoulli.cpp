#include "partasym/hp/bernoulli.hpp"

#include <mutex>
#include <string>
#include <vector>

#include "partasym/errors.hpp"

namespace partasym::hp {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<ExactRational> g_bernoulli{ExactRational(1), ExactRational(-1, 2)};

}  // namespace

BigCount binomial(long n, long k) {
  if (n < 0) throw InvalidArgument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  BigCount r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

ExactRational bernoulli_number(int m) {
  if (m < 0) throw InvalidArgument("bernoulli_number: negative index " + std::to_string(m));
  if (m > 1 && m % 2 == 1) return 0;
  std::lock_guard lock(g_bernoulli_mutex);
  // Σ_{k=0}^{n} binom(n+1, k) B_k = 0
  for (int n = static_cast<int>(g_bernoulli.size()); n <= m; ++n) {
    if (n % 2 == 1) {
      g_bernoulli.emplace_back(0);
      continue;
    }
    ExactRational acc = 0;
    for (int k = 0; k < n; ++k) {
      if (k > 1 && k % 2 == 1) continue;
      acc += ExactRational(binomial(n + 1, k)) * g_bernoulli[k];
    }
    ExactRational b = -acc / (n + 1);
    b.canonicalize();
    g_bernoulli.push_back(b);
  }
  return g_bernoulli[m];
}

ExactRational bernoulli_poly(int m, const ExactRational& x) {
  if (m < 0) throw InvalidArgument("bernoulli_poly: negative degree");
  // Horner in x over the coefficients binom(m,k) B_k, highest power first.
  ExactRational acc = 0;
  for (int k = 0; k <= m; ++k) {
    acc = acc * x + ExactRational(binomial(m, k)) * bernoulli_number(k);
  }
  acc.canonicalize();
  return acc;
}

ExactRational zeta_nonpositive(int m) {
  if (m < 0) throw InvalidArgument("zeta_nonpositive: m must be >= 0");
  ExactRational r = bernoulli_number(m + 1) / (m + 1);
  if (m % 2 == 1) r = -r;
  r.canonicalize();
  return r;
}

}  // namespace partasym::hp
