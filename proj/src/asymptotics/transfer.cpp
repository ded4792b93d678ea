#include "partasym/asymptotics/transfer.hpp"

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "partasym/errors.hpp"
#include "partasym/hp/special.hpp"

namespace partasym::asymptotics {

namespace {

constexpr int kGuardDigits = 12;
constexpr int kRowLimit = 4000;

// 1/Γ(e) at exact rational e, reusing earlier values through 1/Γ(e) = 1/Γ(e-m) / ((e-m)…(e-1))
// whenever e-m (m ≤ 4) was already evaluated and is not a pole.
class ReciprocalGammaLadder {
 public:
  explicit ReciprocalGammaLadder(int digits) : digits_(digits) {}

  const PreciseReal& at(ExactRational e) {
    e.canonicalize();
    if (auto it = memo_.find(e); it != memo_.end()) return it->second;
    PreciseReal value(digits_);
    if (!(e.get_den() == 1 && e <= 0)) {
      bool done = false;
      for (int m = 1; m <= 4 && !done; ++m) {
        const ExactRational base = e - m;
        const auto it = memo_.find(base);
        if (it == memo_.end() || (base.get_den() == 1 && base <= 0)) continue;
        PreciseReal denom = PreciseReal::from_long(1, digits_);
        for (int i = 0; i < m; ++i) denom = denom * PreciseReal::from_rational(base + i, digits_);
        value = it->second / denom;
        done = true;
      }
      if (!done) value = hp::reciprocal_gamma(e, digits_);
    }
    return memo_.emplace(e, std::move(value)).first->second;
  }

 private:
  int digits_;
  std::map<ExactRational, PreciseReal> memo_;
};

void require_positive_xi(const PreciseReal& xi) {
  if (xi.sign() <= 0) throw InvalidArgument("transfer: ξ must be positive, got " + xi.to_scientific(8));
}

// Powers ξ^{step·i} generated on demand by repeated multiplication.
class PowerLadder {
 public:
  PowerLadder(const PreciseReal& base, int digits) : base_(base), powers_{PreciseReal::from_long(1, digits)} {}
  const PreciseReal& at(size_t i) {
    while (powers_.size() <= i) powers_.push_back(powers_.back() * base_);
    return powers_[i];
  }

 private:
  PreciseReal base_;
  std::vector<PreciseReal> powers_;
};

struct DoubleSumState {
  DoubleSumState(const ExactRational& t_power, const ExactRational& p, const PreciseReal& a,
                 const ExactRational& q, const PreciseReal& b, const PreciseReal& xi, int wd)
      : t_power(t_power), p(p), q(q), a(a.with_digits(wd)), b(b.with_digits(wd)), xi(xi.with_digits(wd)),
        wd(wd), rgamma(wd),
        xi_p(hp::pow(this->xi, p), wd), xi_q(hp::pow(this->xi, q), wd),
        base(hp::pow(this->xi, ExactRational(-t_power - 1))) {}

  // a^j/j! · ξ^{pj}, grown on demand.
  const PreciseReal& row_factor(int j) {
    while (static_cast<int>(row.size()) <= j) {
      const int i = static_cast<int>(row.size());
      row.push_back(i == 0 ? PreciseReal::from_long(1, wd) : row.back() * a * xi_p.at(1) / i);
    }
    return row[static_cast<size_t>(j)];
  }

  PreciseReal term(int j, int k, const PreciseReal& col) {
    const ExactRational e = p * j + q * k - t_power;
    const PreciseReal& rg = rgamma.at(e);
    if (rg.is_zero()) return PreciseReal(wd);
    return row_factor(j) * col * rg;
  }

  ExactRational t_power, p, q;
  PreciseReal a, b, xi;
  int wd;
  ReciprocalGammaLadder rgamma;
  PowerLadder xi_p, xi_q;
  PreciseReal base;  // ξ^{-t_power-1}
  std::vector<PreciseReal> row;
};

}  // namespace

PreciseReal transfer_single(const ExactRational& a, const PreciseReal& c, const PreciseReal& xi, int digits) {
  require_positive_xi(xi);
  if (c.sign() <= 0) throw InvalidArgument("transfer_single: c must be positive");
  const int wd = digits + kGuardDigits;
  const PreciseReal cw = c.with_digits(wd);
  const PreciseReal xw = xi.with_digits(wd);
  const PreciseReal z = 2 * hp::sqrt(cw * xw);
  const PreciseReal pref = hp::pow(cw / xw, ExactRational((1 + a) / 2));
  return (pref * hp::bessel_i(ExactRational(-1 - a), z, wd)).with_digits(digits);
}

PreciseReal transfer_double(const ExactRational& t_power, const ExactRational& p, const PreciseReal& a,
                            const ExactRational& q, const PreciseReal& b, const PreciseReal& xi, int J,
                            int K, int digits) {
  require_positive_xi(xi);
  if (p <= 0 || q <= 0) throw InvalidArgument("transfer_double: p and q must be positive");
  if (J < 0 || K < 0) throw InvalidArgument("transfer_double: J and K must be >= 0");
  const int wd = digits + kGuardDigits;
  DoubleSumState st(t_power, p, a, q, b, xi, wd);
  PreciseReal sum(wd);
  PreciseReal col = PreciseReal::from_long(1, wd);  // b^k/k! · ξ^{qk}
  for (int k = 0; k <= K; ++k) {
    if (k > 0) col = col * st.b * st.xi_q.at(1) / k;
    if (col.is_zero()) break;
    for (int j = 0; j <= J; ++j) sum += st.term(j, k, col);
  }
  return (sum * st.base).with_digits(digits);
}

DoubleSumResult transfer_double_adaptive(const ExactRational& t_power, const ExactRational& p,
                                         const PreciseReal& a, const ExactRational& q, const PreciseReal& b,
                                         const PreciseReal& xi, int digits) {
  require_positive_xi(xi);
  if (p <= 0 || q <= 0) throw InvalidArgument("transfer_double: p and q must be positive");
  // Cancellation can eat digits; run wider and widen again if the largest term demands it.
  int extra = 20;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const int wd = digits + kGuardDigits + extra;
    DoubleSumState st(t_power, p, a, q, b, xi, wd);
    const PreciseReal eps = hp::pow(PreciseReal::from_long(10, wd), -static_cast<long>(digits) - 10);
    PreciseReal sum(wd);
    PreciseReal global_max(wd);
    PreciseReal col = PreciseReal::from_long(1, wd);
    DoubleSumResult out{PreciseReal(digits)};
    int quiet_rows = 0;
    for (int k = 0; k < kRowLimit; ++k) {
      if (k > 0) col = col * st.b * st.xi_q.at(1) / k;
      if (col.is_zero()) break;
      PreciseReal row_max(wd);
      PreciseReal prev(wd);
      for (int j = 0;; ++j) {
        if (j > kRowLimit) throw NumericalError("transfer_double: row did not converge");
        const PreciseReal t = st.term(j, k, col);
        sum += t;
        const PreciseReal m = hp::abs(t);
        if (m > row_max) row_max = m;
        if (m > global_max) global_max = m;
        out.j_used = std::max(out.j_used, j);
        // Once the Γ argument is positive, terms in j fall like 1/Γ; stop past the peak
        // once negligible. Pole zeros say nothing about the tail and are skipped.
        if (m.is_zero() || st.p * j + st.q * k - st.t_power <= 0) continue;
        if (!prev.is_zero() && m <= prev && m <= global_max * eps) break;
        prev = m;
      }
      out.k_used = k + 1;
      if (row_max <= global_max * eps) {
        if (++quiet_rows >= 3) break;
      } else {
        quiet_rows = 0;
      }
    }
    const PreciseReal value = sum * st.base;
    const PreciseReal max_term = global_max * hp::abs(st.base);
    out.cancellation_digits =
        value.is_zero() ? 0.0 : std::max(0.0, static_cast<double>(max_term.decimal_exponent() - value.decimal_exponent()));
    if (out.cancellation_digits + 5 <= extra) {
      out.value = value.with_digits(digits);
      return out;
    }
    extra = static_cast<int>(out.cancellation_digits) + 20;
  }
  throw NumericalError("transfer_double: cancellation exceeds working precision");
}

}  // namespace partasym::asymptotics
