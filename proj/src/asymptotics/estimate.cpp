#include "partasym/asymptotics/estimate.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <string>

#include "partasym/asymptotics/phi.hpp"
#include "partasym/errors.hpp"

namespace partasym::asymptotics {

namespace {

constexpr int kProbeDigits = 20;
constexpr int kExtraDigits = 30;
constexpr int kDoubleRunExtra = 20;

using TermFn = std::function<PreciseReal(int digits)>;

struct Job {
  long k;
  TermFn fn;
};

std::vector<Job> jobs_for(const FamilySpec& family, long n, const EstimateConfig& c) {
  std::vector<Job> jobs;
  const int J = c.terms;
  switch (family.family) {
    case Family::nsp:
      for (long k = 1; k <= c.kmax; ++k) {
        const int r = family.r;
        if (k == 1) {
          jobs.push_back({k, [=](int d) { return nsp_phi1(r, n, J, d); }});
        } else if (k == 2 && r % 2 == 0) {
          jobs.push_back({k, [=](int d) { return nsp_phi2(r, n, J, d); }});
        } else {
          jobs.push_back({k, [=](int d) { return nsp_phi_k(r, n, k, J, d); }});
        }
      }
      break;
    case Family::basic:
      for (long k = 1; k <= c.kmax; k += 2) jobs.push_back({k, [=](int d) { return basic_phi(n, k, d); }});
      break;
    case Family::colored3:
      for (long k = 1; k <= c.kmax; ++k) {
        jobs.push_back({k, [=](int d) { return colored3_phi(n, static_cast<int>(k), d); }});
      }
      break;
    case Family::planestrict:
      for (long k = 1; k <= c.kmax; ++k) {
        jobs.push_back({k, [=](int d) { return plane_phi(n, static_cast<int>(k), J, d); }});
      }
      break;
    case Family::prings:
      for (long k = 1; k <= c.kmax; ++k) {
        jobs.push_back({k, [=](int d) { return prings_phi(n, static_cast<int>(k), d); }});
      }
      break;
    case Family::concave:
      for (long m = 0; m < J; ++m) {
        jobs.push_back({m, [=](int d) { return concave_q(n, static_cast<int>(m), d); }});
      }
      break;
  }
  return jobs;
}

long max_kmax(Family f) {
  switch (f) {
    case Family::colored3:
      return 7;
    case Family::planestrict:
    case Family::prings:
      return 2;
    case Family::concave:
      return 1;
    default:
      return 1L << 20;
  }
}

std::vector<PreciseReal> evaluate(const std::vector<Job>& jobs, int digits, bool parallel) {
  std::vector<PreciseReal> out(jobs.size(), PreciseReal(digits));
  if (!parallel) {
    for (size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i].fn(digits);
    return out;
  }
  // Exceptions may not cross the parallel region; keep the first and rethrow.
  std::exception_ptr failure;
  const long count = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<size_t>(i)] = jobs[static_cast<size_t>(i)].fn(digits);
    } catch (...) {
#pragma omp critical(partasym_estimate_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

PreciseReal sum_ascending(const std::vector<PreciseReal>& values, int digits) {
  PreciseReal total(digits);
  for (const auto& v : values) total += v;
  return total;
}

PhiBreakdown run(const FamilySpec& family, long n, const EstimateConfig& requested, oracle::TableCache* cache,
                 bool parallel) {
  EstimateConfig c = defaults_for(family, requested);
  PhiBreakdown out;
  out.family = family;
  out.n = n;
  out.xi = family_xi(family, n);
  const auto jobs = jobs_for(family, n, c);
  if (jobs.empty()) throw InvalidArgument("estimate: no Φ terms selected");

  if (c.digits == 0) {
    const PreciseReal lead = jobs.front().fn(kProbeDigits);
    c.digits = kExtraDigits + static_cast<int>(std::max(1L, lead.decimal_exponent() + 1));
  }
  if (c.digits < hp::kMinDigits) throw InvalidArgument("estimate: digits must be at least " + std::to_string(hp::kMinDigits));
  out.config = c;

  const auto values = evaluate(jobs, c.digits, parallel);
  for (size_t i = 0; i < jobs.size(); ++i) out.terms.push_back({jobs[i].k, values[i]});
  out.total = sum_ascending(values, c.digits);
  out.rounded = out.total.round_to_integer();

  if (c.double_run) {
    const int d2 = c.digits + kDoubleRunExtra;
    const PreciseReal again = sum_ascending(evaluate(jobs, d2, parallel), d2);
    out.agreement_digits = hp::agreement_digits(out.total, again, c.digits);
  }

  if (c.oracle != OracleMode::never) {
    oracle::TableCache& tc = cache != nullptr ? *cache : oracle::default_cache();
    const auto table = c.oracle == OracleMode::always ? tc.get(family, n) : tc.cached(family, n);
    if (table) {
      out.exact = table->coeffs[static_cast<size_t>(n)];
      out.error = out.total - PreciseReal::from_integer(*out.exact, c.digits);
    }
  }
  return out;
}

}  // namespace

EstimateConfig defaults_for(const FamilySpec& family, EstimateConfig c) {
  switch (family.family) {
    case Family::nsp:
      if (c.kmax == 0) c.kmax = 16;
      if (c.terms == 0) c.terms = 16;
      break;
    case Family::basic:
      if (c.kmax == 0) c.kmax = 13;
      break;
    case Family::colored3:
      if (c.kmax == 0) c.kmax = 7;
      break;
    case Family::planestrict:
      if (c.kmax == 0) c.kmax = 2;
      if (c.terms == 0) c.terms = 8;
      break;
    case Family::prings:
      if (c.kmax == 0) c.kmax = 2;
      break;
    case Family::concave:
      if (c.kmax == 0) c.kmax = 1;
      if (c.terms == 0) c.terms = 5;
      break;
  }
  if (c.kmax < 1) throw InvalidArgument("estimate: kmax must be >= 1");
  if (c.terms < 1 && (family.family == Family::nsp || family.family == Family::planestrict ||
                     family.family == Family::concave)) {
    throw InvalidArgument("estimate: terms must be >= 1");
  }
  if (c.kmax > max_kmax(family.family)) {
    throw InvalidArgument("estimate: " + family.name() + " has Φ_k only for k <= " +
                          std::to_string(max_kmax(family.family)));
  }
  return c;
}

ExactRational family_xi(const FamilySpec& family, long n) {
  if (n < 0) throw InvalidArgument("n must be non-negative");
  ExactRational xi;
  switch (family.family) {
    case Family::nsp:
      xi = nsp_xi(family.r, n);
      break;
    case Family::colored3:
      xi = colored3_xi(n);
      break;
    case Family::planestrict:
      xi = plane_xi(n);
      break;
    default:
      xi = ExactRational(n);
      break;
  }
  if (xi <= 0) throw InvalidArgument("ξ = " + xi.get_str() + " is not positive; the Φ terms are singular there");
  return xi;
}

PhiBreakdown estimate(const FamilySpec& family, long n, const EstimateConfig& config, oracle::TableCache* cache) {
  return run(family, n, config, cache, true);
}

PhiBreakdown estimate_serial(const FamilySpec& family, long n, const EstimateConfig& config,
                             oracle::TableCache* cache) {
  return run(family, n, config, cache, false);
}

}  // namespace partasym::asymptotics
