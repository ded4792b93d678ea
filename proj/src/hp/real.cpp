#include "partasym/hp/real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "partasym/errors.hpp"

namespace partasym::hp {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

struct MpfrStringDeleter {
  void operator()(char* p) const { mpfr_free_str(p); }
};

std::string format(const char* fmt, int count, mpfr_srcptr value) {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, fmt, count, value) < 0 || raw == nullptr) {
    throw NumericalError("mpfr_asprintf failed");
  }
  std::unique_ptr<char, MpfrStringDeleter> owned(raw);
  return std::string(owned.get());
}

}  // namespace

mpfr_prec_t bits_for_digits(int digits) {
  const int d = std::max(digits, 1);
  return static_cast<mpfr_prec_t>(std::ceil(3.33 * d)) + 32;
}

PreciseReal::PreciseReal(int digits) : digits_(std::max(digits, 1)) {
  mpfr_init2(value_, bits_for_digits(digits_));
  mpfr_set_zero(value_, 1);
}

PreciseReal::PreciseReal(const PreciseReal& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRnd);
}

PreciseReal::PreciseReal(PreciseReal&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

PreciseReal& PreciseReal::operator=(const PreciseReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRnd);
    digits_ = other.digits_;
  }
  return *this;
}

PreciseReal& PreciseReal::operator=(PreciseReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  std::swap(digits_, other.digits_);
  return *this;
}

PreciseReal::~PreciseReal() { mpfr_clear(value_); }

PreciseReal PreciseReal::from_long(long value, int digits) {
  PreciseReal r(digits);
  mpfr_set_si(r.value_, value, kRnd);
  return r;
}

PreciseReal PreciseReal::from_double(double value, int digits) {
  PreciseReal r(digits);
  mpfr_set_d(r.value_, value, kRnd);
  return r;
}

PreciseReal PreciseReal::from_integer(const BigCount& value, int digits) {
  PreciseReal r(digits);
  mpfr_set_z(r.value_, value.get_mpz_t(), kRnd);
  return r;
}

PreciseReal PreciseReal::from_rational(const ExactRational& value, int digits) {
  PreciseReal r(digits);
  mpfr_set_q(r.value_, value.get_mpq_t(), kRnd);
  return r;
}

PreciseReal PreciseReal::parse(std::string_view text, int digits) {
  PreciseReal r(digits);
  const std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.value_, s.c_str(), &end, 10, kRnd);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw InvalidArgument("not a decimal number: '" + s + "'");
  }
  return r;
}

PreciseReal PreciseReal::with_digits(int digits) const {
  PreciseReal r(digits);
  mpfr_set(r.value_, value_, kRnd);
  return r;
}

void PreciseReal::raise_digits(int digits) {
  if (digits > digits_) {
    mpfr_prec_round(value_, bits_for_digits(digits), kRnd);
    digits_ = digits;
  }
}

BigCount PreciseReal::round_to_integer() const {
  mpz_class z;
  mpfr_t tmp;
  mpfr_init2(tmp, mpfr_get_prec(value_));
  mpfr_round(tmp, value_);
  mpfr_get_z(z.get_mpz_t(), tmp, kRnd);
  mpfr_clear(tmp);
  return z;
}

long PreciseReal::decimal_exponent() const {
  if (is_zero()) return 0;
  mpfr_t tmp;
  mpfr_init2(tmp, 64);
  mpfr_abs(tmp, value_, kRnd);
  mpfr_log10(tmp, tmp, MPFR_RNDD);
  mpfr_floor(tmp, tmp);
  const long e = mpfr_get_si(tmp, kRnd);
  mpfr_clear(tmp);
  return e;
}

std::string PreciseReal::to_scientific(int significant) const {
  return format("%.*Re", std::max(significant - 1, 0), value_);
}

std::string PreciseReal::to_fixed(int decimals) const {
  return format("%.*Rf", std::max(decimals, 0), value_);
}

std::string PreciseReal::to_string() const {
  if (is_zero()) return "0";
  const long lead = decimal_exponent();
  const int decimals = static_cast<int>(std::max<long>(digits_ - 1 - lead, 0));
  return to_fixed(decimals);
}

PreciseReal PreciseReal::operator-() const {
  PreciseReal r(*this);
  mpfr_neg(r.value_, r.value_, kRnd);
  return r;
}

PreciseReal& PreciseReal::operator+=(const PreciseReal& rhs) {
  raise_digits(rhs.digits_);
  mpfr_add(value_, value_, rhs.value_, kRnd);
  return *this;
}

PreciseReal& PreciseReal::operator-=(const PreciseReal& rhs) {
  raise_digits(rhs.digits_);
  mpfr_sub(value_, value_, rhs.value_, kRnd);
  return *this;
}

PreciseReal& PreciseReal::operator*=(const PreciseReal& rhs) {
  raise_digits(rhs.digits_);
  mpfr_mul(value_, value_, rhs.value_, kRnd);
  return *this;
}

PreciseReal& PreciseReal::operator/=(const PreciseReal& rhs) {
  raise_digits(rhs.digits_);
  mpfr_div(value_, value_, rhs.value_, kRnd);
  return *this;
}

PreciseReal& PreciseReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, kRnd);
  return *this;
}

PreciseReal& PreciseReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, kRnd);
  return *this;
}

#define PARTASYM_BINARY_OP(OP, FN)                                   \
  PreciseReal operator OP(const PreciseReal& a, const PreciseReal& b) { \
    PreciseReal r(std::max(a.digits_, b.digits_));                  \
    FN(r.value_, a.value_, b.value_, kRnd);                         \
    return r;                                                       \
  }
PARTASYM_BINARY_OP(+, mpfr_add)
PARTASYM_BINARY_OP(-, mpfr_sub)
PARTASYM_BINARY_OP(*, mpfr_mul)
PARTASYM_BINARY_OP(/, mpfr_div)
#undef PARTASYM_BINARY_OP

#define PARTASYM_SCALAR_OP(OP, FN)                          \
  PreciseReal operator OP(const PreciseReal& a, long b) {   \
    PreciseReal r(a.digits_);                               \
    FN(r.value_, a.value_, b, kRnd);                        \
    return r;                                               \
  }
PARTASYM_SCALAR_OP(+, mpfr_add_si)
PARTASYM_SCALAR_OP(-, mpfr_sub_si)
PARTASYM_SCALAR_OP(*, mpfr_mul_si)
PARTASYM_SCALAR_OP(/, mpfr_div_si)
#undef PARTASYM_SCALAR_OP

PreciseReal operator-(long a, const PreciseReal& b) {
  PreciseReal r(b.digits_);
  mpfr_si_sub(r.value_, a, b.value_, kRnd);
  return r;
}

PreciseReal operator/(long a, const PreciseReal& b) {
  PreciseReal r(b.digits_);
  mpfr_si_div(r.value_, a, b.value_, kRnd);
  return r;
}

#define PARTASYM_RATIONAL_OP(OP, FN)                                      \
  PreciseReal operator OP(const PreciseReal& a, const ExactRational& b) { \
    PreciseReal r(a.digits_);                                             \
    FN(r.value_, a.value_, b.get_mpq_t(), kRnd);                          \
    return r;                                                             \
  }
PARTASYM_RATIONAL_OP(+, mpfr_add_q)
PARTASYM_RATIONAL_OP(-, mpfr_sub_q)
PARTASYM_RATIONAL_OP(*, mpfr_mul_q)
PARTASYM_RATIONAL_OP(/, mpfr_div_q)
#undef PARTASYM_RATIONAL_OP

std::partial_ordering operator<=>(const PreciseReal& a, const PreciseReal& b) {
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const PreciseReal& a, const PreciseReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const PreciseReal& a, long b) {
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const PreciseReal& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }

#define PARTASYM_UNARY_FN(NAME, FN)            \
  PreciseReal NAME(const PreciseReal& x) {     \
    PreciseReal r(x.digits());                 \
    FN(r.get(), x.get(), kRnd);                \
    return r;                                  \
  }
PARTASYM_UNARY_FN(abs, mpfr_abs)
PARTASYM_UNARY_FN(sqrt, mpfr_sqrt)
PARTASYM_UNARY_FN(exp, mpfr_exp)
PARTASYM_UNARY_FN(log, mpfr_log)
PARTASYM_UNARY_FN(sin, mpfr_sin)
PARTASYM_UNARY_FN(cos, mpfr_cos)
PARTASYM_UNARY_FN(sinh, mpfr_sinh)
PARTASYM_UNARY_FN(cosh, mpfr_cosh)
#undef PARTASYM_UNARY_FN

PreciseReal floor(const PreciseReal& x) {
  PreciseReal r(x.digits());
  mpfr_floor(r.get(), x.get());
  return r;
}

PreciseReal atan2(const PreciseReal& y, const PreciseReal& x) {
  PreciseReal r(std::max(x.digits(), y.digits()));
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  return r;
}

PreciseReal pow(const PreciseReal& base, const PreciseReal& exponent) {
  PreciseReal r(std::max(base.digits(), exponent.digits()));
  mpfr_pow(r.get(), base.get(), exponent.get(), kRnd);
  return r;
}

PreciseReal pow(const PreciseReal& base, long exponent) {
  PreciseReal r(base.digits());
  mpfr_pow_si(r.get(), base.get(), exponent, kRnd);
  return r;
}

PreciseReal pow(const PreciseReal& base, const ExactRational& exponent) {
  if (exponent.get_den() == 1 && exponent.get_num().fits_slong_p()) {
    return pow(base, exponent.get_num().get_si());
  }
  if (base.sign() < 0) {
    throw InvalidArgument("non-integral power of a negative number");
  }
  return pow(base, PreciseReal::from_rational(exponent, base.digits()));
}

PreciseReal max(const PreciseReal& a, const PreciseReal& b) { return a < b ? b : a; }

namespace {

// q mod 2 in [0, 2)
ExactRational reduce_mod2(const ExactRational& q) {
  mpz_class two_den = 2 * q.get_den();
  mpz_class num = q.get_num() % two_den;
  if (num < 0) num += two_den;
  ExactRational r(num, q.get_den());
  r.canonicalize();
  return r;
}

}  // namespace

PreciseReal cos_pi(const ExactRational& q, int digits) {
  const ExactRational r = reduce_mod2(q);
  if (r == 0) return PreciseReal::from_long(1, digits);
  if (r == 1) return PreciseReal::from_long(-1, digits);
  if (r == ExactRational(1, 2) || r == ExactRational(3, 2)) return PreciseReal(digits);
  return cos(pi(digits) * r);
}

PreciseReal sin_pi(const ExactRational& q, int digits) {
  const ExactRational r = reduce_mod2(q);
  if (r == 0 || r == 1) return PreciseReal(digits);
  if (r == ExactRational(1, 2)) return PreciseReal::from_long(1, digits);
  if (r == ExactRational(3, 2)) return PreciseReal::from_long(-1, digits);
  return sin(pi(digits) * r);
}

PreciseReal pi(int digits) {
  PreciseReal r(digits);
  mpfr_const_pi(r.get(), kRnd);
  return r;
}

PreciseReal euler_gamma(int digits) {
  PreciseReal r(digits);
  mpfr_const_euler(r.get(), kRnd);
  return r;
}

PreciseReal log2(int digits) {
  PreciseReal r(digits);
  mpfr_const_log2(r.get(), kRnd);
  return r;
}

int agreement_digits(const PreciseReal& a, const PreciseReal& b, int cap) {
  const PreciseReal diff = abs(a - b);
  if (diff.is_zero()) return cap;
  if (b.is_zero()) return 0;
  const PreciseReal rel = diff / abs(b);
  const double lg = -std::log10(rel.to_double());
  if (!std::isfinite(lg)) return cap;
  return std::clamp(static_cast<int>(std::floor(lg)), 0, cap);
}

int leading_digit_agreement(const BigCount& exact, const PreciseReal& estimate) {
  const std::string a = BigCount(abs(exact)).get_str();
  const std::string b = BigCount(abs(estimate.round_to_integer())).get_str();
  if (a.size() != b.size()) return 0;
  const auto mismatch = std::mismatch(a.begin(), a.end(), b.begin());
  return static_cast<int>(mismatch.first - a.begin());
}

}  // namespace partasym::hp
