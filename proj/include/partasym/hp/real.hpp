#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace partasym::hp {

/// Exact rational: Dedekind sums, Bernoulli data, ξ shifts. Always canonical.
using ExactRational = mpq_class;
/// Unbounded integer: partition counts.
using BigCount = mpz_class;

inline constexpr int kMinDigits = 10;

/// num/den in canonical form. mpq_class(num, den) does not reduce, and GMP's rational
/// routines assume reduced operands.
inline ExactRational ratio(long num, long den) {
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

/// Binary working precision for a decimal digit count: ceil(3.33 * digits) + 32 guard bits.
mpfr_prec_t bits_for_digits(int digits);

/// Arbitrary-precision real carrying its working precision in decimal digits.
///
/// Binary operations run at the larger of the two operand precisions. Values are
/// plain RAII wrappers around an mpfr_t and are safe to share read-only across threads.
class PreciseReal {
 public:
  explicit PreciseReal(int digits = kMinDigits);
  PreciseReal(const PreciseReal& other);
  PreciseReal(PreciseReal&& other) noexcept;
  PreciseReal& operator=(const PreciseReal& other);
  PreciseReal& operator=(PreciseReal&& other) noexcept;
  ~PreciseReal();

  static PreciseReal from_long(long value, int digits);
  static PreciseReal from_double(double value, int digits);
  static PreciseReal from_integer(const BigCount& value, int digits);
  static PreciseReal from_rational(const ExactRational& value, int digits);
  /// Decimal or scientific notation; throws InvalidArgument on malformed input.
  static PreciseReal parse(std::string_view text, int digits);

  int digits() const { return digits_; }
  PreciseReal with_digits(int digits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }
  /// Nearest integer (ties away from zero).
  BigCount round_to_integer() const;
  /// Base-10 exponent of the leading digit (0 for zero).
  long decimal_exponent() const;

  /// Scientific notation with `significant` digits, e.g. "4.9001590791729e+25".
  std::string to_scientific(int significant) const;
  /// Positional notation with a fixed number of decimals.
  std::string to_fixed(int decimals) const;
  /// Positional notation with every digit the working precision supports.
  std::string to_string() const;

  PreciseReal operator-() const;
  PreciseReal& operator+=(const PreciseReal& rhs);
  PreciseReal& operator-=(const PreciseReal& rhs);
  PreciseReal& operator*=(const PreciseReal& rhs);
  PreciseReal& operator/=(const PreciseReal& rhs);
  PreciseReal& operator*=(long rhs);
  PreciseReal& operator/=(long rhs);

  friend PreciseReal operator+(const PreciseReal& a, const PreciseReal& b);
  friend PreciseReal operator-(const PreciseReal& a, const PreciseReal& b);
  friend PreciseReal operator*(const PreciseReal& a, const PreciseReal& b);
  friend PreciseReal operator/(const PreciseReal& a, const PreciseReal& b);

  friend PreciseReal operator+(const PreciseReal& a, long b);
  friend PreciseReal operator-(const PreciseReal& a, long b);
  friend PreciseReal operator*(const PreciseReal& a, long b);
  friend PreciseReal operator/(const PreciseReal& a, long b);
  friend PreciseReal operator+(long a, const PreciseReal& b) { return b + a; }
  friend PreciseReal operator-(long a, const PreciseReal& b);
  friend PreciseReal operator*(long a, const PreciseReal& b) { return b * a; }
  friend PreciseReal operator/(long a, const PreciseReal& b);

  friend PreciseReal operator+(const PreciseReal& a, const ExactRational& b);
  friend PreciseReal operator-(const PreciseReal& a, const ExactRational& b);
  friend PreciseReal operator*(const PreciseReal& a, const ExactRational& b);
  friend PreciseReal operator/(const PreciseReal& a, const ExactRational& b);

  friend std::partial_ordering operator<=>(const PreciseReal& a, const PreciseReal& b);
  friend bool operator==(const PreciseReal& a, const PreciseReal& b);
  friend std::partial_ordering operator<=>(const PreciseReal& a, long b);
  friend bool operator==(const PreciseReal& a, long b);

 private:
  void raise_digits(int digits);

  mpfr_t value_;
  int digits_;
};

PreciseReal abs(const PreciseReal& x);
PreciseReal sqrt(const PreciseReal& x);
PreciseReal exp(const PreciseReal& x);
PreciseReal log(const PreciseReal& x);
PreciseReal sin(const PreciseReal& x);
PreciseReal cos(const PreciseReal& x);
PreciseReal sinh(const PreciseReal& x);
PreciseReal cosh(const PreciseReal& x);
PreciseReal atan2(const PreciseReal& y, const PreciseReal& x);
PreciseReal floor(const PreciseReal& x);
PreciseReal pow(const PreciseReal& base, const PreciseReal& exponent);
PreciseReal pow(const PreciseReal& base, long exponent);
/// base^q for rational q; integral q uses repeated squaring, otherwise base must be positive.
PreciseReal pow(const PreciseReal& base, const ExactRational& exponent);
PreciseReal max(const PreciseReal& a, const PreciseReal& b);

/// cos(π q) and sin(π q) with q reduced mod 2 exactly before flotation.
PreciseReal cos_pi(const ExactRational& q, int digits);
PreciseReal sin_pi(const ExactRational& q, int digits);

PreciseReal pi(int digits);
PreciseReal euler_gamma(int digits);
PreciseReal log2(int digits);

/// Number of leading significant decimal digits on which a and b agree, from the relative
/// difference: floor(-log10(|a-b|/|b|)), capped at `cap`.
int agreement_digits(const PreciseReal& a, const PreciseReal& b, int cap);

/// Length of the common prefix of the decimal integer parts of two values, ignoring sign.
/// This is the "n correct digits out of m" count used when comparing an estimate to a count.
int leading_digit_agreement(const BigCount& exact, const PreciseReal& estimate);

}  // namespace partasym::hp
