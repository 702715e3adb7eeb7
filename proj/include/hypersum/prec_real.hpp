#ifndef HYPERSUM_PREC_REAL_HPP
#define HYPERSUM_PREC_REAL_HPP

#include <mpfr.h>

#include <compare>
#include <string>

#include "hypersum/exact.hpp"

namespace hypersum {

using Precision = mpfr_prec_t;

inline constexpr Precision kMinPrecision = 64;
inline constexpr int kMaxDigits = 10000;

/// Working precision for a target of `digits` decimal digits:
/// ceil(digits * log2(10)) + 32 guard bits, never below kMinPrecision.
Precision guard_bits(int digits);

/// Target accuracy of an evaluation, in decimal digits of absolute error.
class PrecisionRequest {
 public:
  /// Throws std::invalid_argument unless 1 <= digits <= kMaxDigits.
  explicit PrecisionRequest(int digits);

  int digits() const { return digits_; }
  Precision bits() const { return guard_bits(digits_); }

  /// Same request with `extra` more digits (clamped to kMaxDigits + 64).
  PrecisionRequest tighter(int extra) const;

 private:
  PrecisionRequest(int digits, bool) : digits_(digits) {}
  int digits_;
};

/// Multiple-precision binary floating point value with its own working
/// precision. Binary operations round to nearest at the larger precision of
/// the operands.
class PrecReal {
 public:
  PrecReal() : PrecReal(kMinPrecision) {}
  explicit PrecReal(Precision bits);
  PrecReal(long value, Precision bits);
  PrecReal(const ExactRational& value, Precision bits);
  PrecReal(const BigInt& value, Precision bits);

  /// Parses a decimal literal ("3.14159", "-2e-5"); throws std::invalid_argument.
  static PrecReal from_string(const std::string& text, Precision bits);

  PrecReal(const PrecReal& other);
  PrecReal(PrecReal&& other) noexcept;
  PrecReal& operator=(const PrecReal& other);
  PrecReal& operator=(PrecReal&& other) noexcept;
  ~PrecReal();

  Precision precision() const { return mpfr_get_prec(value_); }
  PrecReal rounded_to(Precision bits) const;

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }

  PrecReal& operator+=(const PrecReal& rhs);
  PrecReal& operator-=(const PrecReal& rhs);
  PrecReal& operator*=(const PrecReal& rhs);
  PrecReal& operator/=(const PrecReal& rhs);
  PrecReal& operator*=(long rhs);
  PrecReal& operator/=(long rhs);

  PrecReal operator-() const;

  /// Fixed-point decimal with `places` digits after the point, rounded
  /// half-to-even from the exact binary value.
  std::string to_fixed(int places) const;

  /// `significant` digits in scientific notation, rounded away from zero.
  /// Used for error bounds, which must never be understated.
  std::string to_scientific_up(int significant = 3) const;

 private:
  mpfr_t value_;
};

PrecReal operator+(PrecReal lhs, const PrecReal& rhs);
PrecReal operator-(PrecReal lhs, const PrecReal& rhs);
PrecReal operator*(PrecReal lhs, const PrecReal& rhs);
PrecReal operator/(PrecReal lhs, const PrecReal& rhs);
PrecReal operator*(PrecReal lhs, long rhs);
PrecReal operator*(long lhs, PrecReal rhs);
PrecReal operator/(PrecReal lhs, long rhs);

std::partial_ordering operator<=>(const PrecReal& lhs, const PrecReal& rhs);
bool operator==(const PrecReal& lhs, const PrecReal& rhs);

PrecReal abs(const PrecReal& x);
PrecReal log(const PrecReal& x);
PrecReal pow(const PrecReal& x, long exponent);
PrecReal max(const PrecReal& a, const PrecReal& b);

/// 10^exponent at `bits` precision.
PrecReal pow10(long exponent, Precision bits);

/// Mid-radius enclosure: the true value lies in [mid - rad, mid + rad].
/// Radii are maintained with upward rounding; every operation on `mid`
/// charges 2^(1-p) |result| to the radius.
struct Ball {
  PrecReal mid;
  PrecReal rad;

  Ball() = default;
  Ball(PrecReal mid_value, PrecReal radius);

  /// Exact rational converted at `bits`, radius covering the conversion.
  static Ball exact(const ExactRational& value, Precision bits);
  /// Value known to lie within `radius` of `mid`.
  static Ball around(const PrecReal& mid, const PrecReal& radius);

  Precision precision() const { return mid.precision(); }
  bool contains(const PrecReal& x) const;

  Ball& operator+=(const Ball& rhs);
  Ball& operator-=(const Ball& rhs);
  Ball& operator*=(const Ball& rhs);
  Ball& operator*=(const ExactRational& rhs);
  Ball operator-() const;
};

Ball operator+(Ball lhs, const Ball& rhs);
Ball operator-(Ball lhs, const Ball& rhs);
Ball operator*(Ball lhs, const Ball& rhs);
Ball operator*(Ball lhs, const ExactRational& rhs);
Ball operator*(const ExactRational& lhs, Ball rhs);

/// Upward-rounded helpers for bound arithmetic.
PrecReal add_up(const PrecReal& a, const PrecReal& b);
PrecReal mul_up(const PrecReal& a, const PrecReal& b);
PrecReal abs_up(const PrecReal& a);

/// 2^(1-bits) as a bound-precision value.
PrecReal unit_roundoff(Precision bits);

}  // namespace hypersum

#endif  // HYPERSUM_PREC_REAL_HPP
