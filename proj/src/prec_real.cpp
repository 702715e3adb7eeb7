#include "hypersum/prec_real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace hypersum {

namespace {

constexpr Precision kBoundPrecision = 64;

}  // namespace

Precision guard_bits(int digits) {
  const double bits = std::ceil(static_cast<double>(digits) * std::log2(10.0)) + 32.0;
  return std::max<Precision>(kMinPrecision, static_cast<Precision>(bits));
}

PrecisionRequest::PrecisionRequest(int digits) : digits_(digits) {
  if (digits < 1 || digits > kMaxDigits)
    throw std::invalid_argument("digits must be in 1.." + std::to_string(kMaxDigits));
}

PrecisionRequest PrecisionRequest::tighter(int extra) const {
  return PrecisionRequest(std::min(digits_ + extra, kMaxDigits + 64), true);
}

PrecReal::PrecReal(Precision bits) {
  mpfr_init2(value_, std::max<Precision>(bits, MPFR_PREC_MIN));
  mpfr_set_zero(value_, 1);
}

PrecReal::PrecReal(long value, Precision bits) : PrecReal(bits) { mpfr_set_si(value_, value, MPFR_RNDN); }

PrecReal::PrecReal(const ExactRational& value, Precision bits) : PrecReal(bits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

PrecReal::PrecReal(const BigInt& value, Precision bits) : PrecReal(bits) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

PrecReal PrecReal::from_string(const std::string& text, Precision bits) {
  PrecReal out(bits);
  char* end = nullptr;
  if (!text.empty()) mpfr_strtofr(out.value_, text.c_str(), &end, 10, MPFR_RNDN);
  if (end == nullptr || end == text.c_str() || *end != '\0')
    throw std::invalid_argument("not a decimal number: '" + text + "'");
  return out;
}

PrecReal::PrecReal(const PrecReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

PrecReal::PrecReal(PrecReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

PrecReal& PrecReal::operator=(const PrecReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

PrecReal& PrecReal::operator=(PrecReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

PrecReal::~PrecReal() { mpfr_clear(value_); }

PrecReal PrecReal::rounded_to(Precision bits) const {
  PrecReal out(bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

PrecReal& PrecReal::operator+=(const PrecReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

PrecReal& PrecReal::operator-=(const PrecReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

PrecReal& PrecReal::operator*=(const PrecReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

PrecReal& PrecReal::operator/=(const PrecReal& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

PrecReal& PrecReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

PrecReal& PrecReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

PrecReal PrecReal::operator-() const {
  PrecReal out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

std::string PrecReal::to_fixed(int places) const {
  if (places < 0) throw std::invalid_argument("to_fixed: negative places");
  if (!is_finite()) throw std::domain_error("to_fixed: non-finite value");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  // Wide enough that value * 10^places is exact before the final rounding.
  const Precision exact_bits = precision() + static_cast<Precision>(mpz_sizeinbase(scale.get_mpz_t(), 2)) + 2;
  mpfr_t scaled;
  mpfr_init2(scaled, exact_bits);
  mpfr_mul_z(scaled, value_, scale.get_mpz_t(), MPFR_RNDN);
  mpfr_rint(scaled, scaled, MPFR_RNDN);  // ties to even
  BigInt digits;
  mpfr_get_z(digits.get_mpz_t(), scaled, MPFR_RNDN);
  mpfr_clear(scaled);

  const bool negative = sgn(digits) < 0;
  std::string body = BigInt(abs(digits)).get_str(10);
  if (places > 0) {
    if (body.size() <= static_cast<std::size_t>(places)) body.insert(0, places + 1 - body.size(), '0');
    body.insert(body.size() - places, 1, '.');
  }
  return negative ? "-" + body : body;
}

std::string PrecReal::to_scientific_up(int significant) const {
  char* buffer = nullptr;
  const int precision_digits = std::max(0, significant - 1);
  if (mpfr_asprintf(&buffer, "%.*RUe", precision_digits, value_) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

PrecReal operator+(PrecReal lhs, const PrecReal& rhs) { return lhs += rhs; }
PrecReal operator-(PrecReal lhs, const PrecReal& rhs) { return lhs -= rhs; }
PrecReal operator*(PrecReal lhs, const PrecReal& rhs) { return lhs *= rhs; }
PrecReal operator/(PrecReal lhs, const PrecReal& rhs) { return lhs /= rhs; }
PrecReal operator*(PrecReal lhs, long rhs) { return lhs *= rhs; }
PrecReal operator*(long lhs, PrecReal rhs) { return rhs *= lhs; }
PrecReal operator/(PrecReal lhs, long rhs) { return lhs /= rhs; }

std::partial_ordering operator<=>(const PrecReal& lhs, const PrecReal& rhs) {
  if (mpfr_unordered_p(lhs.raw(), rhs.raw())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(lhs.raw(), rhs.raw());
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const PrecReal& lhs, const PrecReal& rhs) { return mpfr_equal_p(lhs.raw(), rhs.raw()) != 0; }

PrecReal abs(const PrecReal& x) {
  PrecReal out(x.precision());
  mpfr_abs(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

PrecReal log(const PrecReal& x) {
  PrecReal out(x.precision());
  mpfr_log(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

PrecReal pow(const PrecReal& x, long exponent) {
  PrecReal out(x.precision());
  mpfr_pow_si(out.raw(), x.raw(), exponent, MPFR_RNDN);
  return out;
}

PrecReal max(const PrecReal& a, const PrecReal& b) { return (a < b) ? b : a; }

PrecReal pow10(long exponent, Precision bits) {
  PrecReal out(10, bits);
  mpfr_pow_si(out.raw(), out.raw(), exponent, MPFR_RNDN);
  return out;
}

PrecReal add_up(const PrecReal& a, const PrecReal& b) {
  PrecReal out(kBoundPrecision);
  mpfr_add(out.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return out;
}

PrecReal mul_up(const PrecReal& a, const PrecReal& b) {
  PrecReal out(kBoundPrecision);
  mpfr_mul(out.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return out;
}

PrecReal abs_up(const PrecReal& a) {
  PrecReal out(kBoundPrecision);
  mpfr_abs(out.raw(), a.raw(), MPFR_RNDU);
  return out;
}

PrecReal unit_roundoff(Precision bits) {
  PrecReal out(1, kBoundPrecision);
  mpfr_mul_2si(out.raw(), out.raw(), 1 - static_cast<long>(bits), MPFR_RNDU);
  return out;
}

namespace {

// Charge one rounding of `mid` to `rad`.
void charge_rounding(Ball& b) { b.rad = add_up(b.rad, mul_up(abs_up(b.mid), unit_roundoff(b.mid.precision()))); }

}  // namespace

Ball::Ball(PrecReal mid_value, PrecReal radius) : mid(std::move(mid_value)), rad(abs_up(radius)) {}

Ball Ball::exact(const ExactRational& value, Precision bits) {
  Ball out(PrecReal(value, bits), PrecReal(0, kBoundPrecision));
  charge_rounding(out);
  return out;
}

Ball Ball::around(const PrecReal& mid, const PrecReal& radius) { return Ball(mid, radius); }

bool Ball::contains(const PrecReal& x) const {
  PrecReal diff(std::max(x.precision(), mid.precision()) + 2);
  mpfr_sub(diff.raw(), x.raw(), mid.raw(), MPFR_RNDN);
  return abs(diff) <= rad;
}

Ball& Ball::operator+=(const Ball& rhs) {
  mid += rhs.mid;
  rad = add_up(rad, rhs.rad);
  charge_rounding(*this);
  return *this;
}

Ball& Ball::operator-=(const Ball& rhs) {
  mid -= rhs.mid;
  rad = add_up(rad, rhs.rad);
  charge_rounding(*this);
  return *this;
}

Ball& Ball::operator*=(const Ball& rhs) {
  // |ab - a'b'| <= |a| rb + |b| ra + ra rb
  PrecReal spread = add_up(add_up(mul_up(abs_up(mid), rhs.rad), mul_up(abs_up(rhs.mid), rad)), mul_up(rad, rhs.rad));
  mid *= rhs.mid;
  rad = spread;
  charge_rounding(*this);
  return *this;
}

Ball& Ball::operator*=(const ExactRational& rhs) { return *this *= Ball::exact(rhs, mid.precision()); }

Ball Ball::operator-() const { return Ball(-mid, rad); }

Ball operator+(Ball lhs, const Ball& rhs) { return lhs += rhs; }
Ball operator-(Ball lhs, const Ball& rhs) { return lhs -= rhs; }
Ball operator*(Ball lhs, const Ball& rhs) { return lhs *= rhs; }
Ball operator*(Ball lhs, const ExactRational& rhs) { return lhs *= rhs; }
Ball operator*(const ExactRational& lhs, Ball rhs) { return rhs *= lhs; }

}  // namespace hypersum
