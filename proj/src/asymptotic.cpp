#include "hypersum/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypersum/special_functions.hpp"

namespace hypersum {

namespace {

ExactRational rabs(const ExactRational& q) { return abs(q); }

// Upper bound of |p + g*gamma|.
ExactRational plain_majorant(const SeriesCoefficient& c) { return rabs(c.plain) + rabs(c.gamma) * gamma_upper_bound(); }

ExactRational inverse_power(long x, int exponent) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(std::abs(exponent)));
  return exponent >= 0 ? make_rational(1, p) : ExactRational(p);
}

ExactRational inverse_power(const ExactRational& x, int exponent) {
  ExactRational out = 1;
  ExactRational base = exponent >= 0 ? ExactRational(1 / x) : x;
  for (int i = 0; i < std::abs(exponent); ++i) out *= base;
  return out;
}

PrecReal upper(const Ball& b) { return add_up(abs_up(b.mid), b.rad); }

Ball ball_log(const ExactRational& x, Precision bits) {
  PrecReal value = log(PrecReal(x, bits));
  // conversion of x (relative 2^-p) plus the correctly rounded log
  PrecReal radius = mul_up(unit_roundoff(bits), add_up(PrecReal(1, kMinPrecision), abs_up(value)));
  return Ball(value, radius);
}

Ball coefficient_value(const SeriesCoefficient& c, const Ball& gamma, const Ball& log_x) {
  const Precision bits = gamma.precision();
  Ball out = Ball::exact(c.plain, bits);
  if (sgn(c.gamma) != 0) out += gamma * c.gamma;
  if (sgn(c.log) != 0) out += log_x * c.log;
  return out;
}

// Integral bound int_y^inf (a ln x + b) x^-t dx for t > 1, a, b >= 0.
Ball log_power_integral(const ExactRational& a, const ExactRational& b, int t, const Ball& log_y, long y) {
  const Precision bits = log_y.precision();
  const ExactRational inv_t1(1, t - 1);
  Ball bracket = log_y * (a * inv_t1) + Ball::exact(a * inv_t1 * inv_t1 + b * inv_t1, bits);
  return bracket * inverse_power(y, t - 1);
}

}  // namespace

ExactRational gamma_upper_bound() { return ExactRational(5773, 10000); }

LogPowerSeries::LogPowerSeries(int cutoff, long valid_from) : cutoff_(cutoff), valid_from_(std::max(1L, valid_from)) {}

LogPowerSeries LogPowerSeries::constant(const ExactRational& c, int cutoff) { return monomial(0, c, cutoff); }

LogPowerSeries LogPowerSeries::monomial(int exponent, const ExactRational& c, int cutoff) {
  LogPowerSeries out(cutoff);
  out.add_term(exponent, SeriesCoefficient{c, 0, 0});
  return out;
}

LogPowerSeries LogPowerSeries::polynomial(const std::vector<ExactRational>& coeffs, int cutoff) {
  LogPowerSeries out(cutoff);
  for (std::size_t d = 0; d < coeffs.size(); ++d) out.add_term(-static_cast<int>(d), SeriesCoefficient{coeffs[d], 0, 0});
  return out;
}

void LogPowerSeries::add_term(int exponent, const SeriesCoefficient& c) {
  if (c.is_zero()) return;
  if (exponent > cutoff_) {
    add_remainder(exponent, RemainderComponent{rabs(c.log), plain_majorant(c)});
    return;
  }
  auto& slot = terms_[exponent];
  slot.plain += c.plain;
  slot.gamma += c.gamma;
  slot.log += c.log;
  if (slot.is_zero()) terms_.erase(exponent);
}

void LogPowerSeries::add_remainder(int order, const RemainderComponent& r) {
  if (sgn(r.log_scale) == 0 && sgn(r.scale) == 0) return;
  auto& slot = remainder_[order];
  slot.log_scale += r.log_scale;
  slot.scale += r.scale;
}

void LogPowerSeries::require_valid_from(long x0) { valid_from_ = std::max(valid_from_, x0); }

LogPowerSeries& LogPowerSeries::operator+=(const LogPowerSeries& rhs) {
  for (const auto& [s, c] : rhs.terms_) add_term(s, c);
  for (const auto& [t, r] : rhs.remainder_) add_remainder(t, r);
  valid_from_ = std::max(valid_from_, rhs.valid_from_);
  return *this;
}

LogPowerSeries& LogPowerSeries::operator-=(const LogPowerSeries& rhs) {
  for (const auto& [s, c] : rhs.terms_) add_term(s, SeriesCoefficient{-c.plain, -c.gamma, -c.log});
  for (const auto& [t, r] : rhs.remainder_) add_remainder(t, r);
  valid_from_ = std::max(valid_from_, rhs.valid_from_);
  return *this;
}

LogPowerSeries& LogPowerSeries::operator*=(const ExactRational& rhs) {
  if (sgn(rhs) == 0) {
    terms_.clear();
    remainder_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) {
    c.plain *= rhs;
    c.gamma *= rhs;
    c.log *= rhs;
  }
  const ExactRational scale = rabs(rhs);
  for (auto& [t, r] : remainder_) {
    r.log_scale *= scale;
    r.scale *= scale;
  }
  return *this;
}

LogPowerSeries operator*(const LogPowerSeries& lhs, const LogPowerSeries& rhs) {
  LogPowerSeries out(std::min(lhs.cutoff(), rhs.cutoff()), std::max(lhs.valid_from(), rhs.valid_from()));
  auto unsupported = [] { return std::logic_error("LogPowerSeries product needs ln^2 x or gamma^2 terms"); };

  for (const auto& [s1, a] : lhs.terms()) {
    for (const auto& [s2, b] : rhs.terms()) {
      if (sgn(a.log) * sgn(b.log) != 0 || sgn(a.gamma) * sgn(b.gamma) != 0 || sgn(a.gamma) * sgn(b.log) != 0 ||
          sgn(a.log) * sgn(b.gamma) != 0)
        throw unsupported();
      SeriesCoefficient c;
      c.plain = a.plain * b.plain;
      c.gamma = a.plain * b.gamma + a.gamma * b.plain;
      c.log = a.plain * b.log + a.log * b.plain;
      out.add_term(s1 + s2, c);
    }
  }

  // |coefficient| <= M + |l| ln x against a remainder (A ln x + B).
  auto cross = [&](const LogPowerSeries& series, const LogPowerSeries& other) {
    for (const auto& [s, c] : series.terms()) {
      const ExactRational m = plain_majorant(c);
      const ExactRational l = rabs(c.log);
      for (const auto& [t, r] : other.remainder()) {
        if (sgn(l) != 0 && sgn(r.log_scale) != 0) throw unsupported();
        out.add_remainder(s + t, RemainderComponent{m * r.log_scale + l * r.scale, m * r.scale});
      }
    }
  };
  cross(lhs, rhs);
  cross(rhs, lhs);

  for (const auto& [t1, r1] : lhs.remainder()) {
    for (const auto& [t2, r2] : rhs.remainder()) {
      if (sgn(r1.log_scale) != 0 && sgn(r2.log_scale) != 0) throw unsupported();
      out.add_remainder(t1 + t2, RemainderComponent{r1.log_scale * r2.scale + r1.scale * r2.log_scale, r1.scale * r2.scale});
    }
  }
  return out;
}

LogPowerSeries operator+(LogPowerSeries lhs, const LogPowerSeries& rhs) { return lhs += rhs; }
LogPowerSeries operator-(LogPowerSeries lhs, const LogPowerSeries& rhs) { return lhs -= rhs; }

Ball LogPowerSeries::evaluate(const ExactRational& x, const Ball& gamma) const {
  const Precision bits = gamma.precision();
  const Ball log_x = ball_log(x, bits);
  Ball out = Ball::exact(0, bits);
  for (const auto& [s, c] : terms_) out += coefficient_value(c, gamma, log_x) * inverse_power(x, s);
  return out;
}

PrecReal LogPowerSeries::remainder_bound(const ExactRational& x) const {
  const Precision bits = kMinPrecision * 2;
  const Ball log_x = ball_log(x, bits);
  Ball out = Ball::exact(0, bits);
  for (const auto& [t, r] : remainder_) out += (log_x * r.log_scale + Ball::exact(r.scale, bits)) * inverse_power(x, t);
  return upper(out);
}

LogPowerSeries reciprocal_shift_expansion(const ExactRational& shift, int cutoff) {
  if (sgn(shift) < 0) throw std::domain_error("reciprocal_shift_expansion: shift must be >= 0");
  LogPowerSeries out(cutoff);
  if (sgn(shift) == 0) {
    out.add_term(1, SeriesCoefficient{1, 0, 0});
    return out;
  }
  // 1/(x+c) - sum_{t=1}^{T} (-c)^(t-1) x^-t = (-c)^T / (x^T (x+c))
  const int last = std::max(1, cutoff);
  ExactRational coeff = 1;
  for (int t = 1; t <= last; ++t) {
    out.add_term(t, SeriesCoefficient{coeff, 0, 0});
    coeff *= -shift;
  }
  out.add_remainder(last + 1, RemainderComponent{0, rabs(coeff)});
  return out;
}

LogPowerSeries harmonic_expansion(int cutoff) {
  LogPowerSeries out(cutoff);
  out.add_term(0, SeriesCoefficient{0, 1, 1});
  out.add_term(1, SeriesCoefficient{ExactRational(1, 2), 0, 0});
  const int last_k = std::max(0, cutoff / 2);
  for (int k = 1; k <= last_k; ++k)
    out.add_term(2 * k, SeriesCoefficient{-bernoulli(2 * k) / ExactRational(2 * k), 0, 0});
  const int k = last_k + 1;
  out.add_remainder(2 * k, RemainderComponent{0, rabs(bernoulli(2 * k)) / ExactRational(2 * k)});
  return out;
}

LogPowerSeries hurwitz_expansion(int s, int cutoff) {
  if (s < 2) throw std::domain_error("hurwitz_expansion: s must be >= 2");
  LogPowerSeries out(cutoff);
  out.add_term(s - 1, SeriesCoefficient{ExactRational(1, s - 1), 0, 0});
  out.add_term(s, SeriesCoefficient{ExactRational(1, 2), 0, 0});
  // (s)_(2j-1) B_2j / (2j)!
  auto coefficient = [s](int j) -> ExactRational {
    BigInt rising = 1;
    for (int i = 0; i < 2 * j - 1; ++i) rising *= s + i;
    return bernoulli(2 * j) * ExactRational(rising) / ExactRational(factorial(2 * j));
  };
  int j = 1;
  for (; s + 2 * j - 1 <= cutoff; ++j) out.add_term(s + 2 * j - 1, SeriesCoefficient{coefficient(j), 0, 0});
  out.add_remainder(s + 2 * j - 1, RemainderComponent{0, rabs(coefficient(j))});
  return out;
}

LogPowerSeries hyperharmonic_expansion(unsigned r, int cutoff) {
  if (r == 0) return LogPowerSeries::monomial(1, 1, cutoff);
  const int inner_cutoff = cutoff + static_cast<int>(r) - 1;
  LogPowerSeries inner = harmonic_expansion(inner_cutoff);
  for (unsigned i = 1; i < r; ++i) inner += reciprocal_shift_expansion(ExactRational(i), inner_cutoff);
  inner -= LogPowerSeries::constant(harmonic(r - 1), inner_cutoff);

  // C(x+r-1, r-1) = prod_{i=1}^{r-1} (x+i) / (r-1)!
  std::vector<ExactRational> poly{ExactRational(1)};
  for (unsigned i = 1; i < r; ++i) {
    std::vector<ExactRational> next(poly.size() + 1, ExactRational(0));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d] += poly[d] * i;
      next[d + 1] += poly[d];
    }
    poly = std::move(next);
  }
  const ExactRational scale = make_rational(1, factorial(r - 1));
  for (auto& c : poly) c *= scale;
  return LogPowerSeries::polynomial(poly, cutoff) * inner;
}

TailSum sum_tail(const LogPowerSeries& f, long first, const Ball& gamma, const PrecReal& target) {
  if (first - 1 < std::max(3L, f.valid_from()))
    throw std::domain_error("sum_tail: start index below the expansion's validity range");
  for (const auto& [s, c] : f.terms())
    if (s < 2) throw std::domain_error("sum_tail: divergent term x^-" + std::to_string(s));
  for (const auto& [t, r] : f.remainder())
    if (t < 2) throw std::domain_error("sum_tail: remainder of order " + std::to_string(t) + " is not summable");

  const Precision bits = gamma.precision();
  const ExactRational x(first);
  const Ball log_x = ball_log(x, bits);

  struct TermState {
    int s;
    Ball value;          // b + l ln X
    ExactRational log;   // l
    ExactRational b_major;  // |p + g gamma| upper bound
    BigInt u = 1;        // alpha_d = u l, beta_d = u b + v l
    BigInt v = 0;
  };
  std::vector<TermState> states;
  states.reserve(f.terms().size());
  for (const auto& [s, c] : f.terms()) states.push_back({s, coefficient_value(c, gamma, log_x), c.log, plain_majorant(c)});

  // integral + f(X)/2
  Ball total = Ball::exact(0, bits);
  for (const auto& st : states) {
    const ExactRational inv(1, st.s - 1);
    Ball integral = (st.value * inv + Ball::exact(st.log * inv * inv, bits)) * inverse_power(first, st.s - 1);
    total += integral;
    total += st.value * (inverse_power(first, st.s) / 2);
  }

  // 4 / (2 pi)^(2J) with pi > 314159/100000
  const ExactRational inv_two_pi_sq = inverse_power(make_rational(2 * 314159, 100000), 2);
  ExactRational em_scale = 4;

  TailSum best;
  bool have_best = false;
  int growth = 0;
  PrecReal previous_bound;
  Ball corrections = Ball::exact(0, bits);

  for (int j = 1; j <= 400; ++j) {
    // derivative order 2j-1: correction term
    const int odd = 2 * j - 1;
    Ball derivative = Ball::exact(0, bits);
    for (auto& st : states) {
      const int u_shift = st.s + odd - 1;  // advance from order 2j-2 to 2j-1
      const BigInt next_u = -u_shift * st.u;
      const BigInt next_v = -u_shift * st.v + st.u;
      st.u = next_u;
      st.v = next_v;
      derivative += (st.value * ExactRational(st.u) + Ball::exact(ExactRational(st.v) * st.log, bits)) *
                    inverse_power(first, st.s + odd);
    }
    const ExactRational bern = bernoulli(2 * j) / ExactRational(factorial(2 * j));
    corrections -= derivative * bern;

    // derivative order 2j: remainder bound
    em_scale *= inv_two_pi_sq;
    Ball bound = Ball::exact(0, bits);
    for (auto& st : states) {
      const int u_shift = st.s + odd;
      const BigInt next_u = -u_shift * st.u;
      const BigInt next_v = -u_shift * st.v + st.u;
      st.u = next_u;
      st.v = next_v;
      const int t = st.s + 2 * j;
      const ExactRational alpha = rabs(ExactRational(st.u) * st.log);
      const ExactRational beta = rabs(ExactRational(st.u)) * st.b_major + rabs(ExactRational(st.v) * st.log);
      bound += log_power_integral(alpha, beta, t, log_x, first);
    }
    const PrecReal em_bound = mul_up(upper(bound), PrecReal(em_scale, kMinPrecision * 2));

    if (!have_best || em_bound < best.quadrature_bound) {
      best.value = total + corrections;
      best.quadrature_bound = em_bound;
      best.corrections = j;
      have_best = true;
    }
    if (em_bound <= target) break;
    if (j > 1 && em_bound > previous_bound) {
      if (++growth >= 3) break;
    } else {
      growth = 0;
    }
    previous_bound = em_bound;
  }

  const long y = first - 1;
  const Ball log_y = ball_log(ExactRational(y), bits);
  Ball rem = Ball::exact(0, bits);
  for (const auto& [t, r] : f.remainder()) rem += log_power_integral(r.log_scale, r.scale, t, log_y, y);
  best.remainder_bound = upper(rem);

  best.value.rad = add_up(add_up(best.value.rad, best.quadrature_bound), best.remainder_bound);
  return best;
}

}  // namespace hypersum

namespace hypersum {

CertifiedSum certified_sum(const PartialSum& partial, const ExpansionBuilder& expansion, int lowest_exponent,
                           double shift_scale, const PrecisionRequest& req) {
  constexpr double kLn10 = 2.302585092994046;
  constexpr long kMaxTerms = 1L << 17;
  const int digits = req.digits();
  const PrecReal target = pow10(-digits, kMinPrecision);
  const PrecReal tail_target = pow10(-digits, kMinPrecision) / 8;
  const PrecisionRequest inner = req.tighter(6);
  const Ball gamma = euler_gamma_ball(inner);
  const Precision bits = inner.bits() + 16;

  for (long n = 32; n <= kMaxTerms; n *= 2) {
    const double ratio = std::max(2.0, static_cast<double>(n) / std::max(1.0, shift_scale));
    int cutoff = lowest_exponent + static_cast<int>(std::ceil((digits + 3) * kLn10 / std::log(ratio))) + 2;
    const int max_cutoff = lowest_exponent + 4 * digits + 80;
    bool grow_terms = false;
    while (!grow_terms && cutoff <= max_cutoff) {
      LogPowerSeries f = expansion(cutoff);
      if (n < std::max(3L, f.valid_from()) + 1) break;
      TailSum tail = sum_tail(f, n + 1, gamma, tail_target);
      if (tail.value.rad * 2 <= target) {
        Precision work = bits;
        for (int attempt = 0; attempt < 6; ++attempt, work += 64) {
          Ball total = partial(n, work) + tail.value;
          if (total.rad <= target) return {total, n, cutoff, tail.corrections};
        }
        throw std::runtime_error("certified_sum: rounding error budget exhausted");
      }
      if (tail.remainder_bound * 8 > target)
        cutoff += std::max(4, cutoff / 4);
      else
        grow_terms = true;
    }
  }
  throw std::runtime_error("certified_sum: term budget exhausted");
}

}  // namespace hypersum
