#include "hypersum/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hypersum {

namespace {

constexpr double kLn10 = 2.302585092994046;
constexpr double kTwoPi = 6.283185307179586;

// Truncation target for the asymptotic parts: 10^-(digits+2).
double truncation_target_log(const PrecisionRequest& req) { return -(req.digits() + 2) * kLn10; }

// Extra working bits for `terms` accumulated roundings.
Precision accumulation_bits(long terms) {
  return static_cast<Precision>(std::ceil(std::log2(static_cast<double>(std::max(terms, 2L))))) + 4;
}

BigInt rising_factorial(long base, long count) {
  BigInt out = 1;
  for (long i = 0; i < count; ++i) out *= base + i;
  return out;
}

struct EulerMaclaurinPlan {
  long n = 0;        // explicit terms 0..n-1
  int corrections = 0;  // Bernoulli corrections j = 1..corrections
};

EulerMaclaurinPlan plan_hurwitz(int m, double a, double target_log, long min_n = 2) {
  long n = std::max<long>(min_n, static_cast<long>(std::ceil(-target_log / kTwoPi)) + m + 2);
  for (;;) {
    const double x = static_cast<double>(n) + a;
    double previous = std::numeric_limits<double>::infinity();
    for (int j = 1; j < 100000; ++j) {
      const double estimate = log_bernoulli_ratio_estimate(2 * j) + std::lgamma(m + 2.0 * j - 1.0) -
                              std::lgamma(static_cast<double>(m)) - (m + 2.0 * j - 1.0) * std::log(x);
      if (estimate < target_log) return {n, j - 1};
      if (estimate > previous) break;
      previous = estimate;
    }
    n *= 2;
  }
}

Ball hurwitz_impl(int m, const ExactRational& a, const PrecisionRequest& req) {
  const double a_approx = a.get_d();
  const double target_log = truncation_target_log(req);
  const PrecReal target = pow10(-(req.digits() + 2), kMinPrecision);

  EulerMaclaurinPlan plan = plan_hurwitz(m, a_approx, target_log);
  for (;;) {
    // a < 1 makes the leading terms as large as a^-m.
    const double head_bits = a_approx < 1.0 ? m * std::log2(1.0 / a_approx) : 0.0;
    const Precision bits = req.bits() + static_cast<Precision>(std::ceil(head_bits)) +
                           accumulation_bits(plan.n + plan.corrections);

    PrecReal sum(0, bits);
    for (long n = 0; n < plan.n; ++n) sum += pow(PrecReal(ExactRational(n) + a, bits), -m);
    PrecReal mass = sum;

    const PrecReal x(ExactRational(plan.n) + a, bits);
    const PrecReal x_pow = pow(x, -m);        // X^-m
    const PrecReal inv_x2 = pow(x, -2);
    PrecReal tail = x_pow * x / (m - 1);      // X^(1-m)/(m-1)
    tail += x_pow / 2;
    PrecReal power = x_pow / x;               // X^(-m-1)
    for (int j = 1; j <= plan.corrections; ++j) {
      const ExactRational coeff =
          bernoulli(2 * j) / ExactRational(factorial(2 * j)) * ExactRational(rising_factorial(m, 2 * j - 1));
      PrecReal term = PrecReal(coeff, bits) * power;
      mass += abs(term);
      tail += term;
      power *= inv_x2;
    }
    const int j = plan.corrections + 1;
    const ExactRational omitted_coeff =
        bernoulli(2 * j) / ExactRational(factorial(2 * j)) * ExactRational(rising_factorial(m, 2 * j - 1));
    const PrecReal omitted = abs_up(PrecReal(omitted_coeff, bits) * power);
    if (omitted > target) {
      plan = plan_hurwitz(m, a_approx, target_log, 2 * plan.n);
      continue;
    }
    mass += abs(tail);
    sum += tail;

    const long ops = 4 * (plan.n + plan.corrections + 8);
    PrecReal radius = add_up(omitted, mul_up(mul_up(PrecReal(ops, kMinPrecision), unit_roundoff(bits)), mass));
    return Ball(sum, radius);
  }
}

struct DigammaPlan {
  long shift = 0;
  int corrections = 0;
};

DigammaPlan plan_digamma(double x, double target_log, double min_y = 0.0) {
  double y = std::max({x, min_y, -target_log / kTwoPi + 4.0});
  for (;;) {
    double previous = std::numeric_limits<double>::infinity();
    for (int j = 1; j < 100000; ++j) {
      // |B_2j| / (2j y^2j)
      const double estimate =
          log_bernoulli_ratio_estimate(2 * j) + std::lgamma(2.0 * j + 1.0) - std::log(2.0 * j) - 2.0 * j * std::log(y);
      if (estimate < target_log) return {static_cast<long>(std::ceil(std::max(0.0, y - x))), j - 1};
      if (estimate > previous) break;
      previous = estimate;
    }
    y *= 2;
  }
}

Ball digamma_impl(const ExactRational& x, const PrecisionRequest& req) {
  const double x_approx = x.get_d();
  const double target_log = truncation_target_log(req);
  const PrecReal target = pow10(-(req.digits() + 2), kMinPrecision);
  DigammaPlan plan = plan_digamma(x_approx, target_log);
  for (;;) {
    const double head_bits = x_approx < 1.0 ? std::log2(1.0 / x_approx) : 0.0;
    const Precision bits =
        req.bits() + static_cast<Precision>(std::ceil(head_bits)) + accumulation_bits(plan.shift + plan.corrections);

    PrecReal shift_sum(0, bits);
    for (long i = 0; i < plan.shift; ++i) shift_sum += PrecReal(1, bits) / PrecReal(x + ExactRational(i), bits);

    const PrecReal y(x + ExactRational(plan.shift), bits);
    const PrecReal inv_y2 = pow(y, -2);
    PrecReal value = log(y) - PrecReal(1, bits) / (y * 2);
    PrecReal mass = abs(value) + shift_sum;
    PrecReal power = inv_y2;
    for (int j = 1; j <= plan.corrections; ++j) {
      PrecReal term = PrecReal(bernoulli(2 * j) / ExactRational(2 * j), bits) * power;
      mass += abs(term);
      value -= term;
      power *= inv_y2;
    }
    const int j = plan.corrections + 1;
    const PrecReal omitted = abs_up(PrecReal(bernoulli(2 * j) / ExactRational(2 * j), bits) * power);
    if (omitted > target) {
      plan = plan_digamma(x_approx, target_log, 2 * (x_approx + plan.shift));
      continue;
    }
    value -= shift_sum;
    const long ops = 4 * (plan.shift + plan.corrections + 8);
    PrecReal radius = add_up(omitted, mul_up(mul_up(PrecReal(ops, kMinPrecision), unit_roundoff(bits)), mass));
    return Ball(value, radius);
  }
}

void require_zeta_order(int m) {
  if (m <= 1) throw std::domain_error("zeta: order must be >= 2 (pole at 1)");
}

}  // namespace

double log_bernoulli_ratio_estimate(int two_j) {
  // |B_2j|/(2j)! = 2 zeta(2j)/(2 pi)^(2j) <= 2 * 1.645 / (2 pi)^(2j)
  return std::log(3.3) - two_j * std::log(kTwoPi);
}

Ball hurwitz_zeta_ball(int m, const ExactRational& a, const PrecisionRequest& req) {
  require_zeta_order(m);
  if (sgn(a) <= 0) throw std::domain_error("hurwitz_zeta: a must be positive");
  return hurwitz_impl(m, a, req);
}

PrecReal hurwitz_zeta(int m, const ExactRational& a, const PrecisionRequest& req) {
  return hurwitz_zeta_ball(m, a, req).mid;
}

Ball zeta_int_ball(int m, const PrecisionRequest& req) {
  require_zeta_order(m);
  return hurwitz_impl(m, ExactRational(1), req);
}

PrecReal zeta_int(int m, const PrecisionRequest& req) { return zeta_int_ball(m, req).mid; }

Ball digamma_ball(const ExactRational& x, const PrecisionRequest& req) {
  if (sgn(x) <= 0) throw std::domain_error("digamma: argument must be positive");
  return digamma_impl(x, req);
}

PrecReal digamma(const ExactRational& x, const PrecisionRequest& req) { return digamma_ball(x, req).mid; }

Ball euler_gamma_ball(const PrecisionRequest& req) { return -digamma_ball(ExactRational(1), req); }

PrecReal euler_gamma(const PrecisionRequest& req) { return euler_gamma_ball(req).mid; }

Ball const_pi_ball(const PrecisionRequest& req) {
  PrecReal value(req.bits());
  mpfr_const_pi(value.raw(), MPFR_RNDN);
  return Ball(value, mul_up(PrecReal(4, kMinPrecision), unit_roundoff(req.bits())));
}

PrecReal const_pi(const PrecisionRequest& req) { return const_pi_ball(req).mid; }

Ball const_ln2_ball(const PrecisionRequest& req) {
  PrecReal value(req.bits());
  mpfr_const_log2(value.raw(), MPFR_RNDN);
  return Ball(value, unit_roundoff(req.bits()));
}

PrecReal const_ln2(const PrecisionRequest& req) { return const_ln2_ball(req).mid; }

ExactRational beta_int(long x, long y) {
  if (x < 1 || y < 1) throw std::domain_error("beta_int: arguments must be positive integers");
  return make_rational(factorial(static_cast<unsigned>(x - 1)) * factorial(static_cast<unsigned>(y - 1)),
                       factorial(static_cast<unsigned>(x + y - 1)));
}

}  // namespace hypersum
