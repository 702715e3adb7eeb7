#ifndef HYPERSUM_SPECIAL_FUNCTIONS_HPP
#define HYPERSUM_SPECIAL_FUNCTIONS_HPP

#include "hypersum/exact.hpp"
#include "hypersum/prec_real.hpp"

namespace hypersum {

// Every function below meets |result - exact| <= 10^(-digits). The *_ball
// variants return the value with a rigorous radius (truncation plus
// rounding), which is what the evaluators downstream propagate.

/// Riemann zeta at an integer m >= 2. Throws std::domain_error for m <= 1.
PrecReal zeta_int(int m, const PrecisionRequest& req);
Ball zeta_int_ball(int m, const PrecisionRequest& req);

/// Hurwitz zeta sum_{n>=0} (n+a)^(-m) for integer m >= 2 and rational a > 0,
/// by Euler-Maclaurin summation. Throws std::domain_error otherwise.
PrecReal hurwitz_zeta(int m, const ExactRational& a, const PrecisionRequest& req);
Ball hurwitz_zeta_ball(int m, const ExactRational& a, const PrecisionRequest& req);

/// Psi(x) for rational x > 0: upward recurrence to a large shifted argument,
/// then the asymptotic series. Throws std::domain_error for x <= 0.
PrecReal digamma(const ExactRational& x, const PrecisionRequest& req);
Ball digamma_ball(const ExactRational& x, const PrecisionRequest& req);

/// Euler-Mascheroni constant, defined as -Psi(1).
PrecReal euler_gamma(const PrecisionRequest& req);
Ball euler_gamma_ball(const PrecisionRequest& req);

PrecReal const_pi(const PrecisionRequest& req);
Ball const_pi_ball(const PrecisionRequest& req);
PrecReal const_ln2(const PrecisionRequest& req);
Ball const_ln2_ball(const PrecisionRequest& req);

/// B(x, y) = (x-1)! (y-1)! / (x+y-1)! for positive integers.
/// Throws std::domain_error for non-positive arguments.
ExactRational beta_int(long x, long y);

/// |B_{2j}| / (2j)! upper estimate in natural-log space, for planning
/// truncation orders before any multiple-precision work is done.
double log_bernoulli_ratio_estimate(int two_j);

}  // namespace hypersum

#endif  // HYPERSUM_SPECIAL_FUNCTIONS_HPP
