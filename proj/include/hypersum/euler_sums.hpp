#ifndef HYPERSUM_EULER_SUMS_HPP
#define HYPERSUM_EULER_SUMS_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypersum/exact.hpp"
#include "hypersum/prec_real.hpp"

namespace hypersum {

/// sigma(r, m) = sum_{n>=1} h_n^(r) / n^m only converges for m > r.
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class SumMethod { direct, closed, hurwitz };

std::string to_string(SumMethod method);
/// "direct", "closed" or "hurwitz"; throws std::invalid_argument.
SumMethod parse_method(const std::string& name);

struct SumQuery {
  int r = 1;
  int m = 2;
  SumMethod method = SumMethod::closed;
  int k = 0;  // nesting depth, hurwitz method only
  int digits = 15;

  /// Throws DivergenceError for m <= r, std::invalid_argument for the rest.
  void validate() const;
};

struct EvalResult {
  PrecReal value;
  PrecReal error_bound;  // absolute, <= 10^-digits
  long terms_used = 0;
  SumMethod method = SumMethod::closed;
  std::optional<int> k;

  Ball ball() const { return Ball::around(value, error_bound); }
};

/// zeta_H(m) = sum H_n / n^m through Euler's reduction to zeta values:
/// 2 zeta_H(m) = (m+2) zeta(m+1) - sum_{n=1}^{m-2} zeta(m-n) zeta(n+1).
/// Throws std::domain_error for m <= 1.
PrecReal zeta_H(int m, const PrecisionRequest& req);
Ball zeta_H_ball(int m, const PrecisionRequest& req);

/// mu(m, rho) = sum_{n>=1} 1 / (n^m (n + rho)) in closed form: an
/// alternating combination of zeta values plus (Psi(rho+1) + gamma) / rho^m,
/// the bracket taken as H_rho exactly for integer rho.
/// Throws std::domain_error unless m >= 1 and rho > 0.
PrecReal mu(int m, const ExactRational& rho, const PrecisionRequest& req);
Ball mu_ball(int m, const ExactRational& rho, const PrecisionRequest& req);

/// Closed form through Stirling numbers of the first kind, zeta_H, zeta
/// and mu.
EvalResult sigma_closed(const SumQuery& q);

/// The defining series: exact partial sum of h_n^(r) / n^m plus a
/// certified asymptotic tail.
EvalResult sigma_direct(const SumQuery& q);

/// sum_n h_n^(r-k-1) Z_k(n, m), Z_k the k-fold nested Hurwitz sum.
EvalResult sigma_hurwitz(const SumQuery& q);

/// Dispatches on q.method.
EvalResult evaluate(const SumQuery& q);

/// Z_k(n, m) = sum_{n <= i_1 <= ... <= i_k} zeta(m, i_k) written as
/// sum_s c_s(n) zeta(s, n) with polynomial c_s. Keys are s, values the
/// coefficients of c_s in increasing degree.
using NestedHurwitzForm = std::map<int, std::vector<ExactRational>>;

/// Exact reduction by sum_{i>=n} c(i) zeta(s, i) = sum_{j>=n} j^-s (C(j) - C(n-1)),
/// C the prefix-sum polynomial of c. Throws std::domain_error unless
/// k >= 0 and m >= k + 2.
NestedHurwitzForm nested_hurwitz_form(int m, int k);

/// Z_k(n, m) evaluated from the reduced form.
PrecReal hurwitz_nested_sum(long n, int m, int k, const PrecisionRequest& req);
Ball hurwitz_nested_sum_ball(long n, int m, int k, const PrecisionRequest& req);

/// 2 sum_{k>=1} zeta(m, k) / k as a certified series.
/// Throws std::domain_error for m <= 1.
PrecReal mezo_dil_identity_lhs(int m, const PrecisionRequest& req);
Ball mezo_dil_identity_lhs_ball(int m, const PrecisionRequest& req);

/// (m+2) zeta(m+1) - sum_{n=1}^{m-2} zeta(m-n) zeta(n+1), i.e. 2 zeta_H(m).
Ball mezo_dil_identity_rhs_ball(int m, const PrecisionRequest& req);

}  // namespace hypersum

#endif  // HYPERSUM_EULER_SUMS_HPP
