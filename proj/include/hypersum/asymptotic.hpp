#ifndef HYPERSUM_ASYMPTOTIC_HPP
#define HYPERSUM_ASYMPTOTIC_HPP

// Certified tails of slowly convergent series.
//
// A summand f(x) is represented for x >= valid_from as
//
//   f(x) = sum_s (p_s + g_s*gamma + l_s*ln x) x^(-s) + e(x),
//   |e(x)| <= sum_t (A_t ln x + B_t) x^(-t),
//
// with every p_s, g_s, l_s, A_t, B_t an exact rational (gamma is the
// Euler-Mascheroni constant, the only irrational that enters through
// harmonic-number asymptotics). Exact coefficients mean that cancellation
// between leading terms is exact. The tail sum_{n>=N} f(n) is then
// obtained by Euler-Maclaurin summation of the truncated part, with the
// remainder integral bounded in closed form, plus an integral bound on
// sum_{n>=N} |e(n)|.

#include <functional>
#include <map>
#include <vector>

#include "hypersum/exact.hpp"
#include "hypersum/prec_real.hpp"

namespace hypersum {

struct SeriesCoefficient {
  ExactRational plain = 0;
  ExactRational gamma = 0;
  ExactRational log = 0;

  bool is_zero() const { return sgn(plain) == 0 && sgn(gamma) == 0 && sgn(log) == 0; }
};

/// (log_scale ln x + scale) x^(-order) bound on part of the remainder.
struct RemainderComponent {
  ExactRational log_scale = 0;
  ExactRational scale = 0;
};

class LogPowerSeries {
 public:
  /// Terms with exponent above `cutoff` are folded into the remainder.
  explicit LogPowerSeries(int cutoff, long valid_from = 1);

  static LogPowerSeries constant(const ExactRational& c, int cutoff);
  /// c x^(-exponent)
  static LogPowerSeries monomial(int exponent, const ExactRational& c, int cutoff);
  /// sum_d coeffs[d] x^d
  static LogPowerSeries polynomial(const std::vector<ExactRational>& coeffs, int cutoff);

  int cutoff() const { return cutoff_; }
  long valid_from() const { return valid_from_; }
  const std::map<int, SeriesCoefficient>& terms() const { return terms_; }
  const std::map<int, RemainderComponent>& remainder() const { return remainder_; }

  void add_term(int exponent, const SeriesCoefficient& c);
  void add_remainder(int order, const RemainderComponent& r);
  void require_valid_from(long x0);

  LogPowerSeries& operator+=(const LogPowerSeries& rhs);
  LogPowerSeries& operator-=(const LogPowerSeries& rhs);
  LogPowerSeries& operator*=(const ExactRational& rhs);

  /// Value of the truncated part at x (remainder excluded).
  Ball evaluate(const ExactRational& x, const Ball& gamma) const;
  /// Upper bound on |e(x)| for x >= valid_from.
  PrecReal remainder_bound(const ExactRational& x) const;

 private:
  int cutoff_;
  long valid_from_;
  std::map<int, SeriesCoefficient> terms_;
  std::map<int, RemainderComponent> remainder_;
};

/// Product truncated at min(cutoff). Throws std::logic_error if the product
/// would need ln^2 x, gamma^2 or gamma*ln x, which no caller produces.
LogPowerSeries operator*(const LogPowerSeries& lhs, const LogPowerSeries& rhs);
LogPowerSeries operator+(LogPowerSeries lhs, const LogPowerSeries& rhs);
LogPowerSeries operator-(LogPowerSeries lhs, const LogPowerSeries& rhs);

/// 1/(x + shift) for shift >= 0; remainder shift^T x^(-T-1).
LogPowerSeries reciprocal_shift_expansion(const ExactRational& shift, int cutoff);

/// H_x = ln x + gamma + 1/(2x) - sum_k B_2k/(2k) x^(-2k); enveloping
/// remainder bounded by the first omitted term.
LogPowerSeries harmonic_expansion(int cutoff);

/// zeta(s, x) = x^(1-s)/(s-1) + x^(-s)/2 + sum_j B_2j/(2j)! (s)_(2j-1) x^(-s-2j+1);
/// remainder bounded by the first omitted term (s > 1 real, x > 0).
LogPowerSeries hurwitz_expansion(int s, int cutoff);

/// h_x^(r) for integer x; r = 0 gives x^-1, r >= 1 gives
/// C(x+r-1, r-1) (H_x + sum_{i=1}^{r-1} 1/(x+i) - H_{r-1}).
LogPowerSeries hyperharmonic_expansion(unsigned r, int cutoff);

struct TailSum {
  Ball value;               // radius includes every bound below plus rounding
  PrecReal quadrature_bound;  // Euler-Maclaurin remainder
  PrecReal remainder_bound;   // sum of the expansion remainder over the tail
  int corrections = 0;
};

/// sum_{n >= first} f(n). Requires first - 1 >= max(3, valid_from), every
/// term exponent >= 2 and every remainder order >= 2; throws
/// std::domain_error otherwise. `target` is the Euler-Maclaurin truncation
/// goal; the order stops early once it is met or the bound starts growing.
TailSum sum_tail(const LogPowerSeries& f, long first, const Ball& gamma, const PrecReal& target);

/// Partial sum of the first `count` terms at working precision `bits`.
using PartialSum = std::function<Ball(long count, Precision bits)>;
/// Expansion of the summand, truncated at exponent `cutoff`.
using ExpansionBuilder = std::function<LogPowerSeries(int cutoff)>;

struct CertifiedSum {
  Ball value;
  long terms = 0;
  int cutoff = 0;
  int corrections = 0;
};

/// Full series sum_{n>=1} f(n) = partial(N) + certified tail, with N and
/// the expansion cutoff grown until the enclosure radius is at most
/// 10^(-digits). `lowest_exponent` is the smallest x-exponent in the
/// expansion and `shift_scale` the largest shift appearing in it (the
/// expansion remainders scale like (shift_scale / N)^cutoff).
/// Throws std::runtime_error if the budget is exhausted.
CertifiedSum certified_sum(const PartialSum& partial, const ExpansionBuilder& expansion, int lowest_exponent,
                           double shift_scale, const PrecisionRequest& req);

/// Rational upper bound on gamma used for majorants.
ExactRational gamma_upper_bound();

}  // namespace hypersum

#endif  // HYPERSUM_ASYMPTOTIC_HPP
