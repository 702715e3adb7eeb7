#ifndef HYPERSUM_EXACT_HPP
#define HYPERSUM_EXACT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace hypersum {

using BigInt = mpz_class;

/// Arbitrary-precision rational. Every value handed out by this library is
/// canonical: positive denominator, numerator and denominator coprime.
using ExactRational = mpq_class;

/// "num/den" in lowest terms, or a plain integer when den == 1.
std::string to_string(const ExactRational& q);
std::string to_string(const BigInt& z);

ExactRational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p", "p/q" or a terminating decimal such as "2.5".
/// Throws std::invalid_argument on malformed input.
ExactRational parse_rational(const std::string& text);

/// H_n; H_0 = 0.
ExactRational harmonic(std::uint64_t n);

/// h_n^(r) via the iterated-sum recurrence h_n^(r) = sum_{k<=n} h_k^(r-1),
/// h_n^(0) = 1/n. O(n r); used as the independent route.
/// Throws std::domain_error for n == 0.
ExactRational hyperharmonic_recurrence(std::uint64_t n, unsigned r);

/// h_n^(r); r == 0 gives 1/n, otherwise the binomial/harmonic closed form.
/// Throws std::domain_error for n == 0.
ExactRational hyperharmonic(std::uint64_t n, unsigned r);

/// C(n+r-1, r-1) (H_{n+r-1} - H_{r-1}). Throws std::domain_error when
/// n == 0 or r == 0.
ExactRational hyperharmonic_closed(std::uint64_t n, unsigned r);

/// Unsigned Stirling number of the first kind [n; k].
/// Throws std::domain_error when k > n.
BigInt stirling_first(unsigned n, unsigned k);

/// Bernoulli number with B_1 = -1/2.
ExactRational bernoulli(unsigned n);

/// C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

BigInt factorial(unsigned n);

/// Coefficient list of x^n, n = 0..max_degree, in the Cauchy product of
/// sum_{k>=1} x^k / k and sum_{j>=0} C(j+r-1, r-1) x^j, i.e. of
/// -ln(1-x) / (1-x)^r.
std::vector<ExactRational> log_over_power_series(unsigned r, unsigned max_degree);

}  // namespace hypersum

#endif  // HYPERSUM_EXACT_HPP
