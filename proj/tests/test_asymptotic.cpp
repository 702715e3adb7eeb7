#include <doctest.h>

#include "hypersum/asymptotic.hpp"
#include "hypersum/special_functions.hpp"
#include "support.hpp"

using namespace hypersum;
using test_support::distance;
using test_support::tenth_power;

namespace {

const Ball& gamma_ball() {
  static const Ball g = euler_gamma_ball(PrecisionRequest(60));
  return g;
}

// Truncated expansion plus remainder bound must enclose the exact value.
void check_expansion(const LogPowerSeries& f, long x, const ExactRational& exact) {
  const Ball value = f.evaluate(ExactRational(x), gamma_ball());
  const PrecReal bound = add_up(value.rad, f.remainder_bound(ExactRational(x)));
  CHECK(distance(value.mid, PrecReal(exact, 512)) <= bound);
}

}  // namespace

TEST_CASE("harmonic expansion encloses H_x") {
  for (int cutoff : {2, 6, 12})
    for (long x : {10L, 40L, 200L}) check_expansion(harmonic_expansion(cutoff), x, harmonic(x));
}

TEST_CASE("hyperharmonic expansion encloses h_x^(r)") {
  for (unsigned r = 0; r <= 4; ++r)
    for (int cutoff : {3, 8})
      for (long x : {20L, 60L}) check_expansion(hyperharmonic_expansion(r, cutoff), x, hyperharmonic(x, r));
}

TEST_CASE("reciprocal shift expansion") {
  for (int cutoff : {2, 5, 9}) {
    const LogPowerSeries f = reciprocal_shift_expansion(ExactRational(3), cutoff);
    check_expansion(f, 25, ExactRational(1, 28));
  }
}

TEST_CASE("Hurwitz expansion encloses zeta(s, x)") {
  const PrecisionRequest req(40);
  for (int s = 2; s <= 5; ++s) {
    const LogPowerSeries f = hurwitz_expansion(s, s + 12);
    const long x = 30;
    const Ball exact = hurwitz_zeta_ball(s, ExactRational(x), req);
    const Ball value = f.evaluate(ExactRational(x), gamma_ball());
    CHECK(distance(value.mid, exact.mid) <= add_up(add_up(value.rad, exact.rad), f.remainder_bound(ExactRational(x))));
  }
}

TEST_CASE("product keeps exact coefficients") {
  // (1/x) * (1/x) = 1/x^2 with nothing left over
  const LogPowerSeries a = LogPowerSeries::monomial(1, 1, 10);
  const LogPowerSeries p = a * a;
  REQUIRE(p.terms().size() == 1);
  CHECK(p.terms().begin()->first == 2);
  CHECK(p.terms().begin()->second.plain == 1);
  CHECK(p.remainder().empty());
}

TEST_CASE("tail of sum 1/n^2") {
  const LogPowerSeries f = LogPowerSeries::monomial(2, 1, 30);
  const TailSum tail = sum_tail(f, 10, gamma_ball(), tenth_power(-40));
  const Ball zeta2 = zeta_int_ball(2, PrecisionRequest(45));
  ExactRational head = 0;
  for (long n = 1; n < 10; ++n) head += make_rational(1, BigInt(n * n));
  const PrecReal expected = zeta2.mid - PrecReal(head, 256);
  CHECK(distance(tail.value.mid, expected) <= add_up(tail.value.rad, zeta2.rad));
  CHECK(tail.value.rad < tenth_power(-12));
}

TEST_CASE("tail of a logarithmic series") {
  // sum_{n>=N} H_n / n^3 against zeta_H(3) = (5/4) zeta(4) minus the head
  const int cutoff = 24;
  const LogPowerSeries f = harmonic_expansion(cutoff - 3) * LogPowerSeries::monomial(3, 1, cutoff);
  const long first = 40;
  const TailSum tail = sum_tail(f, first, gamma_ball(), tenth_power(-30));
  ExactRational head = 0;
  for (long n = 1; n < first; ++n) head += harmonic(static_cast<std::uint64_t>(n)) / ExactRational(BigInt(n) * n * n);
  const Ball z4 = zeta_int_ball(4, PrecisionRequest(45));
  const PrecReal expected = z4.mid * PrecReal(ExactRational(5, 4), 256) - PrecReal(head, 256);
  CHECK(distance(tail.value.mid, expected) <= add_up(tail.value.rad, tenth_power(-44)));
  CHECK(tail.value.rad < tenth_power(-20));
}

TEST_CASE("certified sum of 1/n^3") {
  PartialSum partial = [](long count, Precision bits) {
    Ball total = Ball::exact(0, bits);
    for (long n = 1; n <= count; ++n) total += Ball::exact(make_rational(1, BigInt(n) * n * n), bits);
    return total;
  };
  ExpansionBuilder expansion = [](int cutoff) { return LogPowerSeries::monomial(3, 1, cutoff); };
  const CertifiedSum sum = certified_sum(partial, expansion, 3, 1.0, PrecisionRequest(30));
  const PrecReal z3 = test_support::reference("zeta_3");
  CHECK(sum.value.rad <= tenth_power(-30));
  CHECK(distance(sum.value.mid, z3) <= sum.value.rad + tenth_power(-48));
}

TEST_CASE("tail preconditions") {
  const LogPowerSeries slow = LogPowerSeries::monomial(1, 1, 10);
  CHECK_THROWS_AS(sum_tail(slow, 10, gamma_ball(), tenth_power(-10)), std::domain_error);
  const LogPowerSeries ok = LogPowerSeries::monomial(2, 1, 10);
  CHECK_THROWS_AS(sum_tail(ok, 2, gamma_ball(), tenth_power(-10)), std::domain_error);
}
