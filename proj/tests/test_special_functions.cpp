#include <doctest.h>

#include "hypersum/special_functions.hpp"
#include "support.hpp"

using namespace hypersum;
using test_support::distance;
using test_support::reference;
using test_support::tenth_power;

namespace {

// The ball must contain the reference value and be as tight as requested.
void check_enclosure(const Ball& b, const PrecReal& ref, int digits) {
  CHECK(b.rad <= tenth_power(-digits));
  CHECK(distance(b.mid, ref) <= b.rad + tenth_power(-48));
}

}  // namespace

TEST_CASE("zeta at integers matches reference values") {
  for (int d : {10, 25, 45}) {
    const PrecisionRequest req(d);
    for (int s = 2; s <= 10; ++s) check_enclosure(zeta_int_ball(s, req), reference("zeta_" + std::to_string(s)), d);
  }
}

TEST_CASE("constants") {
  const PrecisionRequest req(45);
  check_enclosure(euler_gamma_ball(req), reference("euler_gamma"), 45);
  check_enclosure(const_pi_ball(req), reference("pi"), 45);
  check_enclosure(const_ln2_ball(req), reference("ln2"), 45);
}

TEST_CASE("Hurwitz zeta at rational points") {
  const PrecisionRequest req(40);
  check_enclosure(hurwitz_zeta_ball(2, ExactRational(1, 2), req), reference("hurwitz_2_1/2"), 40);
  check_enclosure(hurwitz_zeta_ball(3, ExactRational(1, 3), req), reference("hurwitz_3_1/3"), 40);
  check_enclosure(hurwitz_zeta_ball(4, ExactRational(5, 2), req), reference("hurwitz_4_5/2"), 40);
  check_enclosure(hurwitz_zeta_ball(5, ExactRational(7), req), reference("hurwitz_5_7/1"), 40);
  check_enclosure(hurwitz_zeta_ball(3, ExactRational(7, 3), req), reference("hurwitz_3_7/3"), 40);
}

TEST_CASE("digamma at rational points") {
  const PrecisionRequest req(40);
  for (auto [p, q] : {std::pair{1, 2}, {3, 2}, {7, 2}, {1, 3}, {22, 7}})
    check_enclosure(digamma_ball(ExactRational(p, q), req),
                    reference("digamma_" + std::to_string(p) + "/" + std::to_string(q)), 40);
}

TEST_CASE("digamma at integers gives harmonic numbers") {
  const PrecisionRequest req(20);
  const Ball gamma = euler_gamma_ball(req);
  for (unsigned r = 0; r <= 50; ++r) {
    const Ball shifted = digamma_ball(ExactRational(r + 1), req) + gamma;
    CHECK(distance(shifted.mid, PrecReal(harmonic(r), 256)) <= tenth_power(-20) * 2);
  }
}

TEST_CASE("Hurwitz zeta at integers is zeta minus a partial sum") {
  const PrecisionRequest req(20);
  for (int m = 2; m <= 6; ++m) {
    const Ball z = zeta_int_ball(m, req);
    ExactRational head = 0;
    for (long n = 1; n <= 20; ++n) {
      const Ball expected = z - Ball::exact(head, 256);
      CHECK(distance(hurwitz_zeta(m, ExactRational(n), req), expected.mid) <= tenth_power(-20) * 2);
      BigInt power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
      head += make_rational(1, power);
    }
  }
}

TEST_CASE("large and small Hurwitz arguments") {
  const PrecisionRequest req(30);
  // zeta(2, 1/1000) is dominated by 10^6
  const Ball small = hurwitz_zeta_ball(2, ExactRational(1, 1000), req);
  const Ball shifted = hurwitz_zeta_ball(2, ExactRational(1001, 1000), req);
  CHECK(distance(small.mid - shifted.mid, PrecReal(1000000, 128)) <= tenth_power(-30) * 2);
  const Ball far = hurwitz_zeta_ball(3, ExactRational(100000), req);
  CHECK(far.mid > PrecReal(make_rational(1, BigInt("20000000000")), 128) - tenth_power(-30));
}

TEST_CASE("beta function at integers") {
  CHECK(beta_int(1, 1) == 1);
  CHECK(beta_int(3, 2) == ExactRational(1, 12));
  for (long r = 0; r <= 5; ++r)
    for (long n = 1; n <= 10; ++n) {
      BigInt product = 1;
      for (long i = 1; i <= r + 1; ++i) product *= n + i;
      CHECK(beta_int(r + 1, n + 1) == ExactRational(factorial(static_cast<unsigned>(r))) / ExactRational(product));
    }
}

TEST_CASE("domain errors") {
  const PrecisionRequest req(10);
  CHECK_THROWS_AS(zeta_int(1, req), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta(2, ExactRational(0), req), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta(2, ExactRational(-1, 2), req), std::domain_error);
  CHECK_THROWS_AS(digamma(ExactRational(0), req), std::domain_error);
  CHECK_THROWS_AS(beta_int(0, 3), std::domain_error);
}
