#include <doctest.h>

#include <random>

#include "hypersum/exact.hpp"

using namespace hypersum;

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(1) == 1);
  CHECK(harmonic(2) == ExactRational(3, 2));
  CHECK(harmonic(4) == ExactRational(25, 12));
  ExactRational running = 0;
  for (std::uint64_t n = 1; n <= 200; ++n) {
    running += make_rational(1, BigInt(n));
    CHECK(harmonic(n) == running);
  }
}

TEST_CASE("hyperharmonic recurrence and closed form agree") {
  for (unsigned r = 1; r <= 10; ++r)
    for (std::uint64_t n = 1; n <= 30; ++n) CHECK(hyperharmonic_recurrence(n, r) == hyperharmonic_closed(n, r));
}

TEST_CASE("hyperharmonic small values") {
  CHECK(hyperharmonic(5, 0) == ExactRational(1, 5));
  CHECK(hyperharmonic(3, 1) == ExactRational(11, 6));
  // h_2^(2) = H_1 + H_2
  CHECK(hyperharmonic(2, 2) == ExactRational(5, 2));
  // h_1^(r) = 1 for every r
  for (unsigned r = 0; r <= 12; ++r) CHECK(hyperharmonic(1, r) == 1);
}

TEST_CASE("hyperharmonic partial-sum property") {
  for (unsigned r = 1; r <= 6; ++r) {
    ExactRational running = 0;
    for (std::uint64_t n = 1; n <= 25; ++n) {
      running += hyperharmonic(n, r - 1);
      CHECK(hyperharmonic(n, r) == running);
    }
  }
}

TEST_CASE("hyperharmonic rejects n = 0") {
  CHECK_THROWS_AS(hyperharmonic_closed(0, 2), std::domain_error);
  CHECK_THROWS_AS(hyperharmonic(0, 2), std::domain_error);
}

TEST_CASE("Stirling numbers of the first kind") {
  CHECK(stirling_first(0, 0) == 1);
  CHECK(stirling_first(4, 1) == 6);
  CHECK(stirling_first(4, 2) == 11);
  CHECK(stirling_first(4, 3) == 6);
  CHECK(stirling_first(4, 4) == 1);
  CHECK(stirling_first(5, 0) == 0);
  for (unsigned n = 1; n <= 15; ++n) {
    BigInt row = 0;
    for (unsigned k = 0; k <= n; ++k) row += stirling_first(n, k);
    CHECK(row == factorial(n));
  }
  CHECK_THROWS(stirling_first(3, 4));
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == ExactRational(-1, 2));
  CHECK(bernoulli(2) == ExactRational(1, 6));
  CHECK(bernoulli(4) == ExactRational(-1, 30));
  CHECK(bernoulli(12) == ExactRational(-691, 2730));
  CHECK(bernoulli(20) == ExactRational(-174611, 330));
  for (unsigned n = 3; n <= 41; n += 2) CHECK(bernoulli(n) == 0);
}

TEST_CASE("binomial and factorial") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("generating function coefficients") {
  for (unsigned r = 1; r <= 5; ++r) {
    const auto coeffs = log_over_power_series(r, 20);
    REQUIRE(coeffs.size() == 21);
    CHECK(coeffs[0] == 0);
    for (std::uint64_t n = 1; n <= 20; ++n) CHECK(coeffs[n] == hyperharmonic(n, r));
  }
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == ExactRational(1, 2));
  CHECK(parse_rational("-0.25") == ExactRational(-1, 4));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(ExactRational(6, 4)) == "3/2");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational(""));
}

TEST_CASE("make_rational canonicalizes") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  for (int i = 0; i < 200; ++i) {
    const long p = dist(rng);
    long q = dist(rng);
    if (q == 0) q = 1;
    const ExactRational a = make_rational(p, q);
    CHECK(a * q == p);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
    CHECK(g == 1);
    CHECK(sgn(a.get_den()) > 0);
  }
}
