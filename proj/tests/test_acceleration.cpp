#include <doctest.h>

#include "hypersum/acceleration.hpp"
#include "support.hpp"

using namespace hypersum;
using test_support::distance;
using test_support::reference;
using test_support::tenth_power;

TEST_CASE("alternating harmonic series gives ln 2") {
  SeriesTerm term = [](long m, Precision bits) {
    PrecReal t = PrecReal(1, bits) / PrecReal(m, bits);
    return m % 2 == 1 ? t : -t;
  };
  const AcceleratedSum sum = accelerate_alternating(term, tenth_power(-25), 200);
  CHECK(sum.converged);
  CHECK(distance(sum.value, reference("ln2")) <= tenth_power(-24));
  CHECK(sum.residual <= tenth_power(-25));
  CHECK(sum.levels == 30);
}

TEST_CASE("Leibniz series gives pi/4") {
  SeriesTerm term = [](long m, Precision bits) {
    PrecReal t = PrecReal(1, bits) / PrecReal(2 * m - 1, bits);
    return m % 2 == 1 ? t : -t;
  };
  const AcceleratedSum sum = accelerate_alternating(term, tenth_power(-20), 200);
  CHECK(distance(sum.value * 4, reference("pi")) <= tenth_power(-19));
  CHECK(sum.brackets);
}

TEST_CASE("raw term cap is honoured and reported") {
  SeriesTerm term = [](long m, Precision bits) {
    PrecReal t = PrecReal(1, bits) / PrecReal(m, bits);
    return m % 2 == 1 ? t : -t;
  };
  AccelerationLimits limits;
  limits.max_raw_terms = 64;
  limits.max_levels = 5;
  const AcceleratedSum sum = accelerate_alternating(term, tenth_power(-40), 200, limits);
  CHECK_FALSE(sum.converged);
  CHECK(sum.raw_terms == 64);
  CHECK(sum.residual > tenth_power(-40));
}
