#ifndef HYPERSUM_ACCELERATION_HPP
#define HYPERSUM_ACCELERATION_HPP

#include <functional>

#include "hypersum/prec_real.hpp"

namespace hypersum {

struct AcceleratedSum {
  PrecReal value;
  PrecReal residual;     // distance to the estimate from half the raw terms
  long raw_terms = 0;
  int levels = 0;
  bool brackets = false;  // top-level estimates alternate around the value
  bool converged = false; // residual met the requested tolerance
};

/// Term a_m (m >= 1) of an alternating series, signs included.
using SeriesTerm = std::function<PrecReal(long m, Precision bits)>;

struct AccelerationLimits {
  long max_raw_terms = 1000000;
  int max_levels = 30;
  long initial_terms = 64;
};

/// Iterated Euler transformation (repeated averaging of neighbouring
/// partial sums). The raw term count doubles until the residual is at most
/// `tolerance` or the limits are reached; the residual is an estimate, not
/// a bound, and is reported as achieved.
AcceleratedSum accelerate_alternating(const SeriesTerm& term, const PrecReal& tolerance, Precision bits,
                                      const AccelerationLimits& limits = {});

}  // namespace hypersum

#endif  // HYPERSUM_ACCELERATION_HPP
