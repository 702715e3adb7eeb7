#include "hypersum/acceleration.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace hypersum {

namespace {

// Averages `levels` times; the result has `levels` fewer entries.
std::vector<PrecReal> averaged(std::vector<PrecReal> values, int levels) {
  for (int level = 0; level < levels; ++level) {
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
      values[i] += values[i + 1];
      values[i] /= 2;
    }
    values.pop_back();
  }
  return values;
}

}  // namespace

AcceleratedSum accelerate_alternating(const SeriesTerm& term, const PrecReal& tolerance, Precision bits,
                                      const AccelerationLimits& limits) {
  constexpr int kProbe = 4;  // top-level estimates inspected for bracketing
  std::vector<PrecReal> partial;
  PrecReal running(0, bits);
  AcceleratedSum out;
  std::optional<PrecReal> previous_estimate;
  for (long count = std::max<long>(limits.initial_terms, limits.max_levels + kProbe + 1);;
       count = std::min(2 * count, limits.max_raw_terms)) {
    while (static_cast<long>(partial.size()) < count) {
      running += term(static_cast<long>(partial.size()) + 1, bits);
      partial.push_back(running);
    }
    const int levels = limits.max_levels;
    const std::size_t window = static_cast<std::size_t>(levels + kProbe);
    std::vector<PrecReal> tail(partial.end() - static_cast<long>(window), partial.end());
    const std::vector<PrecReal> top = averaged(std::move(tail), levels);

    out.value = top.back();
    out.raw_terms = count;
    out.levels = levels;
    out.brackets = true;
    for (std::size_t i = 2; i < top.size(); ++i) {
      const int before = (top[i - 1] - top[i - 2]).sign();
      const int after = (top[i] - top[i - 1]).sign();
      if (before == 0 || after == 0 || before == after) out.brackets = false;
    }
    // The estimate from half as many raw terms; its distance tracks the
    // error of the coarser estimate and so overstates that of the finer one.
    if (previous_estimate) {
      out.residual = abs(out.value - *previous_estimate);
      out.converged = out.residual <= tolerance;
      if (out.converged) return out;
    } else {
      out.residual = abs(top.back() - top[top.size() - 2]);
    }
    if (count >= limits.max_raw_terms) return out;
    previous_estimate = out.value;
  }
}

}  // namespace hypersum
