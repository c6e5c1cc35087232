#pragma once

#include <span>
#include <string>
#include <vector>

#include "ssynth/number.hpp"
#include "ssynth/reach.hpp"

namespace ssynth {

// Post-hoc path filter: a path is a solution when the sum of its event
// durations stays within the goal bound.

struct TimedVerdict {
  SolutionPath path;
  Number elapsed;
  bool within_bound = false;
};

// Exact sum of the per-firing durations.
Number path_elapsed(const SolutionPath& p);

// One verdict per path, in the original order.
std::vector<TimedVerdict> filter_paths(std::span<const SolutionPath> paths, Number t_max);

// Path listing with a trailing "t_elapsed = <n>" line per block.
std::string format_verdict(const PrTNet& net, const TimedVerdict& v);

}  // namespace ssynth
