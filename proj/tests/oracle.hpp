#pragma once

// Brute-force reference enumerator, independent of the reach engine. It keeps
// its own marking representation (place name -> value multiset) and explores
// by naive recursion with linear searches. Slow on purpose; only correctness
// matters here.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ssynth/number.hpp"
#include "ssynth/prtnet.hpp"

namespace oracle {

using OMarking = std::map<std::string, std::vector<std::int64_t>>;  // sorted milli values

struct OFiring {
  std::string transition;
  std::vector<std::int64_t> values;  // bound values in parameter order, milli
  std::int64_t duration = 0;         // milli

  bool operator==(const OFiring&) const = default;
  auto operator<=>(const OFiring&) const = default;
};

struct OPath {
  std::vector<OFiring> firings;
  std::int64_t elapsed = 0;  // milli

  bool operator==(const OPath&) const = default;
  auto operator<=>(const OPath&) const = default;
};

OMarking initial_marking(const ssynth::PrTNet& net);

// Every enabled firing at `m`, any order.
std::vector<OFiring> enabled(const ssynth::PrTNet& net, const OMarking& m);

OMarking apply(const ssynth::PrTNet& net, const OMarking& m, const OFiring& f);

bool satisfies_goal(const ssynth::PrTNet& net, const OMarking& m);

// All simple paths (no marking revisited along the way) from the initial
// marking to any goal marking.
std::vector<OPath> goal_paths(const ssynth::PrTNet& net);

// Goal paths with elapsed <= bound (milli).
std::vector<OPath> goal_paths_within(const ssynth::PrTNet& net, std::int64_t bound);

// Exhaustive state count and total firing (edge) count over the reachable set.
struct OStats {
  std::size_t markings = 0;
  std::size_t firings = 0;
};
OStats reachable_stats(const ssynth::PrTNet& net);

}  // namespace oracle
