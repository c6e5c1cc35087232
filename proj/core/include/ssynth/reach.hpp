#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ssynth/number.hpp"
#include "ssynth/prtnet.hpp"

namespace ssynth {

// Net execution: enabled-firing enumeration, reachability graph construction,
// EF goal evaluation, and goal-path enumeration. Everything here is
// deterministic: transitions fire in declaration order, bindings in ascending
// token-value order, nodes are numbered by BFS discovery.

// Canonical marking: one sorted token multiset per place (index as in
// PrTNet::places).
struct Marking {
  std::vector<std::vector<Number>> by_place;

  static Marking initial(const PrTNet& net);
  void canonicalize();
  bool operator==(const Marking&) const = default;
};

struct MarkingHash {
  std::size_t operator()(const Marking& m) const noexcept;
};

// Variable assignment of one firing, in transition parameter order.
struct Binding {
  std::vector<std::pair<std::string, Number>> assignments;

  const Number* find(std::string_view var) const;
  bool operator==(const Binding&) const = default;
};

struct Firing {
  std::string transition;
  Binding binding;
  Number duration;

  bool operator==(const Firing&) const = default;
};

struct ReachGraph {
  struct Edge {
    int src = 0;
    int dst = 0;
    Firing firing;
  };

  std::vector<Marking> nodes;          // node id = index; id 0 = M0
  std::vector<std::vector<int>> out;   // out-edge indices per node, in firing order
  std::vector<Edge> edges;
  bool truncated = false;
};

struct ReachLimits {
  std::size_t max_nodes = 100000;
  std::size_t max_depth = 64;
};

struct SolutionPath {
  std::vector<Firing> firings;
  std::vector<int> node_ids;  // visited nodes, starts at 0
  Number elapsed;             // sum of firing durations
  std::size_t ordinal = 0;    // 1-based position in enumeration order
};

enum class PathMode { SimpleGraph, DepthBoundedTree };

// All firings enabled at `m`: input patterns bound to distinct token
// instances, transitions in declaration order, bindings ordered by their
// value tuples ascending. Ordered variable tuples are distinct firings.
std::vector<Firing> enabled_firings(const PrTNet& net, const Marking& m);

// Applies one firing. Throws Error{NotEnabled} if the binding is stale and
// Error{CapacityExceeded} if an output place would overflow.
Marking fire(const PrTNet& net, const Marking& m, const Firing& f);

// Breadth-first graph over canonical markings, merging duplicates. Sets
// `truncated` instead of failing when a limit cuts the exploration short.
ReachGraph build_reach_graph(const PrTNet& net, const ReachLimits& limits = {});

bool marking_satisfies(const PrTNet& net, const Marking& m, const NetGoal& goal);

// True iff some reachable node satisfies the goal target (untimed EF).
bool eval_ef_goal(const PrTNet& net, const ReachGraph& g, const NetGoal& goal);

// Depth-first enumeration of every simple path (no repeated node) from node 0
// to a goal node, ordered by edge order. With `prune_bound`, partial paths
// whose elapsed time already exceeds the bound are discarded; this never
// changes the within-bound path set. DepthBoundedTree re-enumerates the same
// paths but caps their length at `max_depth` instead of relying on graph
// node identity. Throws Error{Truncated} on a truncated graph and
// Error{EmptyGoal} when the net has no goal.
std::vector<SolutionPath> enumerate_goal_paths(
    const PrTNet& net, const ReachGraph& g, const NetGoal& goal,
    PathMode mode = PathMode::SimpleGraph,
    std::optional<Number> prune_bound = std::nullopt,
    std::size_t max_depth = 64);

// Path listing block: "PATH <n>" header, one "Node <id>: transition <name>"
// plus binding line per step, closing node line.
std::string format_path(const PrTNet& net, const SolutionPath& p);

}  // namespace ssynth
