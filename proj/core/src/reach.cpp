#include "ssynth/reach.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace ssynth {

Marking Marking::initial(const PrTNet& net) {
  Marking m;
  m.by_place = net.initial_marking;
  m.canonicalize();
  return m;
}

void Marking::canonicalize() {
  for (auto& toks : by_place) std::sort(toks.begin(), toks.end());
}

std::size_t MarkingHash::operator()(const Marking& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const auto& toks : m.by_place) {
    mix(toks.size());
    for (const auto& t : toks) mix(std::hash<Number>{}(t));
  }
  return h;
}

const Number* Binding::find(std::string_view var) const {
  for (const auto& [v, val] : assignments)
    if (v == var) return &val;
  return nullptr;
}

namespace {

Number eval_duration(const DurationExpr& d, const Binding& b) {
  switch (d.kind) {
    case DurationExpr::Kind::None:
      return Number{};
    case DurationExpr::Kind::Single: {
      const Number* v = b.find(d.vars[0]);
      return v ? *v : Number{};
    }
    case DurationExpr::Kind::MaxOf: {
      Number best{};
      bool first = true;
      for (const auto& var : d.vars) {
        const Number* v = b.find(var);
        if (!v) continue;
        best = first ? *v : Number::max(best, *v);
        first = false;
      }
      return best;
    }
  }
  return Number{};
}

bool remove_one(std::vector<Number>& pool, Number v) {
  auto it = std::find(pool.begin(), pool.end(), v);
  if (it == pool.end()) return false;
  pool.erase(it);
  return true;
}

// Per-transition binding enumeration state. Pools hold the tokens still
// available per place after constants and earlier variables are consumed.
struct Enumerator {
  const PrTNet& net;
  const NetTransition& tr;
  std::vector<std::vector<Number>> pools;       // by place index
  std::vector<int> var_place;                   // per param, input place index or -1
  std::optional<Number> torch;
  Binding binding;
  std::vector<Firing>* out;

  void run(std::size_t param_idx) {
    if (param_idx == tr.params.size()) {
      Firing f{tr.name, binding, eval_duration(tr.duration, binding)};
      out->push_back(std::move(f));
      return;
    }
    const std::string& var = tr.params[param_idx];
    int pi = var_place[param_idx];
    if (pi < 0) return;  // parameter not bound by any input pattern
    auto& pool = pools[pi];
    Number prev{};
    bool have_prev = false;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      Number v = pool[i];  // ascending; duplicates are adjacent
      if (have_prev && v == prev) continue;
      prev = v;
      have_prev = true;
      if (torch && net.is_torch_var(var) != (v == *torch)) continue;
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
      binding.assignments.emplace_back(var, v);
      run(param_idx + 1);
      binding.assignments.pop_back();
      pool.insert(pool.begin() + static_cast<std::ptrdiff_t>(i), v);
    }
  }
};

}  // namespace

std::vector<Firing> enabled_firings(const PrTNet& net, const Marking& m) {
  std::vector<Firing> out;
  auto torch = net.torch_value();
  for (const auto& tr : net.transitions) {
    Enumerator en{net, tr, m.by_place, {}, torch, {}, &out};
    en.var_place.assign(tr.params.size(), -1);

    bool feasible = true;
    for (const auto& in : tr.inputs) {
      int pi = net.place_index(in.place);
      if (pi < 0) {
        feasible = false;
        break;
      }
      for (const auto& e : in.elems) {
        if (e.kind == PatternElem::Kind::Const) {
          if (!remove_one(en.pools[static_cast<std::size_t>(pi)], e.value)) {
            feasible = false;
            break;
          }
        } else {
          for (std::size_t p = 0; p < tr.params.size(); ++p)
            if (tr.params[p] == e.var) en.var_place[p] = pi;
        }
      }
      if (!feasible) break;
    }
    if (!feasible) continue;
    en.run(0);
  }
  return out;
}

Marking fire(const PrTNet& net, const Marking& m, const Firing& f) {
  const NetTransition* tr = nullptr;
  for (const auto& t : net.transitions)
    if (t.name == f.transition) tr = &t;
  if (!tr) throw Error("NotEnabled", f.transition);

  Marking next = m;
  auto value_of = [&](const PatternElem& e) -> Number {
    if (e.kind == PatternElem::Kind::Const) return e.value;
    const Number* v = f.binding.find(e.var);
    if (!v) throw Error("NotEnabled", f.transition + ": unbound ?" + e.var);
    return *v;
  };

  for (const auto& in : tr->inputs) {
    int pi = net.place_index(in.place);
    if (pi < 0) throw Error("NotEnabled", f.transition + ": no place " + in.place);
    for (const auto& e : in.elems)
      if (!remove_one(next.by_place[static_cast<std::size_t>(pi)], value_of(e)))
        throw Error("NotEnabled", f.transition);
  }
  for (const auto& o : tr->outputs) {
    int pi = net.place_index(o.place);
    if (pi < 0) throw Error("NotEnabled", f.transition + ": no place " + o.place);
    auto& pool = next.by_place[static_cast<std::size_t>(pi)];
    for (const auto& e : o.elems) pool.push_back(value_of(e));
    if (auto cap = net.capacity_of(o.place))
      if (static_cast<std::int64_t>(pool.size()) > *cap)
        throw Error("CapacityExceeded", o.place);
  }
  next.canonicalize();
  return next;
}

ReachGraph build_reach_graph(const PrTNet& net, const ReachLimits& limits) {
  ReachGraph g;
  std::unordered_map<Marking, int, MarkingHash> index;
  std::vector<std::size_t> depth;

  g.nodes.push_back(Marking::initial(net));
  g.out.emplace_back();
  index.emplace(g.nodes[0], 0);
  depth.push_back(0);

  std::deque<int> queue{0};
  while (!queue.empty()) {
    int src = queue.front();
    queue.pop_front();
    auto firings = enabled_firings(net, g.nodes[static_cast<std::size_t>(src)]);
    if (depth[static_cast<std::size_t>(src)] >= limits.max_depth) {
      if (!firings.empty()) g.truncated = true;
      continue;
    }
    for (auto& f : firings) {
      Marking dst = fire(net, g.nodes[static_cast<std::size_t>(src)], f);
      auto it = index.find(dst);
      int dst_id;
      if (it == index.end()) {
        if (g.nodes.size() >= limits.max_nodes) {
          g.truncated = true;
          continue;
        }
        dst_id = static_cast<int>(g.nodes.size());
        g.nodes.push_back(dst);
        g.out.emplace_back();
        depth.push_back(depth[static_cast<std::size_t>(src)] + 1);
        index.emplace(std::move(dst), dst_id);
        queue.push_back(dst_id);
      } else {
        dst_id = it->second;
      }
      g.out[static_cast<std::size_t>(src)].push_back(static_cast<int>(g.edges.size()));
      g.edges.push_back({src, dst_id, std::move(f)});
    }
  }
  return g;
}

bool marking_satisfies(const PrTNet& net, const Marking& m, const NetGoal& goal) {
  if (goal.target == NetGoal::Target::ExactPlace) {
    if (goal.place.empty()) return false;
    int pi = net.place_index(goal.place);
    if (pi < 0) return false;
    std::vector<Number> want = goal.tokens;
    std::sort(want.begin(), want.end());
    return m.by_place[static_cast<std::size_t>(pi)] == want;
  }
  if (goal.conds.empty()) return false;
  for (const auto& [tok, place] : goal.conds) {
    int pi = net.place_index(place);
    if (pi < 0) return false;
    const auto& pool = m.by_place[static_cast<std::size_t>(pi)];
    if (std::find(pool.begin(), pool.end(), tok) == pool.end()) return false;
  }
  return true;
}

bool eval_ef_goal(const PrTNet& net, const ReachGraph& g, const NetGoal& goal) {
  for (const auto& m : g.nodes)
    if (marking_satisfies(net, m, goal)) return true;
  return false;
}

namespace {

struct PathSearch {
  const PrTNet& net;
  const ReachGraph& g;
  std::vector<char> is_goal;
  std::vector<char> on_path;
  std::vector<Firing> firings;
  std::vector<int> node_ids;
  Number elapsed;
  std::optional<Number> prune_bound;
  std::optional<std::size_t> depth_cap;
  std::vector<SolutionPath>* out;

  void dfs(int node) {
    if (is_goal[static_cast<std::size_t>(node)]) {
      SolutionPath p{firings, node_ids, elapsed, out->size() + 1};
      out->push_back(std::move(p));
    }
    if (depth_cap && firings.size() >= *depth_cap) return;
    for (int ei : g.out[static_cast<std::size_t>(node)]) {
      const ReachGraph::Edge& e = g.edges[static_cast<std::size_t>(ei)];
      if (on_path[static_cast<std::size_t>(e.dst)]) continue;
      Number next_elapsed = elapsed + e.firing.duration;
      if (prune_bound && next_elapsed > *prune_bound) continue;
      on_path[static_cast<std::size_t>(e.dst)] = 1;
      firings.push_back(e.firing);
      node_ids.push_back(e.dst);
      Number saved = elapsed;
      elapsed = next_elapsed;
      dfs(e.dst);
      elapsed = saved;
      node_ids.pop_back();
      firings.pop_back();
      on_path[static_cast<std::size_t>(e.dst)] = 0;
    }
  }
};

}  // namespace

std::vector<SolutionPath> enumerate_goal_paths(const PrTNet& net, const ReachGraph& g,
                                               const NetGoal& goal, PathMode mode,
                                               std::optional<Number> prune_bound,
                                               std::size_t max_depth) {
  if (g.truncated) throw Error("Truncated", "reachability graph is partial");
  std::vector<SolutionPath> out;
  PathSearch s{net, g, {}, {}, {}, {}, Number{}, prune_bound, std::nullopt, &out};
  if (mode == PathMode::DepthBoundedTree) s.depth_cap = max_depth;
  s.is_goal.resize(g.nodes.size(), 0);
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    s.is_goal[i] = marking_satisfies(net, g.nodes[i], goal) ? 1 : 0;
  s.on_path.resize(g.nodes.size(), 0);
  s.on_path[0] = 1;
  s.node_ids.push_back(0);
  s.dfs(0);
  return out;
}

std::string format_path(const PrTNet& net, const SolutionPath& p) {
  std::ostringstream out;
  out << "PATH " << p.ordinal << "\n";
  for (std::size_t i = 0; i < p.firings.size(); ++i) {
    const Firing& f = p.firings[i];
    out << "Node " << p.node_ids[i] << ": transition " << f.transition << "\n";
    std::string line;
    for (const auto& [var, value] : f.binding.assignments) {
      if (net.is_torch_var(var)) continue;
      line += "  " + var + " = " + value.str();
    }
    if (!line.empty()) out << line << "\n";
  }
  out << "Node " << p.node_ids.back() << "\n";
  return out.str();
}

}  // namespace ssynth
