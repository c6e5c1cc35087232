#include "oracle.hpp"

#include <algorithm>
#include <set>

using ssynth::ArcPattern;
using ssynth::DurationExpr;
using ssynth::NetGoal;
using ssynth::NetTransition;
using ssynth::Number;
using ssynth::PatternElem;
using ssynth::PrTNet;

namespace oracle {

namespace {

bool take_value(std::vector<std::int64_t>& pool, std::int64_t v) {
  auto it = std::find(pool.begin(), pool.end(), v);
  if (it == pool.end()) return false;
  pool.erase(it);
  return true;
}

// Recursively assigns the transition's parameters one by one, trying every
// distinct available value. Duplicate value tuples collapse naturally because
// candidates are deduplicated per step.
void assign(const PrTNet& net, const NetTransition& tr,
            std::map<std::string, std::vector<std::int64_t>> pools,  // by value
            std::map<std::string, std::string> var_place,
            std::vector<std::pair<std::string, std::int64_t>>& acc,
            std::size_t param_idx, std::vector<OFiring>& out) {
  if (param_idx == tr.params.size()) {
    OFiring f;
    f.transition = tr.name;
    for (const auto& [v, val] : acc) f.values.push_back(val);
    if (tr.duration.kind == DurationExpr::Kind::Single) {
      for (const auto& [v, val] : acc)
        if (v == tr.duration.vars[0]) f.duration = val;
    } else if (tr.duration.kind == DurationExpr::Kind::MaxOf) {
      std::int64_t best = 0;
      bool first = true;
      for (const auto& [v, val] : acc)
        if (std::find(tr.duration.vars.begin(), tr.duration.vars.end(), v) !=
            tr.duration.vars.end()) {
          best = first ? val : std::max(best, val);
          first = false;
        }
      f.duration = best;
    }
    out.push_back(std::move(f));
    return;
  }
  const std::string& var = tr.params[param_idx];
  auto place_it = var_place.find(var);
  if (place_it == var_place.end()) return;  // parameter never bound by inputs
  std::vector<std::int64_t>& pool = pools[place_it->second];

  auto torch = net.torch_value();
  std::set<std::int64_t> tried;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    std::int64_t v = pool[i];
    if (tried.count(v)) continue;
    tried.insert(v);
    if (torch) {
      bool want_torch = net.is_torch_var(var);
      bool is_torch = v == torch->milli();
      if (want_torch != is_torch) continue;
    }
    auto pools2 = pools;
    take_value(pools2[place_it->second], v);
    acc.emplace_back(var, v);
    assign(net, tr, std::move(pools2), var_place, acc, param_idx + 1, out);
    acc.pop_back();
  }
}

}  // namespace

OMarking initial_marking(const PrTNet& net) {
  OMarking m;
  for (std::size_t i = 0; i < net.places.size(); ++i) {
    auto& v = m[net.places[i]];
    for (const auto& tok : net.initial_marking[i]) v.push_back(tok.milli());
    std::sort(v.begin(), v.end());
  }
  return m;
}

std::vector<OFiring> enabled(const PrTNet& net, const OMarking& m) {
  std::vector<OFiring> out;
  for (const auto& tr : net.transitions) {
    // Remove pattern constants up front; bail if any is missing.
    std::map<std::string, std::vector<std::int64_t>> pools;
    for (const auto& [place, toks] : m) pools[place] = toks;
    bool feasible = true;
    std::map<std::string, std::string> var_place;
    for (const auto& in : tr.inputs) {
      for (const auto& e : in.elems) {
        if (e.kind == PatternElem::Kind::Const) {
          if (!take_value(pools[in.place], e.value.milli())) feasible = false;
        } else {
          var_place[e.var] = in.place;
        }
      }
    }
    if (!feasible) continue;
    std::vector<std::pair<std::string, std::int64_t>> acc;
    assign(net, tr, pools, var_place, acc, 0, out);
  }
  return out;
}

OMarking apply(const PrTNet& net, const OMarking& m, const OFiring& f) {
  OMarking next = m;
  const NetTransition* tr = nullptr;
  for (const auto& t : net.transitions)
    if (t.name == f.transition) tr = &t;
  std::map<std::string, std::int64_t> bind;
  for (std::size_t i = 0; i < tr->params.size(); ++i) bind[tr->params[i]] = f.values[i];
  for (const auto& in : tr->inputs)
    for (const auto& e : in.elems) {
      std::int64_t v = e.kind == PatternElem::Kind::Const ? e.value.milli() : bind[e.var];
      take_value(next[in.place], v);
    }
  for (const auto& o : tr->outputs)
    for (const auto& e : o.elems) {
      std::int64_t v = e.kind == PatternElem::Kind::Const ? e.value.milli() : bind[e.var];
      next[o.place].push_back(v);
      std::sort(next[o.place].begin(), next[o.place].end());
    }
  return next;
}

bool satisfies_goal(const PrTNet& net, const OMarking& m) {
  const NetGoal& g = net.goal;
  if (g.target == NetGoal::Target::ExactPlace) {
    if (g.place.empty()) return false;
    std::vector<std::int64_t> want;
    for (const auto& t : g.tokens) want.push_back(t.milli());
    std::sort(want.begin(), want.end());
    auto it = m.find(g.place);
    std::vector<std::int64_t> have = it == m.end() ? std::vector<std::int64_t>{} : it->second;
    return have == want;
  }
  if (g.conds.empty()) return false;
  for (const auto& [tok, place] : g.conds) {
    auto it = m.find(place);
    if (it == m.end()) return false;
    if (std::find(it->second.begin(), it->second.end(), tok.milli()) == it->second.end())
      return false;
  }
  return true;
}

namespace {

void search(const PrTNet& net, const OMarking& m, std::vector<OMarking>& on_path,
            std::vector<OFiring>& acc, std::int64_t elapsed, std::vector<OPath>& out) {
  if (satisfies_goal(net, m)) out.push_back({acc, elapsed});
  for (const auto& f : enabled(net, m)) {
    OMarking next = apply(net, m, f);
    if (std::find(on_path.begin(), on_path.end(), next) != on_path.end()) continue;
    on_path.push_back(next);
    acc.push_back(f);
    search(net, next, on_path, acc, elapsed + f.duration, out);
    acc.pop_back();
    on_path.pop_back();
  }
}

}  // namespace

std::vector<OPath> goal_paths(const PrTNet& net) {
  std::vector<OPath> out;
  OMarking m0 = initial_marking(net);
  std::vector<OMarking> on_path{m0};
  std::vector<OFiring> acc;
  search(net, m0, on_path, acc, 0, out);
  return out;
}

std::vector<OPath> goal_paths_within(const PrTNet& net, std::int64_t bound) {
  std::vector<OPath> out;
  for (auto& p : goal_paths(net))
    if (p.elapsed <= bound) out.push_back(p);
  return out;
}

OStats reachable_stats(const PrTNet& net) {
  std::vector<OMarking> seen{initial_marking(net)};
  std::size_t firings = 0;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    OMarking m = seen[i];
    for (const auto& f : enabled(net, m)) {
      ++firings;
      OMarking next = apply(net, m, f);
      if (std::find(seen.begin(), seen.end(), next) == seen.end()) seen.push_back(next);
    }
  }
  return {seen.size(), firings};
}

}  // namespace oracle
