#include "ssynth/prtnet.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ssynth {

int PrTNet::place_index(std::string_view p) const {
  for (std::size_t i = 0; i < places.size(); ++i)
    if (places[i] == p) return static_cast<int>(i);
  return -1;
}

std::optional<Number> PrTNet::torch_value() const {
  if (torch_name.empty()) return std::nullopt;
  for (const auto& t : token_table)
    if (t.name == torch_name) return t.value;
  return std::nullopt;
}

std::string PrTNet::token_label(Number value) const {
  for (const auto& t : token_table)
    if (t.value == value) return t.name;
  return value.str();
}

std::optional<std::int64_t> PrTNet::capacity_of(std::string_view place) const {
  for (const auto& c : capacities)
    if (c.place == place) return c.capacity;
  return std::nullopt;
}

std::int64_t PrTNet::weight_of(std::string_view from, std::string_view to) const {
  for (const auto& w : weights)
    if (w.from == from && w.to == to) return w.weight;
  return 1;
}

namespace {

std::string strip_var(const std::string& s) { return s.substr(1); }

bool is_var_symbol(const SExpr& e) {
  return e.is_symbol() && e.name.size() > 1 && e.name[0] == '?';
}

Number number_of(const SExpr& e) { return e.num; }

// Resolves a pattern element: `?v` variable, numeral, or declared token name.
PatternElem parse_elem(const SExpr& e, const PrTNet& net) {
  if (is_var_symbol(e)) return PatternElem::variable(strip_var(e.name));
  if (e.is_number()) return PatternElem::constant(number_of(e));
  if (e.is_symbol()) {
    for (const auto& t : net.token_table)
      if (t.name == e.name) return PatternElem::constant(t.value);
  }
  throw Error("MalformedPattern", write_sexpr(e));
}

Number parse_token_ref(const SExpr& e, const PrTNet& net, const char* where) {
  if (e.is_number()) return number_of(e);
  if (e.is_symbol()) {
    for (const auto& t : net.token_table)
      if (t.name == e.name) return t.value;
  }
  throw Error("MalformedConstruct", std::string(where) + ": unknown token " + write_sexpr(e));
}

NetTransition parse_trans(const SExpr& form, const PrTNet& net) {
  NetTransition tr;
  if (form.size() < 2 || !form[1].is_symbol())
    throw Error("MalformedConstruct", "(:trans <name> ...)");
  tr.name = form[1].name;
  std::size_t i = 2;
  while (i < form.size()) {
    const SExpr& key = form[i];
    if (key.kind != SExpr::Kind::Keyword || i + 1 >= form.size())
      throw Error("MalformedConstruct", ":trans " + tr.name + ": expected keyword/value pairs");
    const SExpr& val = form[i + 1];
    if (key.name == "parameters") {
      if (!val.is_list()) throw Error("MalformedConstruct", ":parameters expects a list");
      for (const auto& p : val.items) {
        if (!is_var_symbol(p)) throw Error("MalformedConstruct", ":parameters expects ?vars");
        tr.params.push_back(strip_var(p.name));
      }
    } else if (key.name == "in" || key.name == "out") {
      if (!val.is_list() || val.items.empty() || !val[0].is_symbol())
        throw Error("MalformedPattern", write_sexpr(val));
      ArcPattern pat;
      pat.place = val[0].name;
      for (std::size_t k = 1; k < val.size(); ++k) pat.elems.push_back(parse_elem(val[k], net));
      (key.name == "in" ? tr.inputs : tr.outputs).push_back(std::move(pat));
    } else if (key.name == "time") {
      if (is_var_symbol(val)) {
        tr.duration = DurationExpr::single(strip_var(val.name));
      } else if (val.is_list() && !val.items.empty() && val[0].is_symbol("max")) {
        std::vector<std::string> vars;
        for (std::size_t k = 1; k < val.size(); ++k) {
          if (!is_var_symbol(val[k])) throw Error("MalformedConstruct", ":time expects ?vars");
          vars.push_back(strip_var(val[k].name));
        }
        tr.duration = DurationExpr::max_of(std::move(vars));
      } else {
        throw Error("MalformedConstruct", ":time expects ?var or (max ?vars...)");
      }
    } else {
      throw Error("MalformedConstruct", ":trans " + tr.name + ": unknown key :" + key.name);
    }
    i += 2;
  }
  return tr;
}

NetGoal parse_goal(const SExpr& form, const PrTNet& net) {
  NetGoal goal;
  if (form.size() < 2) throw Error("MalformedConstruct", "(:goal <target> [:within n])");
  const SExpr& target = form[1];
  if (!target.is_list() || target.items.empty() || !target[0].is_symbol())
    throw Error("MalformedConstruct", "goal target");
  if (target[0].name == "marking") {
    if (target.size() < 2 || !target[1].is_symbol())
      throw Error("MalformedConstruct", "(marking <place> tokens...)");
    goal.target = NetGoal::Target::ExactPlace;
    goal.place = target[1].name;
    for (std::size_t k = 2; k < target.size(); ++k)
      goal.tokens.push_back(parse_token_ref(target[k], net, "goal"));
  } else if (target[0].name == "and") {
    goal.target = NetGoal::Target::Conjunction;
    for (std::size_t k = 1; k < target.size(); ++k) {
      const SExpr& c = target[k];
      if (!c.is_list() || c.size() != 3 || !c[0].is_symbol("at") || !c[2].is_symbol())
        throw Error("MalformedConstruct", "(at <token> <place>)");
      goal.conds.emplace_back(parse_token_ref(c[1], net, "goal"), c[2].name);
    }
  } else {
    throw Error("MalformedConstruct", "goal target: " + target[0].name);
  }
  std::size_t i = 2;
  while (i < form.size()) {
    if (form[i].is_keyword("within") && i + 1 < form.size() && form[i + 1].is_number()) {
      goal.time_bound = number_of(form[i + 1]);
      i += 2;
    } else {
      throw Error("MalformedConstruct", "goal: expected :within <number>");
    }
  }
  return goal;
}

}  // namespace

PrTNet parse_lprod(const std::vector<SExpr>& forms) {
  if (forms.size() != 1 || !forms[0].is_list() || forms[0].items.empty() ||
      !forms[0][0].is_symbol("def-net"))
    throw Error("MalformedConstruct", "expected a single (def-net ...) form");
  const SExpr& top = forms[0];
  if (top.size() < 2 || !top[1].is_symbol())
    throw Error("MalformedConstruct", "(def-net <name> ...)");

  PrTNet net;
  net.name = top[1].name;

  std::set<std::string> seen;
  auto once = [&](const std::string& section) {
    if (!seen.insert(section).second) throw Error("DuplicateConstruct", ":" + section);
  };

  // Token/torch/places sections first so later sections can resolve names.
  std::vector<const SExpr*> deferred;
  for (std::size_t i = 2; i < top.size(); ++i) {
    const SExpr& sec = top[i];
    if (!sec.is_list() || sec.items.empty() || sec[0].kind != SExpr::Kind::Keyword)
      throw Error("MalformedConstruct", "net section: " + write_sexpr(sec));
    const std::string& k = sec[0].name;
    if (k == "tokens") {
      once(k);
      for (std::size_t j = 1; j < sec.size(); ++j) {
        const SExpr& t = sec[j];
        if (!t.is_list() || t.size() != 2 || !t[0].is_symbol() || !t[1].is_number())
          throw Error("MalformedConstruct", "(:tokens (<name> <value>)...)");
        net.token_table.push_back({t[0].name, number_of(t[1])});
      }
    } else if (k == "torch") {
      once(k);
      if (sec.size() != 2 || !sec[1].is_symbol())
        throw Error("MalformedConstruct", "(:torch <token-name>)");
      net.torch_name = sec[1].name;
    } else if (k == "places") {
      once(k);
      for (std::size_t j = 1; j < sec.size(); ++j) {
        if (!sec[j].is_symbol()) throw Error("MalformedConstruct", ":places expects symbols");
        net.places.push_back(sec[j].name);
      }
    } else {
      deferred.push_back(&sec);
    }
  }
  net.initial_marking.assign(net.places.size(), {});

  for (const SExpr* psec : deferred) {
    const SExpr& sec = *psec;
    const std::string& k = sec[0].name;
    if (k == "capacity") {
      once(k);
      for (std::size_t j = 1; j < sec.size(); ++j) {
        const SExpr& c = sec[j];
        if (!c.is_list() || c.size() != 2 || !c[0].is_symbol() ||
            c[1].kind != SExpr::Kind::Int)
          throw Error("MalformedConstruct", "(:capacity (<place> <int>)...)");
        net.capacities.push_back({c[0].name, c[1].num.as_int()});
      }
    } else if (k == "weight") {
      if (sec.size() != 4 || !sec[1].is_symbol() || !sec[2].is_symbol() ||
          sec[3].kind != SExpr::Kind::Int)
        throw Error("MalformedConstruct", "(:weight <from> <to> <int>)");
      net.weights.push_back({sec[1].name, sec[2].name, sec[3].num.as_int()});
    } else if (k == "marking") {
      once(k);
      for (std::size_t j = 1; j < sec.size(); ++j) {
        const SExpr& m = sec[j];
        if (!m.is_list() || m.items.empty() || !m[0].is_symbol())
          throw Error("MalformedConstruct", "(:marking (<place> tokens...)...)");
        int pi = net.place_index(m[0].name);
        if (pi < 0) throw Error("UnknownPlace", m[0].name);
        for (std::size_t t = 1; t < m.size(); ++t)
          net.initial_marking[pi].push_back(parse_token_ref(m[t], net, "marking"));
      }
    } else if (k == "trans") {
      NetTransition tr = parse_trans(sec, net);
      if (net.place_index(tr.name) >= 0) throw Error("PlaceTransitionClash", tr.name);
      // Every output variable must be bound by some input pattern, and an
      // input variable may be consumed only once.
      std::set<std::string> bound;
      for (const auto& in : tr.inputs)
        for (const auto& e : in.elems)
          if (e.kind == PatternElem::Kind::Var && !bound.insert(e.var).second)
            throw Error("MalformedPattern", "?" + e.var + " bound twice in " + tr.name);
      for (const auto& out : tr.outputs)
        for (const auto& e : out.elems)
          if (e.kind == PatternElem::Kind::Var && !bound.count(e.var))
            throw Error("UnboundOutputVar", "?" + e.var);
      net.transitions.push_back(std::move(tr));
    } else if (k == "goal") {
      once(k);
      net.goal = parse_goal(sec, net);
    } else {
      throw Error("MalformedConstruct", "unknown net section :" + k);
    }
  }
  return net;
}

PrTNet parse_lprod_text(std::string_view text) { return parse_lprod(read_sexprs(text)); }

namespace {

std::string var_list(const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) s += ' ';
    s += "?" + vars[i];
  }
  return s;
}

std::string pattern_text(const ArcPattern& pat, const PrTNet& net) {
  std::string s = "(" + pat.place;
  for (const auto& e : pat.elems) {
    s += ' ';
    s += e.kind == PatternElem::Kind::Var ? "?" + e.var : net.token_label(e.value);
  }
  return s + ")";
}

std::string time_text(const DurationExpr& d) {
  if (d.kind == DurationExpr::Kind::Single) return "?" + d.vars[0];
  std::string s = "(max";
  for (const auto& v : d.vars) s += " ?" + v;
  return s + ")";
}

}  // namespace

std::string print_lprod(const PrTNet& net) {
  std::vector<std::string> lines;
  lines.push_back("(def-net " + net.name);
  if (!net.token_table.empty()) {
    std::string s = "  (:tokens";
    for (const auto& t : net.token_table) s += " (" + t.name + " " + t.value.str() + ")";
    lines.push_back(s + ")");
  }
  if (!net.torch_name.empty()) lines.push_back("  (:torch " + net.torch_name + ")");
  {
    std::string s = "  (:places";
    for (const auto& p : net.places) s += " " + p;
    lines.push_back(s + ")");
  }
  if (!net.capacities.empty()) {
    std::string s = "  (:capacity";
    for (const auto& c : net.capacities) s += " (" + c.place + " " + std::to_string(c.capacity) + ")";
    lines.push_back(s + ")");
  }
  for (const auto& w : net.weights)
    lines.push_back("  (:weight " + w.from + " " + w.to + " " + std::to_string(w.weight) + ")");
  {
    std::string s = "  (:marking";
    for (std::size_t i = 0; i < net.places.size(); ++i) {
      if (net.initial_marking[i].empty()) continue;
      s += " (" + net.places[i];
      for (const auto& tok : net.initial_marking[i]) s += " " + net.token_label(tok);
      s += ")";
    }
    lines.push_back(s + ")");
  }
  for (const auto& tr : net.transitions) {
    lines.push_back("  (:trans " + tr.name);
    lines.push_back("    :parameters (" + var_list(tr.params) + ")");
    for (const auto& in : tr.inputs) lines.push_back("    :in " + pattern_text(in, net));
    for (const auto& o : tr.outputs) lines.push_back("    :out " + pattern_text(o, net));
    if (tr.duration.kind != DurationExpr::Kind::None)
      lines.push_back("    :time " + time_text(tr.duration));
    lines.back() += ")";
  }
  if (net.goal.target == NetGoal::Target::ExactPlace && !net.goal.place.empty()) {
    std::string s = "  (:goal (marking " + net.goal.place;
    for (const auto& t : net.goal.tokens) s += " " + net.token_label(t);
    s += ")";
    if (net.goal.time_bound) s += " :within " + net.goal.time_bound->str();
    lines.push_back(s + ")");
  } else if (net.goal.target == NetGoal::Target::Conjunction && !net.goal.conds.empty()) {
    std::string s = "  (:goal (and";
    for (const auto& [tok, place] : net.goal.conds)
      s += " (at " + net.token_label(tok) + " " + place + ")";
    s += ")";
    if (net.goal.time_bound) s += " :within " + net.goal.time_bound->str();
    lines.push_back(s + ")");
  }
  lines.back() += ")";
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

namespace {

std::string prod_token(Number v) { return "<." + v.str() + ".>"; }

std::string prod_pattern(const ArcPattern& pat, const PrTNet& net) {
  std::string s;
  for (std::size_t i = 0; i < pat.elems.size(); ++i) {
    if (i) s += '+';
    const auto& e = pat.elems[i];
    s += e.kind == PatternElem::Kind::Var ? "<." + e.var + ".>" : prod_token(e.value);
  }
  return s;
}

}  // namespace

std::string print_prod(const PrTNet& net) {
  std::ostringstream out;
  for (const auto& t : net.token_table)
    out << "#define " << t.name << " " << t.value.str() << "\n";
  if (!net.token_table.empty()) out << "\n";
  for (std::size_t i = 0; i < net.places.size(); ++i) {
    out << "#place " << net.places[i];
    if (auto cap = net.capacity_of(net.places[i])) out << " cap " << *cap;
    out << " mk(";
    for (std::size_t j = 0; j < net.initial_marking[i].size(); ++j) {
      if (j) out << "+";
      out << prod_token(net.initial_marking[i][j]);
    }
    out << ")\n";
  }
  for (const auto& tr : net.transitions) {
    out << "\n#trans " << tr.name << "\n";
    out << "in {";
    for (std::size_t i = 0; i < tr.inputs.size(); ++i) {
      if (i) out << " ";
      out << tr.inputs[i].place << ": " << prod_pattern(tr.inputs[i], net) << ";";
    }
    out << "}\n";
    out << "out {";
    for (std::size_t i = 0; i < tr.outputs.size(); ++i) {
      if (i) out << " ";
      out << tr.outputs[i].place << ": " << prod_pattern(tr.outputs[i], net) << ";";
    }
    out << "}\n";
    out << "#endtr\n";
  }
  if (net.goal.target == NetGoal::Target::ExactPlace && !net.goal.place.empty()) {
    std::vector<Number> toks = net.goal.tokens;
    std::sort(toks.begin(), toks.end());
    out << "\n#define goal EventuallyOnSomeBranch(" << net.goal.place << " == ";
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (i) out << "+";
      out << prod_token(toks[i]);
    }
    out << ")\n";
  } else if (net.goal.target == NetGoal::Target::Conjunction && !net.goal.conds.empty()) {
    out << "\n#define goal EventuallyOnSomeBranch(";
    for (std::size_t i = 0; i < net.goal.conds.size(); ++i) {
      if (i) out << " && ";
      out << net.goal.conds[i].second << " >= " << prod_token(net.goal.conds[i].first);
    }
    out << ")\n";
  }
  return out.str();
}

Diagnostics check_net(const PrTNet& net) {
  Diagnostics diags;
  auto add = [&](std::string code, std::string path, std::string msg) {
    diags.push_back({std::move(code), std::move(path), std::move(msg)});
  };

  std::set<std::string> place_set;
  for (const auto& p : net.places)
    if (!place_set.insert(p).second) add("DuplicatePlace", "places", p);

  std::set<std::string> trans_set;
  for (const auto& tr : net.transitions) {
    if (place_set.count(tr.name)) add("PlaceTransitionClash", "trans." + tr.name, tr.name);
    if (!trans_set.insert(tr.name).second)
      add("DuplicateTransition", "trans." + tr.name, tr.name);
  }

  if (net.initial_marking.size() != net.places.size())
    add("MalformedMarking", "marking", "one token list per place expected");

  for (const auto& c : net.capacities) {
    if (!place_set.count(c.place)) add("UnknownPlace", "capacity", c.place);
    if (c.capacity < 1)
      add("NonPositiveCapacity", "capacity", c.place + ": " + std::to_string(c.capacity));
  }

  for (const auto& w : net.weights) {
    bool from_place = place_set.count(w.from), to_place = place_set.count(w.to);
    bool from_trans = trans_set.count(w.from), to_trans = trans_set.count(w.to);
    if (!((from_place && to_trans) || (from_trans && to_place)))
      add("UnknownArc", "weight", w.from + " -> " + w.to);
    if (w.weight < 1)
      add("NonPositiveWeight", "weight", w.from + " -> " + w.to + ": " + std::to_string(w.weight));
  }

  bool any_duration = false;
  for (const auto& tr : net.transitions) {
    const std::string path = "trans." + tr.name;
    std::set<std::string> params(tr.params.begin(), tr.params.end());
    if (params.size() != tr.params.size()) add("DuplicateVariable", path, "parameters");
    std::set<std::string> bound;
    for (const auto& in : tr.inputs) {
      if (!place_set.count(in.place)) add("UnknownPlace", path, in.place);
      for (const auto& e : in.elems)
        if (e.kind == PatternElem::Kind::Var) {
          if (!bound.insert(e.var).second) add("DuplicateVariable", path, "?" + e.var);
          if (!params.count(e.var)) add("UnknownVariable", path, "?" + e.var);
        }
    }
    for (const auto& o : tr.outputs) {
      if (!place_set.count(o.place)) add("UnknownPlace", path, o.place);
      for (const auto& e : o.elems)
        if (e.kind == PatternElem::Kind::Var && !bound.count(e.var))
          add("UnboundOutputVar", path, "?" + e.var);
    }
    for (const auto& p : tr.params)
      if (!bound.count(p)) add("UnboundParameter", path, "?" + p);
    if (tr.duration.kind != DurationExpr::Kind::None) {
      any_duration = true;
      for (const auto& v : tr.duration.vars)
        if (!params.count(v) || net.is_torch_var(v)) add("UnknownVariable", path + ".time", "?" + v);
    }
  }

  for (std::size_t i = 0; i < net.initial_marking.size() && i < net.places.size(); ++i) {
    if (auto cap = net.capacity_of(net.places[i]))
      if (static_cast<std::int64_t>(net.initial_marking[i].size()) > *cap)
        add("CapacityExceeded", "marking", net.places[i]);
    if (any_duration)
      for (const auto& tok : net.initial_marking[i])
        if (tok < Number{}) add("NegativeTokenTime", "marking", net.places[i] + ": " + tok.str());
  }

  if (net.goal.target == NetGoal::Target::ExactPlace && !net.goal.place.empty()) {
    if (!place_set.count(net.goal.place)) add("UnknownPlace", "goal", net.goal.place);
  } else {
    for (const auto& [tok, place] : net.goal.conds)
      if (!place_set.count(place)) add("UnknownPlace", "goal", place);
  }
  return diags;
}

}  // namespace ssynth
