#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssynth/diagnostics.hpp"
#include "ssynth/duration.hpp"
#include "ssynth/number.hpp"
#include "ssynth/sexpr.hpp"

namespace ssynth {

// Predicate/transition net: the classic 6-tuple (S, T, F, K, W, M0) plus a
// reachability goal and per-transition duration expressions. Tokens are bare
// numbers; mover tokens carry their crossing times, the torch token carries a
// tag value. The net itself is untimed; durations are summed by the path
// filter after enumeration.

// Side table entry naming a token value (used for labeling output and for
// reconstructing object names when mapping a net back to an action model).
struct TokenDecl {
  std::string name;
  Number value;

  bool operator==(const TokenDecl&) const = default;
};

// One arc pattern: the tokens a transition takes from (or puts into) a place.
// Elements are variables (bound across the whole transition) or constants.
struct PatternElem {
  enum class Kind { Var, Const };
  Kind kind = Kind::Var;
  std::string var;  // without '?'
  Number value;     // Const only

  static PatternElem variable(std::string v) { return {Kind::Var, std::move(v), {}}; }
  static PatternElem constant(Number n) { return {Kind::Const, {}, n}; }
  bool operator==(const PatternElem&) const = default;
};

struct ArcPattern {
  std::string place;
  std::vector<PatternElem> elems;

  bool operator==(const ArcPattern&) const = default;
};

struct NetTransition {
  std::string name;
  std::vector<std::string> params;  // ordered variable names, without '?'
  std::vector<ArcPattern> inputs;
  std::vector<ArcPattern> outputs;
  DurationExpr duration;  // over mover variables only

  bool operator==(const NetTransition&) const = default;
};

// Explicit arc weight (defaults to 1). Arcs are identified by endpoint names;
// direction is implied by which endpoint is the transition.
struct ArcWeight {
  std::string from;
  std::string to;
  std::int64_t weight = 1;

  bool operator==(const ArcWeight&) const = default;
};

struct PlaceCapacity {
  std::string place;
  std::int64_t capacity = 0;  // finite bound; unbounded places are omitted

  bool operator==(const PlaceCapacity&) const = default;
};

// Reachability goal, always "eventually on some branch": either one place
// holding an exact token multiset, or a conjunction of token-in-place
// membership conditions. The optional bound feeds the path filter.
struct NetGoal {
  enum class Target { ExactPlace, Conjunction };

  Target target = Target::ExactPlace;
  std::string place;               // ExactPlace
  std::vector<Number> tokens;      // ExactPlace: exact multiset
  std::vector<std::pair<Number, std::string>> conds;  // Conjunction: (token, place)
  std::optional<Number> time_bound;  // comparator is always <=

  bool operator==(const NetGoal&) const = default;
};

struct PrTNet {
  std::string name;
  std::vector<std::string> places;
  std::vector<TokenDecl> token_table;  // may be empty (anonymous tokens)
  std::string torch_name;              // name of the torch token, "" if none
  std::vector<NetTransition> transitions;
  std::vector<ArcWeight> weights;        // entries only where specified
  std::vector<PlaceCapacity> capacities; // entries only for finite capacities
  // Initial marking, one token list per place in `places` order. Token order
  // within a place is the declaration order and is preserved for printing;
  // the reachability engine canonicalizes it.
  std::vector<std::vector<Number>> initial_marking;
  NetGoal goal;

  bool operator==(const PrTNet&) const = default;

  int place_index(std::string_view p) const;
  std::optional<Number> torch_value() const;
  // Declared name for a token value, or its numeral when unnamed.
  std::string token_label(Number value) const;
  std::optional<std::int64_t> capacity_of(std::string_view place) const;
  std::int64_t weight_of(std::string_view from, std::string_view to) const;
  bool is_torch_var(std::string_view var) const { return !torch_name.empty() && var == torch_name; }
};

// Reads the s-expression net syntax (`.lprod.sexp`). Defaults: capacity
// unbounded, weight 1. Throws Error{PlaceTransitionClash | UnboundOutputVar |
// MalformedPattern | ...}.
PrTNet parse_lprod(const std::vector<SExpr>& forms);
PrTNet parse_lprod_text(std::string_view text);

// Canonical net text; parse_lprod(print_lprod(net)) is structurally `net`.
std::string print_lprod(const PrTNet& net);

// C-like surface for human inspection (`#define`/`#place`/`#trans`,
// `<.v.>` tokens, `+` multiset union). Not reparsed.
std::string print_prod(const PrTNet& net);

// Structural validation of the 6-tuple conditions; empty means well formed.
Diagnostics check_net(const PrTNet& net);

}  // namespace ssynth
