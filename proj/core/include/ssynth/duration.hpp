#pragma once

#include <string>
#include <vector>

namespace ssynth {

// Duration of one event/action/transition as a function of its variables:
// either the crossing time of a single mover or the max over a group.
// Variable names are stored without the '?' sigil.
struct DurationExpr {
  enum class Kind { None, Single, MaxOf };

  Kind kind = Kind::None;
  std::vector<std::string> vars;

  static DurationExpr none() { return {}; }
  static DurationExpr single(std::string var) {
    return {Kind::Single, {std::move(var)}};
  }
  static DurationExpr max_of(std::vector<std::string> vars) {
    return {Kind::MaxOf, std::move(vars)};
  }

  bool operator==(const DurationExpr&) const = default;
};

}  // namespace ssynth
