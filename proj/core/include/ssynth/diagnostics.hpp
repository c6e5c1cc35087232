#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssynth {

// Hard failure raised by parsers and transforms. `code` is a stable,
// machine-checkable identifier such as "UnbalancedParens" or
// "MissingSection"; `detail` names the offending construct.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(std::string code, std::string detail, std::size_t position = npos)
      : std::runtime_error(format(code, detail, position)),
        code_(std::move(code)),
        detail_(std::move(detail)),
        position_(position) {}

  const std::string& code() const { return code_; }
  const std::string& detail() const { return detail_; }
  std::size_t position() const { return position_; }

 private:
  static std::string format(const std::string& code, const std::string& detail,
                            std::size_t position) {
    std::string s = code;
    if (position != npos) s += " at offset " + std::to_string(position);
    if (!detail.empty()) s += ": " + detail;
    return s;
  }

  std::string code_;
  std::string detail_;
  std::size_t position_;
};

// Soft finding reported by validators; an empty list means the model is
// well formed. `path` locates the construct ("events.eS", "goal-conditions").
struct Diagnostic {
  std::string code;
  std::string path;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

using Diagnostics = std::vector<Diagnostic>;

}  // namespace ssynth
