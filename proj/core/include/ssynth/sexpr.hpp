#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ssynth/diagnostics.hpp"
#include "ssynth/number.hpp"

namespace ssynth {

// Generic s-expression tree, the concrete-syntax carrier for every language
// in the pipeline. Atoms are symbols, `:keywords`, integers, and decimals
// (at most three fractional digits, stored exactly). No strings, no quoting.
struct SExpr {
  enum class Kind { Symbol, Keyword, Int, Real, List };

  Kind kind = Kind::List;
  std::string name;          // Symbol/Keyword text, keyword without the ':'
  Number num;                // Int/Real value
  std::vector<SExpr> items;  // List children

  static SExpr symbol(std::string s);
  static SExpr keyword(std::string s);
  static SExpr integer(std::int64_t v);
  static SExpr real(Number v);
  static SExpr list(std::vector<SExpr> items = {});

  bool is_symbol() const { return kind == Kind::Symbol; }
  bool is_symbol(std::string_view s) const { return kind == Kind::Symbol && name == s; }
  bool is_keyword(std::string_view s) const { return kind == Kind::Keyword && name == s; }
  bool is_number() const { return kind == Kind::Int || kind == Kind::Real; }
  bool is_list() const { return kind == Kind::List; }
  std::size_t size() const { return items.size(); }
  const SExpr& operator[](std::size_t i) const { return items[i]; }

  bool operator==(const SExpr&) const = default;
};

// Reads every top-level expression in order. `;` comments run to end of line.
// Throws Error{UnbalancedParens|IllegalToken} with the byte offset.
std::vector<SExpr> read_sexprs(std::string_view text);

// Canonical one-line form: single spaces between items, no trailing blanks.
// read_sexprs(write_sexpr(e)) yields exactly [e].
std::string write_sexpr(const SExpr& e);

}  // namespace ssynth
