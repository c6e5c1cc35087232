#include "ssynth/sexpr.hpp"

#include <cctype>
#include <charconv>

namespace ssynth {

SExpr SExpr::symbol(std::string s) {
  SExpr e;
  e.kind = Kind::Symbol;
  e.name = std::move(s);
  return e;
}

SExpr SExpr::keyword(std::string s) {
  SExpr e;
  e.kind = Kind::Keyword;
  e.name = std::move(s);
  return e;
}

SExpr SExpr::integer(std::int64_t v) {
  SExpr e;
  e.kind = Kind::Int;
  e.num = Number::from_int(v);
  return e;
}

SExpr SExpr::real(Number v) {
  SExpr e;
  e.kind = Kind::Real;
  e.num = v;
  return e;
}

SExpr SExpr::list(std::vector<SExpr> items) {
  SExpr e;
  e.kind = Kind::List;
  e.items = std::move(items);
  return e;
}

namespace {

bool is_delim(char c) {
  return c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Classifies one raw token. `pos` is its starting offset, for errors.
SExpr classify(std::string_view tok, std::size_t pos) {
  std::string_view body = tok;
  bool neg = false;
  if (body.size() > 1 && (body[0] == '-' || body[0] == '+') && std::isdigit(static_cast<unsigned char>(body[1]))) {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  if (std::isdigit(static_cast<unsigned char>(body.front()))) {
    auto dot = body.find('.');
    if (dot == std::string_view::npos) {
      if (!all_digits(body)) throw Error("IllegalToken", std::string(tok), pos);
      std::int64_t v = 0;
      auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
      if (ec != std::errc{} || p != body.data() + body.size())
        throw Error("IllegalToken", std::string(tok), pos);
      return SExpr::integer(neg ? -v : v);
    }
    std::string_view ip = body.substr(0, dot);
    std::string_view fp = body.substr(dot + 1);
    if (!all_digits(ip) || !all_digits(fp)) throw Error("IllegalToken", std::string(tok), pos);
    if (fp.size() > 3)
      throw Error("IllegalToken", std::string(tok) + " (more than 3 decimal places)", pos);
    std::int64_t iv = 0, fv = 0;
    std::from_chars(ip.data(), ip.data() + ip.size(), iv);
    std::from_chars(fp.data(), fp.data() + fp.size(), fv);
    for (std::size_t i = fp.size(); i < 3; ++i) fv *= 10;
    std::int64_t milli = iv * 1000 + fv;
    return SExpr::real(Number::from_milli(neg ? -milli : milli));
  }
  if (tok[0] == ':') {
    std::string_view name = tok.substr(1);
    if (name.empty() || std::isdigit(static_cast<unsigned char>(name.front())))
      throw Error("IllegalToken", std::string(tok), pos);
    return SExpr::keyword(std::string(name));
  }
  return SExpr::symbol(std::string(tok));
}

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view text) {
  std::vector<SExpr> top;
  std::vector<SExpr*> stack;  // open lists, innermost last
  std::vector<std::size_t> open_pos;

  auto append = [&](SExpr e) -> void {
    if (stack.empty())
      top.push_back(std::move(e));
    else
      stack.back()->items.push_back(std::move(e));
  };

  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == ';') {
      while (i < n && text[i] != '\n') ++i;
    } else if (c == '(') {
      append(SExpr::list());
      if (stack.empty())
        stack.push_back(&top.back());
      else
        stack.push_back(&stack.back()->items.back());
      open_pos.push_back(i);
      ++i;
    } else if (c == ')') {
      if (stack.empty()) throw Error("UnbalancedParens", "stray ')'", i);
      stack.pop_back();
      open_pos.pop_back();
      ++i;
    } else {
      std::size_t start = i;
      while (i < n && !is_delim(text[i])) ++i;
      append(classify(text.substr(start, i - start), start));
    }
  }
  if (!stack.empty())
    throw Error("UnbalancedParens", "unclosed '('", open_pos.back());
  return top;
}

std::string write_sexpr(const SExpr& e) {
  switch (e.kind) {
    case SExpr::Kind::Symbol:
      return e.name;
    case SExpr::Kind::Keyword:
      return ":" + e.name;
    case SExpr::Kind::Int:
      return std::to_string(e.num.as_int());
    case SExpr::Kind::Real: {
      // Reals keep a decimal point so they read back as reals.
      std::string s = e.num.str();
      if (s.find('.') == std::string::npos) s += ".0";
      return s;
    }
    case SExpr::Kind::List: {
      std::string s = "(";
      for (std::size_t i = 0; i < e.items.size(); ++i) {
        if (i) s += ' ';
        s += write_sexpr(e.items[i]);
      }
      s += ')';
      return s;
    }
  }
  return {};
}

}  // namespace ssynth
