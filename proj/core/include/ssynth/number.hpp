#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace ssynth {

// Exact decimal with at most three fractional digits, stored as an integer
// count of thousandths. All time arithmetic in the toolkit goes through this
// type so that path durations and bounds compare exactly.
class Number {
 public:
  constexpr Number() = default;

  static constexpr Number from_int(std::int64_t v) { return Number(v * 1000); }
  static constexpr Number from_milli(std::int64_t m) { return Number(m); }

  constexpr std::int64_t milli() const { return milli_; }
  constexpr bool is_integral() const { return milli_ % 1000 == 0; }
  constexpr std::int64_t as_int() const { return milli_ / 1000; }

  constexpr Number operator+(Number o) const { return Number(milli_ + o.milli_); }
  constexpr Number& operator+=(Number o) { milli_ += o.milli_; return *this; }
  constexpr Number operator-(Number o) const { return Number(milli_ - o.milli_); }
  friend constexpr auto operator<=>(Number, Number) = default;

  static constexpr Number max(Number a, Number b) { return a < b ? b : a; }

  // "5", "-2", "0.25", "12.5" -- integral values print without a decimal point.
  std::string str() const;

 private:
  explicit constexpr Number(std::int64_t m) : milli_(m) {}
  std::int64_t milli_ = 0;
};

}  // namespace ssynth

template <>
struct std::hash<ssynth::Number> {
  std::size_t operator()(ssynth::Number n) const noexcept {
    return std::hash<std::int64_t>{}(n.milli());
  }
};
