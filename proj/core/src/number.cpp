#include "ssynth/number.hpp"

namespace ssynth {

std::string Number::str() const {
  std::int64_t m = milli_;
  std::string sign;
  if (m < 0) {
    sign = "-";
    m = -m;
  }
  std::int64_t whole = m / 1000;
  std::int64_t frac = m % 1000;
  if (frac == 0) return sign + std::to_string(whole);
  std::string f = std::to_string(frac);
  f.insert(0, 3 - f.size(), '0');
  while (f.back() == '0') f.pop_back();
  return sign + std::to_string(whole) + "." + f;
}

}  // namespace ssynth
