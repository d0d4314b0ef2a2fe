#include "tcgre/types.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace tcgre {

Cost cost_from_double(double value) {
  if (!std::isfinite(value)) throw ParseError("non-finite cost value");
  const double scaled = value * static_cast<double>(kCostScale);
  if (scaled >= static_cast<double>(kInfiniteCost) ||
      scaled <= -static_cast<double>(kInfiniteCost)) {
    throw ParseError("cost value out of representable range");
  }
  return static_cast<Cost>(std::llround(scaled));
}

double cost_to_double(Cost ticks) {
  return static_cast<double>(ticks) / static_cast<double>(kCostScale);
}

Cost cost_from_units(std::int64_t units) { return units * kCostScale; }

std::string cost_to_string(Cost ticks) {
  std::string out;
  if (ticks < 0) {
    out.push_back('-');
    ticks = -ticks;
  }
  const Cost whole = ticks / kCostScale;
  const Cost frac = ticks % kCostScale;
  out += std::to_string(whole);
  if (frac != 0) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%09lld", static_cast<long long>(frac));
    std::string digits(buf);
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out.push_back('.');
    out += digits;
  }
  return out;
}

}  // namespace tcgre
