#include "fpinc/ratio.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fpinc/errors.hpp"

namespace fpinc {

Ratio::Ratio(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) {
    throw InvalidArgument("Ratio: need num >= 0 and den > 0");
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

Ratio Ratio::from_double(double x) {
  if (!std::isfinite(x) || x < 0.0 || x > 1e9) {
    throw InvalidArgument("Ratio: constant must be finite, non-negative and <= 1e9");
  }
  std::int64_t scale = 1;
  for (int digits = 0; digits <= 9; ++digits, scale *= 10) {
    const double scaled = x * static_cast<double>(scale);
    const double rounded = std::round(scaled);
    if (std::fabs(scaled - rounded) <= 1e-9 * std::max(1.0, std::fabs(scaled))) {
      return Ratio(static_cast<std::int64_t>(rounded), scale);
    }
  }
  return Ratio(static_cast<std::int64_t>(std::llround(x * 1e9)), 1000000000);
}

bool meets(u128 count, const Ratio& c, u128 numerator, u128 denominator) {
  return count * denominator * static_cast<u128>(c.den()) >=
         static_cast<u128>(c.num()) * numerator;
}

bool at_most(u128 lhs, const Ratio& c, u128 rhs) {
  return lhs * static_cast<u128>(c.den()) <= static_cast<u128>(c.num()) * rhs;
}

}  // namespace fpinc
