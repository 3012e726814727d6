#pragma once

#include <cstdint>
#include <string>

namespace fpinc {

using u128 = unsigned __int128;

// Non-negative rational constant used for thresholds. Comparisons against
// integer quantities are exact, so 0.05 * 81 / 27 is never off by an ulp.
class Ratio {
 public:
  constexpr Ratio() = default;
  Ratio(std::int64_t num, std::int64_t den);

  // Recovers the decimal a config value was written as (up to 9 places).
  static Ratio from_double(double x);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  bool positive() const noexcept { return num_ > 0; }
  bool in_unit_interval() const noexcept { return num_ > 0 && num_ <= den_; }

  friend bool operator==(const Ratio&, const Ratio&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// count >= c * numerator / denominator, exactly.
bool meets(u128 count, const Ratio& c, u128 numerator, u128 denominator = 1);

// lhs <= c * rhs, exactly.
bool at_most(u128 lhs, const Ratio& c, u128 rhs);

}  // namespace fpinc
