#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace fpinc {

using u64 = std::uint64_t;

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n) noexcept;

// Validated prime modulus. p < 2^32 so (p-1)^2 fits in 64 bits and every
// intermediate product of two residues is exact.
class PrimeContext {
 public:
  static constexpr u64 kMaxModulus = (u64{1} << 32) - 1;

  explicit PrimeContext(u64 p);

  u64 p() const noexcept { return p_; }

  friend bool operator==(const PrimeContext&, const PrimeContext&) = default;

 private:
  u64 p_;
};

// Canonical residue in [0, p). Elements from different contexts never mix;
// the modulus travels with the value.
class FieldElement {
 public:
  FieldElement(const PrimeContext& ctx, std::int64_t value);
  static FieldElement from_residue(u64 residue, u64 p) noexcept { return FieldElement(residue, p); }

  u64 value() const noexcept { return v_; }
  u64 modulus() const noexcept { return p_; }
  PrimeContext context() const { return PrimeContext(p_); }
  bool is_zero() const noexcept { return v_ == 0; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement& a, const FieldElement& b) = default;

 private:
  FieldElement(u64 residue, u64 p) noexcept : p_(p), v_(residue) {}
  // p_ first so ordering groups by field, then by residue
  u64 p_;
  u64 v_;
};

enum class FieldOp { Add, Sub, Mul };

FieldElement field_op(FieldOp op, const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, u64 e);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return field_op(FieldOp::Add, a, b);
}
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return field_op(FieldOp::Sub, a, b);
}
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return field_op(FieldOp::Mul, a, b);
}
FieldElement operator-(const FieldElement& a);
FieldElement operator/(const FieldElement& a, const FieldElement& b);

inline std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.value(); }

// Raw residue helpers for hot loops; callers guarantee a, b < p.
namespace residue {
inline u64 add(u64 a, u64 b, u64 p) noexcept { return a + b >= p ? a + b - p : a + b; }
inline u64 sub(u64 a, u64 b, u64 p) noexcept { return a >= b ? a - b : a + p - b; }
inline u64 mul(u64 a, u64 b, u64 p) noexcept { return (a * b) % p; }
inline u64 neg(u64 a, u64 p) noexcept { return a ? p - a : 0; }
// Extended Euclid; a must be nonzero mod p.
u64 inv(u64 a, u64 p);
u64 reduce(std::int64_t x, u64 p) noexcept;
}  // namespace residue

}  // namespace fpinc

template <>
struct std::hash<fpinc::FieldElement> {
  std::size_t operator()(const fpinc::FieldElement& x) const noexcept {
    return std::hash<fpinc::u64>{}(x.value() * 0x9E3779B97F4A7C15ULL ^ x.modulus());
  }
};
