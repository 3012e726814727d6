#include "fpinc/field.hpp"

#include <string>

#include "fpinc/errors.hpp"

namespace fpinc {

namespace {

using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, base, m);
    base = mulmod64(base, base, m);
    e >>= 1;
  }
  return r;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) {
    throw ContextMismatch("field elements from F_" + std::to_string(a.modulus()) + " and F_" +
                          std::to_string(b.modulus()));
  }
}

}  // namespace

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeContext::PrimeContext(u64 p) : p_(p) {
  if (p < 2 || p > kMaxModulus) {
    throw InvalidArgument("modulus " + std::to_string(p) + " outside [2, 2^32)");
  }
  if (!is_prime(p)) {
    throw InvalidArgument("modulus " + std::to_string(p) + " is not prime");
  }
}

FieldElement::FieldElement(const PrimeContext& ctx, std::int64_t value)
    : p_(ctx.p()), v_(residue::reduce(value, ctx.p())) {}

FieldElement field_op(FieldOp op, const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const u64 p = a.modulus();
  switch (op) {
    case FieldOp::Add:
      return FieldElement::from_residue(residue::add(a.value(), b.value(), p), p);
    case FieldOp::Sub:
      return FieldElement::from_residue(residue::sub(a.value(), b.value(), p), p);
    case FieldOp::Mul:
      return FieldElement::from_residue(residue::mul(a.value(), b.value(), p), p);
  }
  throw InvariantViolation("field_op: unknown operation");
}

FieldElement inv(const FieldElement& a) {
  return FieldElement::from_residue(residue::inv(a.value(), a.modulus()), a.modulus());
}

FieldElement pow(const FieldElement& a, u64 e) {
  return FieldElement::from_residue(powmod64(a.value(), e, a.modulus()), a.modulus());
}

FieldElement operator-(const FieldElement& a) {
  return FieldElement::from_residue(residue::neg(a.value(), a.modulus()), a.modulus());
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a * inv(b);
}

namespace residue {

u64 inv(u64 a, u64 p) {
  if (a % p == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p));
  std::int64_t old_r = static_cast<std::int64_t>(a % p), r = static_cast<std::int64_t>(p);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return reduce(old_s, p);
}

u64 reduce(std::int64_t x, u64 p) noexcept {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = x % sp;
  if (r < 0) r += sp;
  return static_cast<u64>(r);
}

}  // namespace residue

}  // namespace fpinc
