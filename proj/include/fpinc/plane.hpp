#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

#include "fpinc/field.hpp"

namespace fpinc {

using Triple = std::array<u64, 3>;

namespace detail {

// Homogeneous triple in canonical form: the rightmost nonzero coordinate is
// 1. Equality of canonical triples is projective equality.
template <class Tag>
class Homogeneous {
 public:
  Homogeneous(const PrimeContext& ctx, std::int64_t a, std::int64_t b, std::int64_t c)
      : p_(ctx.p()),
        c_{residue::reduce(a, ctx.p()), residue::reduce(b, ctx.p()), residue::reduce(c, ctx.p())} {
    canonicalize();
  }

  // Residues must already lie in [0, p).
  static Homogeneous from_residues(const Triple& t, u64 p) {
    Homogeneous h(p, t);
    h.canonicalize();
    return h;
  }

  const Triple& coords() const noexcept { return c_; }
  u64 operator[](std::size_t i) const noexcept { return c_[i]; }
  FieldElement coord(std::size_t i) const noexcept { return FieldElement::from_residue(c_[i], p_); }
  u64 modulus() const noexcept { return p_; }

  friend bool operator==(const Homogeneous&, const Homogeneous&) = default;
  friend auto operator<=>(const Homogeneous&, const Homogeneous&) = default;

 private:
  Homogeneous(u64 p, const Triple& t) : p_(p), c_(t) {}
  void canonicalize();

  u64 p_;
  Triple c_;
};

}  // namespace detail

struct PointTag {};
struct LineTag {};

// Point of PG(2,p); affine points are (x, y, 1).
class ProjPoint : public detail::Homogeneous<PointTag> {
 public:
  using Homogeneous::Homogeneous;
  ProjPoint(const Homogeneous& h) : Homogeneous(h) {}
  static ProjPoint affine(const PrimeContext& ctx, std::int64_t x, std::int64_t y) {
    return ProjPoint(ctx, x, y, 1);
  }
  bool is_affine() const noexcept { return (*this)[2] != 0; }
};

// Line {ax + by + cz = 0} of PG(2,p).
class ProjLine : public detail::Homogeneous<LineTag> {
 public:
  using Homogeneous::Homogeneous;
  ProjLine(const Homogeneous& h) : Homogeneous(h) {}
  // y = m x + c
  static ProjLine slope_intercept(const PrimeContext& ctx, std::int64_t m, std::int64_t c) {
    return ProjLine(ctx, m, -1, c);
  }
  // x = k
  static ProjLine vertical(const PrimeContext& ctx, std::int64_t k) { return ProjLine(ctx, 1, 0, -k); }
  static ProjLine at_infinity(const PrimeContext& ctx) { return ProjLine(ctx, 0, 0, 1); }

  bool is_at_infinity() const noexcept { return (*this)[0] == 0 && (*this)[1] == 0; }
};

std::ostream& operator<<(std::ostream& os, const ProjPoint& pt);
std::ostream& operator<<(std::ostream& os, const ProjLine& l);

bool incident(const ProjPoint& pt, const ProjLine& l);

// Unique line through two distinct points. Throws DegenerateInput when p == q.
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);
// Unique common point of two distinct lines.
ProjPoint meet(const ProjLine& l, const ProjLine& m);

// All p^2 + p + 1 points / lines of PG(2,p) in canonical order.
std::vector<ProjPoint> all_points(const PrimeContext& ctx);
std::vector<ProjLine> all_lines(const PrimeContext& ctx);

using Matrix3 = std::array<Triple, 3>;

// Invertible 3x3 matrix over F_p acting on PG(2,p). Points map by M v, lines
// by M^{-T} l, so incidence is preserved identically.
class ProjMap {
 public:
  // Throws InvalidArgument if singular.
  ProjMap(const PrimeContext& ctx, const std::array<std::array<std::int64_t, 3>, 3>& m);
  static ProjMap from_residues(const Matrix3& m, u64 p);
  static ProjMap identity(const PrimeContext& ctx);

  ProjPoint apply(const ProjPoint& pt) const;
  ProjLine apply(const ProjLine& l) const;

  // (a * b)(x) == a(b(x))
  friend ProjMap operator*(const ProjMap& a, const ProjMap& b);

  ProjMap inverse() const { return ProjMap(p_, inv_, m_); }
  const Matrix3& matrix() const noexcept { return m_; }
  u64 modulus() const noexcept { return p_; }

  // Equal as projective maps, i.e. matrices equal up to a nonzero scalar.
  bool same_projective_map(const ProjMap& other) const;

 private:
  ProjMap(u64 p, const Matrix3& m, const Matrix3& inv) : p_(p), m_(m), inv_(inv) {}
  u64 p_;
  Matrix3 m_;
  Matrix3 inv_;
};

// (x, y, 1) -> (x + dx, y + dy, 1)
ProjMap translate(const FieldElement& dx, const FieldElement& dy);
// (x, y) -> (x, lambda y). Throws InvalidArgument for lambda = 0.
ProjMap scale_y(const FieldElement& lambda);

// A map sending `common_line` to the line at infinity, p3 to (1,0,0) and p4
// to (0,1,0): lines through p3 become horizontal, lines through p4 vertical.
// The map is not unique; the result is checked against those images before
// it is returned.
ProjMap normalizing_map(const ProjLine& common_line, const ProjPoint& p3, const ProjPoint& p4);

}  // namespace fpinc

template <>
struct std::hash<fpinc::ProjPoint> {
  std::size_t operator()(const fpinc::ProjPoint& x) const noexcept {
    return (x[0] * 0x9E3779B97F4A7C15ULL) ^ (x[1] * 0xC2B2AE3D27D4EB4FULL) ^ x[2];
  }
};
template <>
struct std::hash<fpinc::ProjLine> {
  std::size_t operator()(const fpinc::ProjLine& x) const noexcept {
    return (x[0] * 0x9E3779B97F4A7C15ULL) ^ (x[1] * 0xC2B2AE3D27D4EB4FULL) ^ x[2];
  }
};
