#include "fpinc/plane.hpp"

#include <algorithm>
#include <string>

#include "fpinc/errors.hpp"

namespace fpinc {

namespace detail {

template <class Tag>
void Homogeneous<Tag>::canonicalize() {
  for (std::size_t i = 3; i-- > 0;) {
    if (c_[i] != 0) {
      if (c_[i] == 1) return;
      const u64 s = residue::inv(c_[i], p_);
      for (auto& v : c_) v = residue::mul(v, s, p_);
      return;
    }
  }
  throw InvalidArgument("homogeneous triple (0, 0, 0) is not a projective element");
}

template class Homogeneous<PointTag>;
template class Homogeneous<LineTag>;

}  // namespace detail

namespace {

void require_same_field(u64 p, u64 q) {
  if (p != q) {
    throw ContextMismatch("projective objects over F_" + std::to_string(p) + " and F_" +
                          std::to_string(q));
  }
}

Triple cross(const Triple& u, const Triple& v, u64 p) {
  auto term = [p](u64 a, u64 b, u64 c, u64 d) {
    return residue::sub(residue::mul(a, b, p), residue::mul(c, d, p), p);
  };
  return {term(u[1], v[2], u[2], v[1]), term(u[2], v[0], u[0], v[2]),
          term(u[0], v[1], u[1], v[0])};
}

u64 dot(const Triple& u, const Triple& v, u64 p) {
  u64 s = 0;
  for (std::size_t i = 0; i < 3; ++i) s = residue::add(s, residue::mul(u[i], v[i], p), p);
  return s;
}

Triple mat_vec(const Matrix3& m, const Triple& v, u64 p) {
  return {dot(m[0], v, p), dot(m[1], v, p), dot(m[2], v, p)};
}

Triple transpose_mat_vec(const Matrix3& m, const Triple& v, u64 p) {
  Triple r{};
  for (std::size_t i = 0; i < 3; ++i) {
    u64 s = 0;
    for (std::size_t k = 0; k < 3; ++k) s = residue::add(s, residue::mul(m[k][i], v[k], p), p);
    r[i] = s;
  }
  return r;
}

Matrix3 mat_mul(const Matrix3& a, const Matrix3& b, u64 p) {
  Matrix3 r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      u64 s = 0;
      for (std::size_t k = 0; k < 3; ++k) s = residue::add(s, residue::mul(a[i][k], b[k][j], p), p);
      r[i][j] = s;
    }
  return r;
}

// Inverse by adjugate; returns false when singular.
bool mat_inverse(const Matrix3& m, u64 p, Matrix3& out) {
  // rows of the adjugate transpose are cross products of column pairs
  const Triple r0 = cross(m[1], m[2], p);
  const Triple r1 = cross(m[2], m[0], p);
  const Triple r2 = cross(m[0], m[1], p);
  const u64 det = dot(m[0], r0, p);
  if (det == 0) return false;
  const u64 di = residue::inv(det, p);
  for (std::size_t i = 0; i < 3; ++i) {
    out[i][0] = residue::mul(r0[i], di, p);
    out[i][1] = residue::mul(r1[i], di, p);
    out[i][2] = residue::mul(r2[i], di, p);
  }
  return true;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const ProjPoint& pt) {
  return os << '(' << pt[0] << ", " << pt[1] << ", " << pt[2] << ')';
}

std::ostream& operator<<(std::ostream& os, const ProjLine& l) {
  return os << '[' << l[0] << ", " << l[1] << ", " << l[2] << ']';
}

bool incident(const ProjPoint& pt, const ProjLine& l) {
  require_same_field(pt.modulus(), l.modulus());
  return dot(pt.coords(), l.coords(), pt.modulus()) == 0;
}

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
  require_same_field(p.modulus(), q.modulus());
  if (p == q) throw DegenerateInput("line_through: points coincide");
  return ProjLine::from_residues(cross(p.coords(), q.coords(), p.modulus()), p.modulus());
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  require_same_field(l.modulus(), m.modulus());
  if (l == m) throw DegenerateInput("meet: lines coincide");
  return ProjPoint::from_residues(cross(l.coords(), m.coords(), l.modulus()), l.modulus());
}

namespace {

template <class T>
std::vector<T> enumerate_plane(const PrimeContext& ctx) {
  const u64 p = ctx.p();
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(p * p + p + 1));
  // canonical triples: (x, 1, 0) after (1, 0, 0), then affine (x, y, 1)
  out.push_back(T::from_residues({1, 0, 0}, p));
  for (u64 x = 0; x < p; ++x) out.push_back(T::from_residues({x, 1, 0}, p));
  for (u64 x = 0; x < p; ++x)
    for (u64 y = 0; y < p; ++y) out.push_back(T::from_residues({x, y, 1}, p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<ProjPoint> all_points(const PrimeContext& ctx) {
  auto raw = enumerate_plane<detail::Homogeneous<PointTag>>(ctx);
  return {raw.begin(), raw.end()};
}

std::vector<ProjLine> all_lines(const PrimeContext& ctx) {
  auto raw = enumerate_plane<detail::Homogeneous<LineTag>>(ctx);
  return {raw.begin(), raw.end()};
}

ProjMap::ProjMap(const PrimeContext& ctx, const std::array<std::array<std::int64_t, 3>, 3>& m)
    : p_(ctx.p()) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m_[i][j] = residue::reduce(m[i][j], p_);
  if (!mat_inverse(m_, p_, inv_)) throw InvalidArgument("ProjMap: singular matrix");
}

ProjMap ProjMap::from_residues(const Matrix3& m, u64 p) {
  Matrix3 inv{};
  if (!mat_inverse(m, p, inv)) throw InvalidArgument("ProjMap: singular matrix");
  return ProjMap(p, m, inv);
}

ProjMap ProjMap::identity(const PrimeContext& ctx) {
  return ProjMap(ctx, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
}

ProjPoint ProjMap::apply(const ProjPoint& pt) const {
  require_same_field(p_, pt.modulus());
  return ProjPoint::from_residues(mat_vec(m_, pt.coords(), p_), p_);
}

ProjLine ProjMap::apply(const ProjLine& l) const {
  require_same_field(p_, l.modulus());
  return ProjLine::from_residues(transpose_mat_vec(inv_, l.coords(), p_), p_);
}

ProjMap operator*(const ProjMap& a, const ProjMap& b) {
  require_same_field(a.p_, b.p_);
  return ProjMap(a.p_, mat_mul(a.m_, b.m_, a.p_), mat_mul(b.inv_, a.inv_, a.p_));
}

bool ProjMap::same_projective_map(const ProjMap& other) const {
  if (p_ != other.p_) return false;
  // find a nonzero entry to fix the scalar
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (m_[i][j] == 0) continue;
      if (other.m_[i][j] == 0) return false;
      const u64 s = residue::mul(other.m_[i][j], residue::inv(m_[i][j], p_), p_);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
          if (residue::mul(m_[r][c], s, p_) != other.m_[r][c]) return false;
      return true;
    }
  return false;
}

ProjMap translate(const FieldElement& dx, const FieldElement& dy) {
  require_same_field(dx.modulus(), dy.modulus());
  return ProjMap::from_residues({{{1, 0, dx.value()}, {0, 1, dy.value()}, {0, 0, 1}}}, dx.modulus());
}

ProjMap scale_y(const FieldElement& lambda) {
  if (lambda.is_zero()) throw InvalidArgument("scale_y: lambda = 0 is singular");
  return ProjMap::from_residues({{{1, 0, 0}, {0, lambda.value(), 0}, {0, 0, 1}}},
                                lambda.modulus());
}

ProjMap normalizing_map(const ProjLine& common_line, const ProjPoint& p3, const ProjPoint& p4) {
  const u64 p = common_line.modulus();
  require_same_field(p, p3.modulus());
  require_same_field(p, p4.modulus());
  if (p3 == p4) throw DegenerateInput("normalizing_map: p3 and p4 coincide");
  if (!incident(p3, common_line) || !incident(p4, common_line)) {
    throw InvalidArgument("normalizing_map: p3 and p4 must lie on the common line");
  }
  // Any point off the line completes a frame; e3 first so an already
  // normalized configuration yields the identity.
  Triple off{0, 0, 1};
  for (const Triple& cand : {Triple{0, 0, 1}, Triple{1, 0, 0}, Triple{0, 1, 0}}) {
    if (dot(cand, common_line.coords(), p) != 0) {
      off = cand;
      break;
    }
  }
  // Columns are the preimages of e1, e2, e3.
  Matrix3 frame{};
  for (std::size_t i = 0; i < 3; ++i) {
    frame[i][0] = p3[i];
    frame[i][1] = p4[i];
    frame[i][2] = off[i];
  }
  const ProjMap tau = ProjMap::from_residues(frame, p).inverse();

  if (tau.apply(common_line) != ProjLine::from_residues({0, 0, 1}, p) ||
      tau.apply(p3) != ProjPoint::from_residues({1, 0, 0}, p) ||
      tau.apply(p4) != ProjPoint::from_residues({0, 1, 0}, p)) {
    throw InvariantViolation("normalizing_map: post-conditions failed");
  }
  return tau;
}

}  // namespace fpinc
