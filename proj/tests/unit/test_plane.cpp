#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fpinc/errors.hpp"
#include "fpinc/plane.hpp"

using namespace fpinc;

namespace {

ProjMap random_map(u64 p, std::mt19937_64& rng) {
  for (;;) {
    Matrix3 m{};
    for (auto& row : m)
      for (auto& x : row) x = rng() % p;
    try {
      return ProjMap::from_residues(m, p);
    } catch (const InvalidArgument&) {
    }
  }
}

ProjPoint random_point(u64 p, std::mt19937_64& rng) {
  for (;;) {
    const Triple t{rng() % p, rng() % p, rng() % p};
    if (t[0] || t[1] || t[2]) return ProjPoint::from_residues(t, p);
  }
}

}  // namespace

TEST_CASE("canonical form") {
  const PrimeContext f5(5);
  CHECK(ProjPoint(f5, 2, 4, 2) == ProjPoint(f5, 1, 2, 1));
  CHECK(ProjPoint(f5, 3, 0, 0).coords() == Triple{1, 0, 0});
  CHECK(ProjLine(f5, 1, 4, 0).coords() == Triple{4, 1, 0});
  const ProjPoint x(f5, 3, 2, 4);
  CHECK(ProjPoint::from_residues(x.coords(), 5) == x);
  CHECK_THROWS_AS(ProjPoint(f5, 0, 5, 10), InvalidArgument);
}

TEST_CASE("line_through examples") {
  const PrimeContext f5(5);
  const ProjLine diag = line_through(ProjPoint::affine(f5, 0, 0), ProjPoint::affine(f5, 1, 1));
  CHECK(diag == ProjLine(f5, 1, 4, 0));
  CHECK(diag == ProjLine::slope_intercept(f5, 1, 0));
  CHECK(line_through(ProjPoint::affine(f5, 0, 0), ProjPoint::affine(f5, 0, 3)).coords() == Triple{1, 0, 0});
  CHECK_THROWS_AS(line_through(ProjPoint::affine(f5, 1, 2), ProjPoint(f5, 2, 4, 2)), DegenerateInput);
}

TEST_CASE("incidence examples") {
  const PrimeContext f5(5);
  const ProjLine y2x = ProjLine::slope_intercept(f5, 2, 0);
  CHECK(incident(ProjPoint::affine(f5, 2, 4), y2x));
  CHECK_FALSE(incident(ProjPoint::affine(f5, 1, 1), y2x));
  CHECK(incident(ProjPoint(f5, 1, 0, 0), ProjLine::at_infinity(f5)));
  CHECK(incident(ProjPoint(f5, 1, 2, 0), y2x));  // the direction of y = 2x
}

TEST_CASE("meet and line_through are dual") {
  std::mt19937_64 rng(3);
  const u64 p = 13;
  for (int i = 0; i < 200; ++i) {
    const ProjPoint a = random_point(p, rng), b = random_point(p, rng);
    if (a == b) continue;
    const ProjLine l = line_through(a, b);
    CHECK(incident(a, l));
    CHECK(incident(b, l));
    const ProjPoint c = random_point(p, rng);
    if (c == a) continue;
    const ProjLine m = line_through(a, c);
    if (m != l) CHECK(meet(l, m) == a);
  }
}

TEST_CASE("PG(2,p) counting oracle") {
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    const PrimeContext ctx(p);
    const auto pts = all_points(ctx);
    const auto lines = all_lines(ctx);
    CHECK(pts.size() == p * p + p + 1);
    CHECK(lines.size() == p * p + p + 1);
    for (const auto& l : lines) {
      std::size_t on = 0;
      for (const auto& x : pts) on += incident(x, l);
      CHECK(on == p + 1);
    }
  }
  const PrimeContext f3(3);
  std::size_t total = 0;
  for (const auto& x : all_points(f3))
    for (const auto& l : all_lines(f3)) total += incident(x, l);
  CHECK(total == 52);
}

TEST_CASE("maps preserve incidence exhaustively for p <= 7") {
  std::mt19937_64 rng(17);
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    const PrimeContext ctx(p);
    const auto pts = all_points(ctx);
    const auto lines = all_lines(ctx);
    for (int trial = 0; trial < (p == 3 ? 100 : 10); ++trial) {
      const ProjMap m = random_map(p, rng);
      for (const auto& x : pts)
        for (const auto& l : lines) REQUIRE(incident(x, l) == incident(m.apply(x), m.apply(l)));
    }
  }
}

TEST_CASE("maps preserve incidence on random samples for larger p") {
  std::mt19937_64 rng(23);
  for (u64 p : {101ULL, 65537ULL, 4294967291ULL}) {
    for (int trial = 0; trial < 50; ++trial) {
      const ProjMap m = random_map(p, rng);
      const ProjPoint a = random_point(p, rng), b = random_point(p, rng);
      if (a == b) continue;
      const ProjLine l = line_through(a, b);
      REQUIRE(incident(m.apply(a), m.apply(l)));
      REQUIRE(m.apply(l) == line_through(m.apply(a), m.apply(b)));
      REQUIRE(m.inverse().apply(m.apply(a)) == a);
    }
  }
}

TEST_CASE("composition and singular matrices") {
  std::mt19937_64 rng(5);
  const u64 p = 11;
  const ProjMap a = random_map(p, rng), b = random_map(p, rng);
  const ProjPoint x = random_point(p, rng);
  CHECK((a * b).apply(x) == a.apply(b.apply(x)));
  CHECK((a * a.inverse()).same_projective_map(ProjMap::identity(PrimeContext(p))));
  CHECK_THROWS_AS(ProjMap(PrimeContext(p), {{{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}}), InvalidArgument);
}

TEST_CASE("identity, translations and axis scalings") {
  const PrimeContext f7(7);
  const ProjMap id = ProjMap::identity(f7);
  for (const auto& x : all_points(f7)) CHECK(id.apply(x) == x);
  for (const auto& l : all_lines(f7)) CHECK(id.apply(l) == l);
  CHECK(translate(FieldElement(f7, 0), FieldElement(f7, 0)).same_projective_map(id));

  CHECK(scale_y(FieldElement(f7, 2)).apply(ProjPoint::affine(f7, 3, 1)) == ProjPoint::affine(f7, 3, 2));
  CHECK(translate(FieldElement(f7, 2), FieldElement(f7, 5)).apply(ProjPoint::affine(f7, 3, 4)) ==
        ProjPoint::affine(f7, 5, 2));
  CHECK_THROWS_AS(scale_y(FieldElement(f7, 0)), InvalidArgument);

  // both fix the line at infinity
  CHECK(scale_y(FieldElement(f7, 3)).apply(ProjLine::at_infinity(f7)) == ProjLine::at_infinity(f7));
  CHECK(translate(FieldElement(f7, 1), FieldElement(f7, 6)).apply(ProjLine::at_infinity(f7)) ==
        ProjLine::at_infinity(f7));
}

TEST_CASE("delta_lambda sends y = m x + c to y = (lambda m) x + lambda c") {
  const PrimeContext f7(7);
  for (std::int64_t lam = 1; lam < 7; ++lam) {
    const ProjMap d = scale_y(FieldElement(f7, lam));
    for (std::int64_t m = 0; m < 7; ++m)
      for (std::int64_t c = 0; c < 7; ++c) {
        const ProjLine image = ProjLine::slope_intercept(f7, lam * m, lam * c);
        CHECK(d.apply(ProjLine::slope_intercept(f7, m, c)) == image);
        for (std::int64_t x = 0; x < 7; ++x) CHECK(incident(d.apply(ProjPoint::affine(f7, x, m * x + c)), image));
      }
  }
}

TEST_CASE("delta_{1/z} turns a gradient-z pencil into gradient 1") {
  const PrimeContext f101(101);
  const FieldElement z(f101, 7);
  const ProjMap d = scale_y(inv(z));
  for (std::int64_t c = 0; c < 10; ++c) {
    const ProjLine image = d.apply(ProjLine::slope_intercept(f101, 7, c));
    const std::int64_t c_scaled = static_cast<std::int64_t>((FieldElement(f101, c) * inv(z)).value());
    CHECK(image == ProjLine::slope_intercept(f101, 1, c_scaled));
  }
}

TEST_CASE("normalizing_map examples") {
  const PrimeContext f5(5);
  const ProjLine inf = ProjLine::at_infinity(f5);
  const ProjMap id = normalizing_map(inf, ProjPoint(f5, 1, 0, 0), ProjPoint(f5, 0, 1, 0));
  CHECK(id.same_projective_map(ProjMap::identity(f5)));

  const ProjLine l(f5, 1, 1, 1);
  const ProjPoint p3 = ProjPoint::affine(f5, 4, 0), p4 = ProjPoint::affine(f5, 0, 4);
  const ProjMap m = normalizing_map(l, p3, p4);
  CHECK(m.apply(l) == inf);
  CHECK(m.apply(p3) == ProjPoint(f5, 1, 0, 0));
  CHECK(m.apply(p4) == ProjPoint(f5, 0, 1, 0));
  // solution of the three-point correspondence, computed independently
  CHECK(m.same_projective_map(ProjMap(f5, {{{4, 0, 0}, {0, 4, 0}, {1, 1, 1}}})));

  CHECK_THROWS_AS(normalizing_map(l, p3, p3), DegenerateInput);
  CHECK_THROWS_AS(normalizing_map(l, p3, ProjPoint::affine(f5, 1, 1)), InvalidArgument);
}

TEST_CASE("normalizing_map post-conditions on random inputs") {
  std::mt19937_64 rng(29);
  for (u64 p : {2ULL, 3ULL, 5ULL, 31ULL, 101ULL}) {
    for (int trial = 0; trial < 100; ++trial) {
      const ProjPoint a = random_point(p, rng), b = random_point(p, rng);
      if (a == b) continue;
      const ProjLine l = line_through(a, b);
      const ProjMap m = normalizing_map(l, a, b);
      REQUIRE(m.apply(l) == ProjLine::from_residues({0, 0, 1}, p));
      REQUIRE(m.apply(a) == ProjPoint::from_residues({1, 0, 0}, p));
      REQUIRE(m.apply(b) == ProjPoint::from_residues({0, 1, 0}, p));
      // lines through a become horizontal, lines through b vertical
      const ProjPoint off = random_point(p, rng);
      if (!incident(off, l)) {
        const ProjLine h = m.apply(line_through(a, off)), v = m.apply(line_through(b, off));
        REQUIRE(h[0] == 0);
        REQUIRE(v[1] == 0);
      }
    }
  }
}
