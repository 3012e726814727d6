#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>
#include <set>

#include "fpinc/constructions.hpp"
#include "fpinc/errors.hpp"
#include "fpinc/incidence.hpp"

using namespace fpinc;

namespace {

// Random instance that also uses points at infinity and the line at infinity.
Instance mixed_instance(u64 p, std::size_t n, std::uint64_t seed) {
  const PrimeContext ctx(p);
  std::mt19937_64 rng(seed);
  std::set<ProjPoint> pts;
  std::set<ProjLine> lines;
  const std::size_t total = p * p + p + 1;
  while (pts.size() < std::min(n, total)) {
    const Triple t{rng() % p, rng() % p, rng() % 3 == 0 ? u64{0} : u64{1}};
    if (t[0] || t[1] || t[2]) pts.insert(ProjPoint::from_residues(t, p));
  }
  while (lines.size() < std::min(n, total)) {
    const Triple t{rng() % 4 == 0 ? 0 : rng() % p, rng() % p, rng() % p};
    if (t[0] || t[1] || t[2]) lines.insert(ProjLine::from_residues(t, p));
  }
  return Instance(ctx, {pts.begin(), pts.end()}, {lines.begin(), lines.end()});
}

std::size_t direct_count(const Instance& inst) {
  std::size_t n = 0;
  for (const auto& x : inst.points())
    for (const auto& l : inst.lines()) n += incident(x, l);
  return n;
}

}  // namespace

TEST_CASE("count examples") {
  const PrimeContext f7(7);
  CHECK(count_incidences(Instance(f7)).incidences == 0);
  CHECK(count_incidences(Instance(f7, {ProjPoint::affine(f7, 1, 1)}, {})).incidences == 0);
  CHECK(count_incidences(full_plane(2)).incidences == 12);
  CHECK(count_incidences(full_plane(3)).incidences == 36);
  CHECK(count_incidences(full_plane(5)).incidences == 150);
  CHECK(count_incidences(full_plane(3, false)).incidences == 52);
  CHECK(count_incidences(elekes_grid(2, 101)).incidences == 16);
}

TEST_CASE("bruteforce and bucketed agree, degree sums match") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const u64 p = std::vector<u64>{2, 3, 5, 7, 11, 13, 101}[seed % 7];
    const Instance inst = mixed_instance(p, 5 + seed % 40, seed);
    const DegreeTables a = count_incidences(inst, CountMethod::BruteForce);
    const DegreeTables b = count_incidences(inst, CountMethod::Bucketed);
    REQUIRE(a == b);
    REQUIRE(a.incidences == direct_count(inst));
    std::size_t sp = 0, sl = 0;
    for (auto d : a.point_degree) sp += d;
    for (auto d : a.line_degree) sl += d;
    REQUIRE(sp == a.incidences);
    REQUIRE(sl == a.incidences);
    const IncidenceGraph g = incidence_graph(inst);
    for (std::size_t i = 0; i < g.lines_of_point.size(); ++i)
      REQUIRE(std::is_sorted(g.lines_of_point[i].begin(), g.lines_of_point[i].end()));
  }
}

TEST_CASE("instance invariants") {
  const PrimeContext f5(5), f7(7);
  CHECK_THROWS_AS(Instance(f5, {ProjPoint::affine(f5, 1, 2), ProjPoint(f5, 2, 4, 2)}, {}), DuplicateElement);
  CHECK_THROWS_AS(Instance(f5, {}, {ProjLine(f5, 1, 1, 1), ProjLine(f5, 2, 2, 2)}), DuplicateElement);
  CHECK_THROWS_AS(Instance(f5, {ProjPoint::affine(f7, 1, 2)}, {}), ContextMismatch);
  const Instance fp = full_plane(5);
  CHECK(fp.size_bound() == 30);
  CHECK(fp.warn_n_ge_p());
  CHECK_FALSE(elekes_grid(2, 101).warn_n_ge_p());
  CHECK(fp.point_index(ProjPoint::affine(f5, 0, 0)).has_value());
  CHECK_FALSE(fp.point_index(ProjPoint(f5, 1, 0, 0)).has_value());
}

TEST_CASE("Cauchy-Schwarz bounds hold") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst = mixed_instance(seed % 2 ? 7 : 11, 3 + seed * 3, seed);
    const TrivialBounds tb = trivial_bounds(inst.num_points(), inst.num_lines(), count_incidences(inst).incidences);
    CHECK(tb.lines_side);
    CHECK(tb.points_side);
  }
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    for (bool affine : {true, false}) {
      const Instance inst = full_plane(p, affine);
      const TrivialBounds tb = trivial_bounds(inst.num_points(), inst.num_lines(), count_incidences(inst).incidences);
      CHECK(tb.lines_side);
      CHECK(tb.points_side);
    }
  }
  // a violation is reported as one: 4 points, 1 line, I = 5 is impossible
  CHECK_FALSE(trivial_bounds(4, 1, 6).lines_side);
  // PG(2,2): I = 21 against sqrt(7) 7 + 7 = 25.52
  CHECK(trivial_bounds(7, 7, 21).lines_side);
}

TEST_CASE("truncation") {
  const PrimeContext f101(101);
  const Instance grid = elekes_grid(2, 101);
  CHECK(truncate_high_degree(grid, 100) == grid);

  std::vector<ProjLine> pencil;
  for (std::int64_t m = 0; m < 10; ++m) pencil.push_back(ProjLine::slope_intercept(f101, m, 0));
  const Instance star(f101, {ProjPoint::affine(f101, 0, 0)}, pencil);
  const Instance cut = truncate_high_degree(star, 5);
  CHECK(cut.num_points() == 0);
  CHECK(count_incidences(cut).incidences == 0);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (auto mode : {TruncationMode::Fixpoint, TruncationMode::SinglePass}) {
      const Instance r = random_instance(60, 101, seed);
      const DegreeTables t = count_incidences(truncate_high_degree(r, 8, mode));
      for (auto d : t.point_degree) CHECK(d <= 8);
      for (auto d : t.line_degree) CHECK(d <= 8);
    }
  }
  // the full plane p = 7 has point degree 8: a cap of 7 removes every point
  CHECK(truncate_high_degree(full_plane(7), 7).num_points() == 0);

  const Instance dense = mixed_instance(7, 40, 99);
  const DegreeTables fx = count_incidences(truncate_high_degree(dense, 4, TruncationMode::Fixpoint));
  for (auto d : fx.point_degree) CHECK(d <= 4);
  for (auto d : fx.line_degree) CHECK(d <= 4);
  CHECK_THROWS_AS(truncate_high_degree(dense, 0), InvalidArgument);
}

TEST_CASE("discard bound: removing degree >= C K_max points loses at most (2/C) sum d^2 / K_max") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = mixed_instance(13, 60 + seed, seed);
    const DegreeTables t = count_incidences(inst);
    double sum_sq = 0;
    for (auto d : t.point_degree) sum_sq += static_cast<double>(d * d);
    for (std::size_t k_max : {1, 2, 3}) {
      for (double c : {1.0, 2.0, 3.0}) {
        double lost = 0;
        for (auto d : t.point_degree)
          if (static_cast<double>(d) >= c * static_cast<double>(k_max)) lost += static_cast<double>(d);
        CHECK(lost <= (2.0 / c) * sum_sq / static_cast<double>(k_max));
      }
    }
  }
}

TEST_CASE("dyadic selection") {
  const std::vector<std::size_t> flat(6, 5);
  const DyadicSelection all = dyadic_select(flat, 1);
  CHECK(all.members.size() == 6);
  CHECK(all.k == 4);

  const std::vector<std::size_t> d{1, 1, 1, 8, 8};
  const DyadicSelection s = dyadic_select(d, 1);
  CHECK(s.members == std::vector<Index>{3, 4});
  CHECK(s.k == 8);
  CHECK(s.mass == 16);

  const std::vector<std::size_t> tie{1, 1, 2};
  CHECK(dyadic_select(tie, 1).k == 1);
  CHECK(dyadic_select(std::vector<std::size_t>{0, 1, 2}, 5).empty());
  CHECK_THROWS_AS(dyadic_select(tie, 0), InvalidArgument);
  CHECK_FALSE(dyadic_select(Instance(PrimeContext(5)), 1).has_value());
}

TEST_CASE("dyadic pigeonhole: the chosen bucket carries at least a 1/bit_width(N) share") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = mixed_instance(11, 20 + seed * 2, seed);
    const DegreeTables t = count_incidences(inst);
    for (std::size_t d_min : {1, 2, 3}) {
      const DyadicSelection s = dyadic_select(t.point_degree, d_min);
      std::size_t above = 0;
      for (auto d : t.point_degree)
        if (d >= d_min) above += d;
      if (above == 0) {
        CHECK(s.empty());
        continue;
      }
      const std::size_t buckets = static_cast<std::size_t>(std::bit_width(inst.size_bound()));
      CHECK(s.mass * buckets >= above);
      std::size_t m = 0;
      for (Index i : s.members) {
        CHECK(t.point_degree[i] >= s.k);
        CHECK(t.point_degree[i] < 2 * s.k);
        m += t.point_degree[i];
      }
      CHECK(m == s.mass);
    }
  }
}
