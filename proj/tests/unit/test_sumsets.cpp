#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fpinc/constructions.hpp"
#include "fpinc/errors.hpp"
#include "fpinc/sumsets.hpp"

using namespace fpinc;

namespace {

constexpr double kTol = 1e-12;

bool is_integer_ap(const std::vector<std::int64_t>& v) {
  for (std::size_t i = 2; i < v.size(); ++i)
    if (v[i] - v[i - 1] != v[1] - v[0]) return false;
  return true;
}

}  // namespace

TEST_CASE("full set examples") {
  const PrimeContext f101(101);
  CHECK(full_set(SetOp::Sub, make_set(f101, {0}), make_set(f101, {0})).values == make_set(f101, {0}));
  const ElementSet a = make_set(f101, {1, 2, 3, 4, 5});
  CHECK(full_set(SetOp::Sub, a, a).size() == 9);
  CHECK(full_set(SetOp::Div, a, a).size() == 19);
  CHECK(full_set(SetOp::Add, a, a).size() == 9);
  CHECK(full_set(SetOp::Mul, a, a).size() == 14);
  CHECK_THROWS_AS(full_set(SetOp::Div, a, make_set(f101, {0, 1})), DivisionByZero);
  const SetResult skipped = full_set(SetOp::Div, a, make_set(f101, {0, 1}), ZeroDivisor::Exclude);
  CHECK(skipped.excluded == 5);
  CHECK(skipped.values == a);
}

TEST_CASE("partial set examples") {
  const PrimeContext f7(7);
  const ElementSet ab = make_set(f7, {1, 2});
  const BipartiteEdgeSet complete = BipartiteEdgeSet::complete(f7, ab, ab);
  for (SetOp op : {SetOp::Add, SetOp::Sub, SetOp::Mul, SetOp::Div})
    CHECK(partial_set(op, complete).values == full_set(op, ab, ab).values);

  const FieldElement one(f7, 1), two(f7, 2);
  const BipartiteEdgeSet g = BipartiteEdgeSet::from_edges(f7, {{one, one}, {two, one}});
  CHECK(partial_set(SetOp::Sub, g).values == make_set(f7, {0, 1}));
  CHECK(partial_set(SetOp::Div, g).values == make_set(f7, {1, 2}));
  CHECK(partial_set(SetOp::Sub, BipartiteEdgeSet(f7)).values.empty());

  const BipartiteEdgeSet z = BipartiteEdgeSet::from_edges(f7, {{one, FieldElement(f7, 0)}, {two, one}});
  CHECK_THROWS_AS(partial_set(SetOp::Div, z), DivisionByZero);
  const SetResult r = partial_set(SetOp::Div, z, ZeroDivisor::Exclude);
  CHECK(r.excluded == 1);
  CHECK(r.values == make_set(f7, {2}));
}

TEST_CASE("edge set validation and padding") {
  const PrimeContext f7(7);
  const FieldElement one(f7, 1), two(f7, 2), three(f7, 3);
  const ElementSet a = make_set(f7, {1, 2}), b = make_set(f7, {1, 3});
  CHECK_THROWS_AS(BipartiteEdgeSet(f7, a, b, {{one, two}}), InvalidArgument);
  CHECK_THROWS_AS(BipartiteEdgeSet(f7, a, b, {{one, one}}), InvalidArgument);
  CHECK_NOTHROW(BipartiteEdgeSet(f7, a, b, {{one, one}}, make_set(f7, {2}), make_set(f7, {3})));
  CHECK_THROWS_AS(BipartiteEdgeSet(f7, a, b, {{one, one}, {two, three}}, make_set(f7, {2}), {}), InvalidArgument);
  const BipartiteEdgeSet g(f7, a, b, {{one, one}}, make_set(f7, {2}), make_set(f7, {3}));
  CHECK(g.neighbors(two).empty());
  CHECK_THROWS_AS(g.neighbors(three), InvalidArgument);
  // padding never changes a partial set
  CHECK(partial_set(SetOp::Sub, g).values == make_set(f7, {0}));

  const BipartiteEdgeSet z =
      BipartiteEdgeSet::from_edges(f7, {{FieldElement(f7, 0), one}, {one, FieldElement(f7, 0)}, {two, three}});
  const BipartiteEdgeSet nz = z.without_zero_endpoints();
  CHECK(nz.edges().size() == 1);
  CHECK(nz.left() == make_set(f7, {2}));
}

TEST_CASE("partial sets are contained in full sets") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const BipartiteEdgeSet g = random_bipartite(1 + rng() % 8, 1 + rng() % 8, 0.5, 53, rng());
    for (SetOp op : {SetOp::Add, SetOp::Sub, SetOp::Mul, SetOp::Div}) {
      const ElementSet part = partial_set(op, g, ZeroDivisor::Exclude).values;
      const ElementSet full = full_set(op, g.left(), g.right(), ZeroDivisor::Exclude).values;
      CHECK(std::includes(full.begin(), full.end(), part.begin(), part.end()));
    }
  }
}

TEST_CASE("|A-A| >= 2|A|-1 with equality exactly for arithmetic progressions") {
  const PrimeContext f101(101);
  for (unsigned mask = 1; mask < (1u << 12); ++mask) {
    std::vector<std::int64_t> v;
    for (std::int64_t i = 0; i < 12; ++i)
      if (mask >> i & 1) v.push_back(i);
    const ElementSet a = make_set(f101, v);
    const std::size_t d = full_set(SetOp::Sub, a, a).size();
    REQUIRE(d >= 2 * a.size() - 1);
    REQUIRE((d == 2 * a.size() - 1) == is_integer_ap(v));
  }
}

TEST_CASE("|A/A| >= 2|A|-1 with equality for geometric progressions") {
  const PrimeContext f101(101);
  for (std::int64_t ratio : {2, 3, 5}) {
    for (std::size_t n = 1; n <= 8; ++n) {
      std::vector<std::int64_t> v;
      std::int64_t x = 1;
      for (std::size_t i = 0; i < n; ++i, x = x * ratio % 101) v.push_back(x);
      const ElementSet a = make_set(f101, v);
      CHECK(full_set(SetOp::Div, a, a).size() == 2 * n - 1);
    }
  }
}

TEST_CASE("translation and dilation invariance") {
  std::mt19937_64 rng(4);
  const PrimeContext f101(101);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::int64_t> v;
    for (int i = 0; i < 6; ++i) v.push_back(static_cast<std::int64_t>(1 + rng() % 100));
    const ElementSet a = make_set(f101, v);
    const std::int64_t t = static_cast<std::int64_t>(rng() % 101), lam = static_cast<std::int64_t>(1 + rng() % 100);
    std::vector<std::int64_t> shifted, scaled;
    for (auto x : v) {
      shifted.push_back(x + t);
      scaled.push_back(x * lam);
    }
    const ElementSet as = make_set(f101, shifted), al = make_set(f101, scaled);
    CHECK(full_set(SetOp::Sub, as, as).size() == full_set(SetOp::Sub, a, a).size());
    CHECK(full_set(SetOp::Div, al, al).size() == full_set(SetOp::Div, a, a).size());
  }
}

TEST_CASE("difference-ratio measurement") {
  const PrimeContext f101(101);
  const DifferenceRatio one = rudnev_ratio(make_set(f101, {7}));
  CHECK(one.dminus == 1);
  CHECK(one.dratio == 1);
  CHECK(one.ratio == doctest::Approx(1.0).epsilon(kTol));

  const DifferenceRatio r = rudnev_ratio(make_set(f101, {1, 2, 3, 4, 5}));
  CHECK(r.dminus == 9);
  CHECK(r.dratio == 19);
  CHECK(r.ratio == doctest::Approx(3.2827731220698437).epsilon(kTol));
  CHECK_FALSE(r.warn_large);

  const DifferenceRatio gp = rudnev_ratio(make_set(f101, {1, 2, 4, 8, 16}));
  CHECK(gp.dratio == 9);
  CHECK(gp.dminus == 21);

  // zero is left out of the divisor side only
  const DifferenceRatio z = rudnev_ratio(make_set(f101, {0, 1, 2}));
  CHECK(z.dratio == 4);  // {0, 1, 2, 1/2}
  CHECK(rudnev_ratio(make_set(f101, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11})).warn_large);
  CHECK_THROWS_AS(rudnev_ratio(ElementSet{}), InvalidArgument);
}
