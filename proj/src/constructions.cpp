#include "fpinc/constructions.hpp"

#include <limits>
#include <unordered_set>

#include "fpinc/errors.hpp"

namespace fpinc {

namespace {

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("uniform_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Instance elekes_grid(std::uint64_t n, u64 p) {
  const PrimeContext ctx(p);
  if (n < 1) throw InvalidArgument("elekes_grid: n must be >= 1");
  if (n > 4096 || p <= 2 * n * n) {
    throw InvalidArgument("elekes_grid: need p > 2 n^2 (n = " + std::to_string(n) +
                          ", p = " + std::to_string(p) + ")");
  }
  std::vector<ProjPoint> points;
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < 2 * n * n; ++y) points.push_back(ProjPoint::affine(ctx, as_int(x), as_int(y)));
  std::vector<ProjLine> lines;
  for (std::uint64_t m = 0; m < n; ++m)
    for (std::uint64_t c = 0; c < n * n; ++c)
      lines.push_back(ProjLine::slope_intercept(ctx, as_int(m), as_int(c)));
  return Instance(ctx, std::move(points), std::move(lines));
}

Instance random_instance(std::uint64_t n, u64 p, std::uint64_t seed) {
  const PrimeContext ctx(p);
  const u64 affine_points = p * p;
  const u64 affine_lines = p * p + p;
  if (n > affine_points) {
    throw InvalidArgument("random_instance: N = " + std::to_string(n) + " exceeds the " +
                          std::to_string(affine_points) + " affine points");
  }
  std::mt19937_64 rng(seed);
  auto draw = [&](u64 universe) {
    // Floyd's sampling: n distinct indices, deterministic in the seed
    std::vector<u64> picked;
    std::unordered_set<u64> seen;
    for (u64 j = universe - n; j < universe; ++j) {
      u64 t = uniform_below(rng, j + 1);
      if (!seen.insert(t).second) {
        seen.insert(j);
        t = j;
      }
      picked.push_back(t);
    }
    return picked;
  };
  std::vector<ProjPoint> points;
  for (u64 idx : draw(affine_points)) points.push_back(ProjPoint::affine(ctx, as_int(idx / p), as_int(idx % p)));
  std::vector<ProjLine> lines;
  for (u64 idx : draw(affine_lines)) {
    lines.push_back(idx < p * p ? ProjLine::slope_intercept(ctx, as_int(idx / p), as_int(idx % p))
                                : ProjLine::vertical(ctx, as_int(idx - p * p)));
  }
  return Instance(ctx, std::move(points), std::move(lines));
}

Instance full_plane(u64 p, bool affine_only) {
  const PrimeContext ctx(p);
  if (p > kMaxFullPlaneModulus) {
    throw InvalidArgument("full_plane: p = " + std::to_string(p) + " too large to enumerate (max " +
                          std::to_string(kMaxFullPlaneModulus) + ")");
  }
  std::vector<ProjPoint> points = all_points(ctx);
  std::vector<ProjLine> lines = all_lines(ctx);
  if (affine_only) {
    std::erase_if(points, [](const ProjPoint& pt) { return !pt.is_affine(); });
    std::erase_if(lines, [](const ProjLine& l) { return l.is_at_infinity(); });
  }
  return Instance(ctx, std::move(points), std::move(lines));
}

Instance cartesian_product(std::uint64_t n, u64 p) {
  const PrimeContext ctx(p);
  if (n < 1 || n > p) throw InvalidArgument("cartesian_product: need 1 <= n <= p");
  std::vector<ProjPoint> points;
  std::vector<ProjLine> lines;
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) {
      points.push_back(ProjPoint::affine(ctx, as_int(x), as_int(y)));
      lines.push_back(ProjLine::slope_intercept(ctx, as_int(x), as_int(y)));
    }
  return Instance(ctx, std::move(points), std::move(lines));
}

BipartiteEdgeSet random_bipartite(std::size_t size_a, std::size_t size_b, double density, u64 p,
                                  std::uint64_t seed) {
  const PrimeContext ctx(p);
  if (size_a >= p || size_b >= p) throw InvalidArgument("random_bipartite: sides must be < p");
  if (!(density >= 0.0 && density <= 1.0)) throw InvalidArgument("random_bipartite: density in [0, 1]");
  std::mt19937_64 rng(seed);
  // density resolved to 1/2^20 steps so the draw is integer-only
  const std::uint64_t cut = static_cast<std::uint64_t>(density * (1 << 20));
  ElementSet a, b;
  for (std::size_t i = 1; i <= size_a; ++i) a.insert(FieldElement(ctx, static_cast<std::int64_t>(i)));
  for (std::size_t j = 1; j <= size_b; ++j) b.insert(FieldElement(ctx, static_cast<std::int64_t>(j)));
  EdgeSet edges;
  ElementSet used_a, used_b;
  for (const auto& x : a)
    for (const auto& y : b)
      if (uniform_below(rng, 1 << 20) < cut) {
        edges.insert({x, y});
        used_a.insert(x);
        used_b.insert(y);
      }
  ElementSet pad_a, pad_b;
  for (const auto& x : a)
    if (!used_a.count(x)) pad_a.insert(x);
  for (const auto& y : b)
    if (!used_b.count(y)) pad_b.insert(y);
  return BipartiteEdgeSet(ctx, a, b, std::move(edges), std::move(pad_a), std::move(pad_b));
}

std::string to_string(GenKind kind) {
  switch (kind) {
    case GenKind::Elekes: return "elekes";
    case GenKind::Random: return "random";
    case GenKind::FullPlane: return "full_plane";
    case GenKind::CartesianProduct: return "cartesian_product";
  }
  return "?";
}

GenKind parse_gen_kind(const std::string& s) {
  for (GenKind k : {GenKind::Elekes, GenKind::Random, GenKind::FullPlane, GenKind::CartesianProduct})
    if (to_string(k) == s) return k;
  throw InvalidArgument("unknown generator kind '" + s +
                        "' (expected elekes, random, full_plane or cartesian_product)");
}

Instance generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::Elekes: return elekes_grid(spec.n, spec.p);
    case GenKind::Random: return random_instance(spec.n, spec.p, spec.seed);
    case GenKind::FullPlane: return full_plane(spec.p, spec.affine_only);
    case GenKind::CartesianProduct: return cartesian_product(spec.n, spec.p);
  }
  throw InvalidArgument("generate: unknown kind");
}

}  // namespace fpinc
