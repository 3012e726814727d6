#include "fpinc/bsg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "fpinc/errors.hpp"

namespace fpinc {

namespace {

std::size_t intersection_size(const ElementSet& x, const ElementSet& y) {
  std::size_t n = 0;
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

// |N(a) & N(a')| for every pair of left vertices, indexed in A's order.
struct Codegree {
  std::vector<FieldElement> vertices;
  std::vector<std::vector<std::uint64_t>> c;

  explicit Codegree(const BipartiteEdgeSet& g) : vertices(g.left().begin(), g.left().end()) {
    const std::size_t n = vertices.size();
    c.assign(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        c[i][j] = c[j][i] = intersection_size(g.neighbors(vertices[i]), g.neighbors(vertices[j]));
  }

  std::size_t index(const FieldElement& a) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), a);
    if (it == vertices.end() || *it != a) {
      throw InvalidArgument("element " + std::to_string(a.value()) + " is not in A");
    }
    return static_cast<std::size_t>(it - vertices.begin());
  }

  std::uint64_t paths(std::size_t i, std::size_t j) const {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < vertices.size(); ++k) s += c[i][k] * c[k][j];
    return s;
  }
};

bool good(std::uint64_t codegree, const BipartiteEdgeSet& g, const BsgConfig& cfg) {
  const u128 e = g.edges().size();
  const u128 a = g.left().size();
  const u128 b = g.right().size();
  return meets(codegree, cfg.good_pair_constant, e * e, a * a * b);
}

bool enough_paths(std::uint64_t paths, const BipartiteEdgeSet& g, const BsgConfig& cfg) {
  const u128 e = g.edges().size();
  const u128 a = g.left().size();
  const u128 b = g.right().size();
  return meets(paths, cfg.path_constant, e * e * e * e * e, a * a * a * a * b * b * b);
}

u128 pow4(u128 x) { return x * x * x * x; }

// Brute-force triple enumeration; only used to audit the fast count.
std::uint64_t paths_by_enumeration(const BipartiteEdgeSet& g, const FieldElement& a1,
                                   const FieldElement& a2) {
  std::uint64_t n = 0;
  for (const auto& b1 : g.neighbors(a1))
    for (const auto& a : g.left())
      if (g.has_edge(a, b1))
        for (const auto& b2 : g.neighbors(a))
          if (g.has_edge(a2, b2)) ++n;
  return n;
}

struct MinPaths {
  std::uint64_t value = 0;
  std::size_t i = 0, j = 0;  // minimizing pair, as Codegree indices
};

// Minimum over ordered pairs of `subset`, which must lie inside A.
MinPaths min_paths_over(const Codegree& cd, const ElementSet& subset) {
  MinPaths m;
  m.value = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::size_t> idx;
  for (const auto& a : subset) idx.push_back(cd.index(a));
  for (std::size_t i : idx)
    for (std::size_t j : idx) {
      const std::uint64_t n = cd.paths(i, j);
      if (n < m.value) {
        m.value = n;
        m.i = i;
        m.j = j;
      }
    }
  return m;
}

}  // namespace

void BsgConfig::validate() const {
  const std::pair<const char*, const Ratio*> unit[] = {
      {"good_pair_constant", &good_pair_constant}, {"good_fraction", &good_fraction},
      {"popularity_fraction", &popularity_fraction}, {"path_constant", &path_constant},
      {"size_constant", &size_constant}};
  for (const auto& [name, r] : unit) {
    if (!r->in_unit_interval()) throw InvalidArgument(std::string("bsg.") + name + " must lie in (0, 1]");
  }
  if (!certificate_constant.positive()) throw InvalidArgument("bsg.certificate_constant must be positive");
  // c <= (1 - f) / 2  <=>  2 c <= 1 - f
  const u128 lhs = u128(2) * good_pair_constant.num() * good_fraction.den();
  const u128 rhs = u128(good_fraction.den() - good_fraction.num()) * good_pair_constant.den();
  if (lhs > rhs) {
    throw InvalidArgument("bsg.good_pair_constant must be <= (1 - good_fraction) / 2");
  }
  if (u128(popularity_fraction.num()) * good_fraction.den() >
      u128(good_fraction.num()) * popularity_fraction.den()) {
    throw InvalidArgument("bsg.popularity_fraction must be <= good_fraction");
  }
}

ElementSet common_neighborhood(const BipartiteEdgeSet& g, const FieldElement& a1, const FieldElement& a2) {
  const ElementSet& n1 = g.neighbors(a1);
  const ElementSet& n2 = g.neighbors(a2);
  ElementSet out;
  std::set_intersection(n1.begin(), n1.end(), n2.begin(), n2.end(), std::inserter(out, out.end()));
  return out;
}

bool is_good_pair(const BipartiteEdgeSet& g, const FieldElement& a1, const FieldElement& a2,
                  const BsgConfig& cfg) {
  if (g.edges().empty()) return false;
  return good(intersection_size(g.neighbors(a1), g.neighbors(a2)), g, cfg);
}

std::set<ElementPair> good_pairs(const BipartiteEdgeSet& g, const BsgConfig& cfg) {
  std::set<ElementPair> out;
  if (g.edges().empty()) return out;
  const Codegree cd(g);
  for (std::size_t i = 0; i < cd.vertices.size(); ++i)
    for (std::size_t j = 0; j < cd.vertices.size(); ++j)
      if (good(cd.c[i][j], g, cfg)) out.emplace(cd.vertices[i], cd.vertices[j]);
  return out;
}

std::uint64_t count_paths4(const BipartiteEdgeSet& g, const FieldElement& a1, const FieldElement& a2) {
  // sum over the middle vertex a of |N(a1) & N(a)| * |N(a) & N(a2)|
  const ElementSet& n1 = g.neighbors(a1);
  const ElementSet& n2 = g.neighbors(a2);
  std::uint64_t total = 0;
  for (const auto& a : g.left()) {
    const ElementSet& na = g.neighbors(a);
    total += static_cast<std::uint64_t>(intersection_size(n1, na)) * intersection_size(na, n2);
  }
  return total;
}

double path_bound(const BipartiteEdgeSet& g) {
  if (g.left().empty() || g.right().empty()) return 0.0;
  const double e = static_cast<double>(g.edges().size());
  const double a = static_cast<double>(g.left().size());
  const double b = static_cast<double>(g.right().size());
  return std::pow(e, 5) / (std::pow(a, 4) * std::pow(b, 3));
}

BsgExtraction extract_refined(const BipartiteEdgeSet& g, const BsgConfig& cfg) {
  cfg.validate();
  BsgExtraction out;
  if (g.edges().empty()) {
    out.reason = "empty edge set";
    return out;
  }
  const Codegree cd(g);
  const std::size_t n = cd.vertices.size();
  // floor(c |E| / |B|)
  out.required_size = static_cast<std::size_t>(
      (u128(cfg.size_constant.num()) * g.edges().size()) /
      (u128(cfg.size_constant.den()) * g.right().size()));
  const std::size_t min_k = std::max<std::size_t>(out.required_size, 1);

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return cd.c[x][x] > cd.c[y][y];
  });

  std::vector<std::vector<bool>> is_good(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) is_good[i][j] = good(cd.c[i][j], g, cfg);

  for (std::size_t k = n; k >= min_k; --k) {
    const std::vector<std::size_t> cand(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    std::size_t good_count = 0;
    std::vector<std::size_t> popularity(k, 0);
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y)
        if (is_good[cand[x]][cand[y]]) {
          ++good_count;
          ++popularity[x];
        }
    if (!meets(good_count, cfg.good_fraction, u128(k) * k)) {
      if (out.reason.empty()) out.reason = "no candidate A' has the required fraction of good pairs";
      continue;
    }
    ElementSet refined;
    for (std::size_t x = 0; x < k; ++x)
      if (meets(popularity[x], cfg.popularity_fraction, k)) refined.insert(cd.vertices[cand[x]]);
    if (refined.size() < min_k) {
      out.reason = "popular subset A'' smaller than floor(size_constant |E| / |B|)";
      continue;
    }
    const MinPaths mp = min_paths_over(cd, refined);
    if (!enough_paths(mp.value, g, cfg)) {
      out.reason = "A'' pair joined by too few length-4 paths";
      continue;
    }
    out.found = true;
    out.refined = std::move(refined);
    for (std::size_t x = 0; x < k; ++x) out.candidate.insert(cd.vertices[cand[x]]);
    out.candidate_good_pairs = good_count;
    out.min_paths = mp.value;
    out.reason.clear();
    return out;
  }
  if (out.reason.empty()) out.reason = "A is smaller than floor(size_constant |E| / |B|)";
  return out;
}

BsgCertificate certify(const BipartiteEdgeSet& g, const ElementSet& a_prime, const BsgConfig& cfg) {
  BsgCertificate cert;
  cert.a_prime = a_prime;
  for (const auto& a : a_prime)
    if (!g.left().count(a)) throw InvalidArgument("certify: A' is not a subset of A");

  cert.sizes.a = g.left().size();
  cert.sizes.b = g.right().size();
  cert.sizes.e = g.edges().size();
  cert.sizes.partial_diff = partial_set(SetOp::Sub, g, ZeroDivisor::Exclude).size();
  cert.sizes.partial_ratio = partial_set(SetOp::Div, g, ZeroDivisor::Exclude).size();

  const BipartiteEdgeSet zero_free = g.without_zero_endpoints();
  cert.ratio_excluded_edges = g.edges().size() - zero_free.edges().size();
  cert.sizes.partial_ratio_zero_free = partial_set(SetOp::Div, zero_free).size();

  if (a_prime.empty()) {
    cert.degenerate = true;
    cert.diff_bound_ok = cert.ratio_bound_ok = cert.path_recount_ok = true;
    return cert;
  }
  cert.sizes.aprime_diff = full_set(SetOp::Sub, a_prime, a_prime).size();
  ElementSet nonzero;
  for (const auto& a : a_prime)
    if (!a.is_zero()) nonzero.insert(a);
  cert.sizes.aprime_ratio = full_set(SetOp::Div, nonzero, nonzero).size();

  const Codegree cd(g);
  const MinPaths mp = min_paths_over(cd, a_prime);
  cert.min_path4_count = mp.value;

  // Ratio side lives on the zero-free subgraph. A vertex that lost all its
  // edges there is joined to nothing, so rho is 0 and the bound is trivial.
  bool all_present = !nonzero.empty();
  for (const auto& a : nonzero) all_present = all_present && zero_free.left().count(a) > 0;
  if (all_present) {
    const Codegree cdz(zero_free);
    cert.ratio_min_path4_count = min_paths_over(cdz, nonzero).value;
  }

  const Ratio& c = cfg.certificate_constant;
  cert.diff_bound_ok =
      at_most(u128(cert.sizes.aprime_diff) * cert.min_path4_count, c, pow4(cert.sizes.partial_diff));
  cert.ratio_bound_ok = at_most(u128(cert.sizes.aprime_ratio) * cert.ratio_min_path4_count, c,
                                pow4(cert.sizes.partial_ratio_zero_free));

  // recount the minimizing pair and a few more by enumeration
  cert.path_recount_ok = paths_by_enumeration(g, cd.vertices[mp.i], cd.vertices[mp.j]) == mp.value;
  std::size_t sampled = 0;
  for (const auto& x : a_prime) {
    for (const auto& y : a_prime) {
      if (sampled++ >= 8) break;
      cert.path_recount_ok = cert.path_recount_ok &&
                             paths_by_enumeration(g, x, y) == cd.paths(cd.index(x), cd.index(y));
    }
  }
  return cert;
}

}  // namespace fpinc
