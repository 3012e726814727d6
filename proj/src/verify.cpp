#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "fpinc/pipeline.hpp"

namespace fpinc {

namespace {

// Everything below works on raw residues and reuses nothing from the
// sumset or BSG code it audits.
using Vals = std::set<u64>;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128(a) * b) % p); }

u64 fermat_inverse(u64 a, u64 p) {
  u64 r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 diff(u64 a, u64 b, u64 p) { return (a + p - b) % p; }

Vals raw(const ElementSet& s) {
  Vals out;
  for (const auto& x : s) out.insert(x.value());
  return out;
}

struct Graph {
  u64 p;
  std::vector<std::pair<u64, u64>> edges;
  std::unordered_set<u64> lookup;
  Vals left;

  bool has(u64 a, u64 b) const { return lookup.count(a * p + b) > 0; }
};

Graph make_graph(const EdgeSet& e, const Vals& left, u64 p, bool zero_free) {
  Graph g{p, {}, {}, {}};
  for (const auto& [x, y] : e) {
    if (zero_free && (x.is_zero() || y.is_zero())) continue;
    g.edges.emplace_back(x.value(), y.value());
    g.lookup.insert(x.value() * p + y.value());
  }
  if (zero_free) {
    for (const auto& [x, y] : g.edges) g.left.insert(x);
  } else {
    g.left = left;
  }
  return g;
}

// Paths a1 - b1 - a - b2 - a2 by enumerating all (b1, a, b2).
std::uint64_t enumerate_paths(const Graph& g, const Vals& right, u64 a1, u64 a2) {
  std::uint64_t n = 0;
  for (u64 b1 : right) {
    if (!g.has(a1, b1)) continue;
    for (u64 a : g.left) {
      if (!g.has(a, b1)) continue;
      for (u64 b2 : right)
        if (g.has(a, b2) && g.has(a2, b2)) ++n;
    }
  }
  return n;
}

std::uint64_t min_paths(const Graph& g, const Vals& right, const Vals& subset) {
  std::uint64_t m = std::numeric_limits<std::uint64_t>::max();
  for (u64 x : subset)
    for (u64 y : subset) m = std::min(m, enumerate_paths(g, right, x, y));
  return subset.empty() ? 0 : m;
}

Vals difference_set(const Vals& a, const Vals& b, u64 p) {
  Vals out;
  for (u64 x : a)
    for (u64 y : b) out.insert(diff(x, y, p));
  return out;
}

Vals ratio_set(const Vals& a, const Vals& b, u64 p) {
  Vals out;
  for (u64 x : a)
    for (u64 y : b)
      if (y != 0) out.insert(mulmod(x, fermat_inverse(y, p), p));
  return out;
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string str(bool b) { return b ? "true" : "false"; }

std::string str(const Vals& s) {
  std::string out = "{";
  for (u64 x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

struct Auditor {
  VerifyResult result;

  template <class T>
  void expect(const std::string& field, const T& reported, const T& recomputed) {
    if (reported == recomputed) return;
    result.ok = false;
    result.diffs.push_back({field, str(reported), str(recomputed)});
  }

  void expect_close(const std::string& field, double reported, double recomputed) {
    constexpr double kRelTol = 1e-9;
    if (std::abs(reported - recomputed) <= kRelTol * std::max(1.0, std::abs(recomputed))) return;
    result.ok = false;
    result.diffs.push_back({field, str(reported), str(recomputed)});
  }

  void note(const std::string& field, const std::string& reported, const std::string& recomputed) {
    result.ok = false;
    result.diffs.push_back({field, reported, recomputed});
  }
};

}  // namespace

VerifyResult verify_witness(const WitnessReport& w) {
  Auditor au;
  if (!w.witness) {
    au.note("witness", "false", "a Witness outcome is required");
    return au.result;
  }
  const u64 p = w.p;
  const Vals a = raw(w.a), b = raw(w.b), pa = raw(w.padded_a), pb = raw(w.padded_b);

  // E inside A x B, and padding is exactly the isolated vertices
  Vals touched_a, touched_b;
  for (const auto& [x, y] : w.e) {
    if (!a.count(x.value()) || !b.count(y.value())) {
      au.note("e", "(" + str(x) + "," + str(y) + ")", "edge outside A x B");
    }
    touched_a.insert(x.value());
    touched_b.insert(y.value());
  }
  // E is the affine part of the image of R under the reported map
  std::set<std::pair<u64, u64>> image, reported;
  std::size_t at_infinity = 0;
  for (const auto& pt : w.trace.r) {
    u64 v[3];
    for (int i = 0; i < 3; ++i) {
      v[i] = 0;
      for (int j = 0; j < 3; ++j) v[i] = (v[i] + mulmod(w.map[i][j] % p, pt[j], p)) % p;
    }
    if (v[2] == 0) {
      ++at_infinity;
      continue;
    }
    const u64 zi = fermat_inverse(v[2], p);
    image.emplace(mulmod(v[0], zi, p), mulmod(v[1], zi, p));
  }
  for (const auto& [x, y] : w.e) reported.emplace(x.value(), y.value());
  for (const auto& [x, y] : reported)
    if (!image.count({x, y})) au.note("e", "(" + str(x) + "," + str(y) + ")", "not the image of a point of R");
  for (const auto& [x, y] : image)
    if (!reported.count({x, y})) au.note("e", "missing", "(" + str(x) + "," + str(y) + ")");
  au.expect("dropped_on_common_line", w.dropped_on_common_line, at_infinity);

  Vals iso_a, iso_b;
  std::set_difference(a.begin(), a.end(), touched_a.begin(), touched_a.end(), std::inserter(iso_a, iso_a.end()));
  std::set_difference(b.begin(), b.end(), touched_b.begin(), touched_b.end(), std::inserter(iso_b, iso_b.end()));
  au.expect("padded_a", str(pa), str(iso_a));
  au.expect("padded_b", str(pb), str(iso_b));

  au.expect("k", w.k, w.trace.k);

  // partial sets over E
  Vals dset, rset;
  std::size_t excluded = 0;
  for (const auto& [x, y] : w.e) {
    dset.insert(diff(x.value(), y.value(), p));
    if (y.is_zero()) {
      ++excluded;
    } else {
      rset.insert(mulmod(x.value(), fermat_inverse(y.value(), p), p));
    }
  }
  au.expect("partial_diff", w.partial_diff, dset.size());
  au.expect("partial_ratio", w.partial_ratio, rset.size());
  au.expect("partial_ratio_excluded", w.partial_ratio_excluded, excluded);

  // covers: y = x + c written as (1, -1, c) and lines through the origin
  std::set<Triple> grad, origin;
  for (const auto& [x, y] : w.e) {
    grad.insert(ProjLine::from_residues({1, p - 1, diff(y.value(), x.value(), p)}, p).coords());
    if (x.is_zero() && y.is_zero()) {
      au.note("e", "(0,0)", "the origin is p2's image and carries no edge");
      continue;
    }
    // the line through (0,0,1) and (x,y,1) is (y, -x, 0) up to scale
    origin.insert(ProjLine::from_residues({y.value(), (p - x.value()) % p, 0}, p).coords());
  }
  auto cover_set = [](const std::vector<ProjLine>& v) {
    std::set<Triple> s;
    for (const auto& l : v) s.insert(l.coords());
    return s;
  };
  au.expect("gradient_one_cover", w.gradient_one_cover.size(), grad.size());
  if (cover_set(w.gradient_one_cover) != grad && w.gradient_one_cover.size() == grad.size()) {
    au.note("gradient_one_cover", "lines differ", "lines of gradient 1 through E");
  }
  au.expect("origin_cover", w.origin_cover.size(), origin.size());
  if (cover_set(w.origin_cover) != origin && w.origin_cover.size() == origin.size()) {
    au.note("origin_cover", "lines differ", "lines through the origin meeting E");
  }
  au.expect("partial_diff_vs_gradient_one_cover", dset.size(), grad.size());

  // witness bound |A -_E B|, |A /_E B| <= C K
  const Ratio& c = w.config.witness_constant;
  au.expect("witness.diff_bound", true, at_most(dset.size(), c, w.trace.k));
  au.expect("witness.ratio_bound", true, at_most(rset.size(), c, w.trace.k));

  // comparison values
  if (!w.e.empty() && !w.a.empty() && !w.b.empty()) {
    const double e = static_cast<double>(w.e.size());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double scale = std::pow(na, 4) * std::pow(nb, 3) / std::pow(e, 5);
    au.expect_close("e_over_b", w.e_over_b, e / nb);
    au.expect_close("diff_lemma_value", w.diff_lemma_value, scale * std::pow(static_cast<double>(dset.size()), 4));
    au.expect_close("ratio_lemma_value", w.ratio_lemma_value, scale * std::pow(static_cast<double>(rset.size()), 4));
  }

  // BSG extraction and certificate
  au.expect("bsg_ran", w.bsg_ran, true);
  au.expect("extraction.found", w.extraction.found, true);
  const Vals refined = raw(w.extraction.refined);
  for (u64 x : refined)
    if (!a.count(x)) au.note("extraction.refined", std::to_string(x), "element outside A");
  au.expect("extraction.refined.size_ok", true,
            refined.size() >= std::max<std::size_t>(w.extraction.required_size, 1));
  const std::size_t required = static_cast<std::size_t>(
      u128(w.config.bsg.size_constant.num()) * w.e.size() / (u128(w.config.bsg.size_constant.den()) * b.size()));
  au.expect("extraction.required_size", w.extraction.required_size, required);

  const BsgCertificate& cert = w.certificate;
  const Vals aprime = raw(cert.a_prime);
  au.expect("certificate.a_prime", str(aprime), str(refined));
  au.expect("certificate.sizes.a", cert.sizes.a, a.size());
  au.expect("certificate.sizes.b", cert.sizes.b, b.size());
  au.expect("certificate.sizes.e", cert.sizes.e, w.e.size());
  au.expect("certificate.sizes.partial_diff", cert.sizes.partial_diff, dset.size());
  au.expect("certificate.sizes.partial_ratio", cert.sizes.partial_ratio, rset.size());

  const Graph full = make_graph(w.e, a, p, false);
  const Graph zf = make_graph(w.e, a, p, true);
  Vals zf_ratio;
  for (const auto& [x, y] : zf.edges) zf_ratio.insert(mulmod(x, fermat_inverse(y, p), p));
  au.expect("certificate.sizes.partial_ratio_zero_free", cert.sizes.partial_ratio_zero_free, zf_ratio.size());
  au.expect("certificate.ratio_excluded_edges", cert.ratio_excluded_edges, w.e.size() - zf.edges.size());

  Vals aprime_nz = aprime;
  aprime_nz.erase(0);
  const Vals ad = difference_set(aprime, aprime, p);
  const Vals ar = ratio_set(aprime_nz, aprime_nz, p);
  au.expect("certificate.sizes.aprime_diff", cert.sizes.aprime_diff, aprime.empty() ? 0 : ad.size());
  au.expect("certificate.sizes.aprime_ratio", cert.sizes.aprime_ratio, aprime.empty() ? 0 : ar.size());

  const std::uint64_t rho = min_paths(full, b, aprime);
  au.expect("certificate.min_path4_count", cert.min_path4_count, rho);
  bool all_present = !aprime_nz.empty();
  for (u64 x : aprime_nz) all_present = all_present && zf.left.count(x) > 0;
  Vals zf_right;
  for (const auto& [x, y] : zf.edges) zf_right.insert(y);
  const std::uint64_t rho_ratio = all_present ? min_paths(zf, zf_right, aprime_nz) : 0;
  au.expect("certificate.ratio_min_path4_count", cert.ratio_min_path4_count, rho_ratio);

  const Ratio& cc = w.config.bsg.certificate_constant;
  const u128 d4 = u128(dset.size()) * dset.size() * dset.size() * dset.size();
  const u128 r4 = u128(zf_ratio.size()) * zf_ratio.size() * zf_ratio.size() * zf_ratio.size();
  const bool diff_ok = aprime.empty() || at_most(u128(ad.size()) * rho, cc, d4);
  const bool ratio_ok = aprime.empty() || at_most(u128(ar.size()) * rho_ratio, cc, r4);
  au.expect("certificate.diff_bound_ok", cert.diff_bound_ok, diff_ok);
  au.expect("certificate.ratio_bound_ok", cert.ratio_bound_ok, ratio_ok);
  au.expect("certificate.bounds_ok", true, diff_ok && ratio_ok);

  // difference-ratio measurement of A''
  if (!w.rudnev) {
    au.note("rudnev", "missing", "measurement of A''");
  } else {
    au.expect("rudnev.size", w.rudnev->size, refined.size());
    au.expect("rudnev.dminus", w.rudnev->dminus, ad.size());
    Vals nz = refined;
    nz.erase(0);
    au.expect("rudnev.dratio", w.rudnev->dratio, ratio_set(refined, nz, p).size());
  }
  return au.result;
}

}  // namespace fpinc
