#include "fpinc/incidence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>

#include "fpinc/errors.hpp"

namespace fpinc {

namespace {

template <class T>
void sort_unique_or_throw(std::vector<T>& v, u64 p, const char* what) {
  for (const auto& x : v) {
    if (x.modulus() != p) {
      throw ContextMismatch(std::string("instance ") + what + " over F_" +
                            std::to_string(x.modulus()) + ", instance is over F_" +
                            std::to_string(p));
    }
  }
  std::sort(v.begin(), v.end());
  auto dup = std::adjacent_find(v.begin(), v.end());
  if (dup != v.end()) {
    std::ostringstream os;
    os << "duplicate " << what << ' ' << *dup;
    throw DuplicateElement(os.str());
  }
}

template <class T>
std::optional<Index> find_index(const std::vector<T>& v, const T& x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) return std::nullopt;
  return static_cast<Index>(it - v.begin());
}

IncidenceGraph empty_graph(const Instance& inst) {
  IncidenceGraph g;
  g.lines_of_point.resize(inst.num_points());
  g.points_of_line.resize(inst.num_lines());
  return g;
}

IncidenceGraph graph_bruteforce(const Instance& inst) {
  IncidenceGraph g = empty_graph(inst);
  const auto pts = inst.points();
  const auto lns = inst.lines();
  for (Index i = 0; i < pts.size(); ++i) {
    for (Index j = 0; j < lns.size(); ++j) {
      if (incident(pts[i], lns[j])) {
        g.lines_of_point[i].push_back(j);
        g.points_of_line[j].push_back(i);
        ++g.incidences;
      }
    }
  }
  return g;
}

// Lines sharing a point at infinity form a parallel family. Within the family
// with direction (alpha, beta), an affine point (x, y) lies on the member
// (alpha, beta, gamma) iff alpha x + beta y == -gamma, so sorting the points
// by that key answers every member with one range lookup. A point at infinity
// lies on all members of its family and on the line at infinity.
IncidenceGraph graph_bucketed(const Instance& inst) {
  IncidenceGraph g = empty_graph(inst);
  const u64 p = inst.p();
  const auto pts = inst.points();
  const auto lns = inst.lines();

  struct Member {
    u64 gamma;
    Index line;
  };
  std::map<std::pair<u64, u64>, std::vector<Member>> families;
  std::vector<Index> infinity_lines;
  for (Index j = 0; j < lns.size(); ++j) {
    const ProjLine& l = lns[j];
    if (l.is_at_infinity()) {
      infinity_lines.push_back(j);
      continue;
    }
    const u64 lead = l[1] != 0 ? l[1] : l[0];
    const u64 s = residue::inv(lead, p);
    families[{residue::mul(l[0], s, p), residue::mul(l[1], s, p)}].push_back(
        {residue::mul(l[2], s, p), j});
  }

  std::vector<Index> affine, at_infinity;
  for (Index i = 0; i < pts.size(); ++i) (pts[i].is_affine() ? affine : at_infinity).push_back(i);

  auto link = [&g](Index i, Index j) {
    g.lines_of_point[i].push_back(j);
    g.points_of_line[j].push_back(i);
    ++g.incidences;
  };

  std::vector<std::pair<u64, Index>> keyed;
  for (const auto& [dir, members] : families) {
    const auto [alpha, beta] = dir;
    keyed.clear();
    for (Index i : affine) {
      keyed.emplace_back(residue::add(residue::mul(alpha, pts[i][0], p),
                                      residue::mul(beta, pts[i][1], p), p),
                         i);
    }
    std::sort(keyed.begin(), keyed.end());
    for (const Member& m : members) {
      const u64 want = residue::neg(m.gamma, p);
      auto lo = std::lower_bound(keyed.begin(), keyed.end(), std::pair<u64, Index>{want, 0});
      for (auto it = lo; it != keyed.end() && it->first == want; ++it) link(it->second, m.line);
    }
    for (Index i : at_infinity) {
      const u64 key = residue::add(residue::mul(alpha, pts[i][0], p),
                                   residue::mul(beta, pts[i][1], p), p);
      if (key == 0) {
        for (const Member& m : members) link(i, m.line);
      }
    }
  }
  for (Index j : infinity_lines)
    for (Index i : at_infinity) link(i, j);

  for (auto& v : g.lines_of_point) std::sort(v.begin(), v.end());
  for (auto& v : g.points_of_line) std::sort(v.begin(), v.end());
  return g;
}

}  // namespace

Instance::Instance(const PrimeContext& ctx, std::vector<ProjPoint> points, std::vector<ProjLine> lines)
    : ctx_(ctx), points_(std::move(points)), lines_(std::move(lines)) {
  sort_unique_or_throw(points_, ctx_.p(), "point");
  sort_unique_or_throw(lines_, ctx_.p(), "line");
}

std::optional<Index> Instance::point_index(const ProjPoint& pt) const { return find_index(points_, pt); }

std::optional<Index> Instance::line_index(const ProjLine& l) const { return find_index(lines_, l); }

Instance Instance::restrict(const std::vector<bool>& keep_point,
                            const std::vector<bool>& keep_line) const {
  if (keep_point.size() != points_.size() || keep_line.size() != lines_.size()) {
    throw InvalidArgument("Instance::restrict: mask size mismatch");
  }
  Instance out(ctx_);
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (keep_point[i]) out.points_.push_back(points_[i]);
  for (std::size_t j = 0; j < lines_.size(); ++j)
    if (keep_line[j]) out.lines_.push_back(lines_[j]);
  return out;
}

DegreeTables IncidenceGraph::degrees() const {
  DegreeTables t;
  t.point_degree.reserve(lines_of_point.size());
  for (const auto& v : lines_of_point) t.point_degree.push_back(v.size());
  t.line_degree.reserve(points_of_line.size());
  for (const auto& v : points_of_line) t.line_degree.push_back(v.size());
  t.incidences = incidences;
  return t;
}

IncidenceGraph incidence_graph(const Instance& inst, CountMethod method) {
  return method == CountMethod::BruteForce ? graph_bruteforce(inst) : graph_bucketed(inst);
}

DegreeTables count_incidences(const Instance& inst, CountMethod method) {
  return incidence_graph(inst, method).degrees();
}

Instance truncate_high_degree(const Instance& inst, std::size_t k_max, TruncationMode mode) {
  if (k_max < 1) throw InvalidArgument("truncate_high_degree: k_max must be >= 1");
  Instance cur = inst;
  while (true) {
    bool changed = false;

    DegreeTables t = count_incidences(cur);
    std::vector<bool> keep_p(cur.num_points()), keep_l(cur.num_lines(), true);
    for (std::size_t i = 0; i < keep_p.size(); ++i) {
      keep_p[i] = t.point_degree[i] <= k_max;
      changed |= !keep_p[i];
    }
    cur = cur.restrict(keep_p, keep_l);

    t = count_incidences(cur);
    keep_p.assign(cur.num_points(), true);
    keep_l.assign(cur.num_lines(), true);
    for (std::size_t j = 0; j < keep_l.size(); ++j) {
      keep_l[j] = t.line_degree[j] <= k_max;
      changed |= !keep_l[j];
    }
    cur = cur.restrict(keep_p, keep_l);

    if (!changed || mode == TruncationMode::SinglePass) return cur;
  }
}

DyadicSelection dyadic_select(std::span<const std::size_t> degrees, std::size_t d_min) {
  if (d_min < 1) throw InvalidArgument("dyadic_select: d_min must be >= 1");
  std::map<unsigned, std::size_t> mass;
  for (std::size_t d : degrees) {
    if (d >= d_min) mass[static_cast<unsigned>(std::bit_width(d) - 1)] += d;
  }
  DyadicSelection sel;
  if (mass.empty()) return sel;
  // map iterates j ascending, so strict > keeps the smaller j on ties
  auto best = mass.begin();
  for (auto it = mass.begin(); it != mass.end(); ++it)
    if (it->second > best->second) best = it;
  sel.bucket = best->first;
  sel.k = std::size_t{1} << best->first;
  sel.mass = best->second;
  for (Index i = 0; i < degrees.size(); ++i) {
    const std::size_t d = degrees[i];
    if (d >= d_min && d >= sel.k && d < 2 * sel.k) sel.members.push_back(i);
  }
  return sel;
}

std::optional<PointSelection> dyadic_select(const Instance& inst, std::size_t d_min) {
  const DegreeTables t = count_incidences(inst);
  const DyadicSelection sel = dyadic_select(t.point_degree, d_min);
  if (sel.empty()) return std::nullopt;
  PointSelection out;
  out.k = sel.k;
  out.mass = sel.mass;
  for (Index i : sel.members) out.points.push_back(inst.points()[i]);
  return out;
}

TrivialBounds trivial_bounds(std::size_t num_points, std::size_t num_lines, std::size_t incidences) {
  using u128 = unsigned __int128;
  // I <= sqrt(b) a + b  <=>  I <= b  or  (I - b)^2 <= a^2 b
  auto holds = [](u128 i, u128 a, u128 b) { return i <= b || (i - b) * (i - b) <= a * a * b; };
  TrivialBounds r;
  r.lines_side = holds(incidences, num_points, num_lines);
  r.points_side = holds(incidences, num_lines, num_points);
  const double I = static_cast<double>(incidences);
  const double P = static_cast<double>(num_points), L = static_cast<double>(num_lines);
  r.lines_side_slack = std::sqrt(L) * P + L - I;
  r.points_side_slack = std::sqrt(P) * L + P - I;
  return r;
}

}  // namespace fpinc
