#include "fpinc/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "fpinc/errors.hpp"

namespace fpinc {

namespace {

// Fixed-size bitset over point indices.
class Bits {
 public:
  explicit Bits(std::size_t n) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { w_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }
  std::size_t count() const {
    std::size_t n = 0;
    for (auto x : w_) n += static_cast<std::size_t>(std::popcount(x));
    return n;
  }
  std::size_t and_count(const Bits& o) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) n += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
    return n;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
  }
  std::vector<Index> members() const {
    std::vector<Index> out;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t x = w_[i];
      while (x) {
        out.push_back(static_cast<Index>(i * 64 + static_cast<std::size_t>(std::countr_zero(x))));
        x &= x - 1;
      }
    }
    return out;
  }

 private:
  std::vector<std::uint64_t> w_;
};

double scaled_power(const Ratio& c, double n, double exponent) { return c.to_double() * std::pow(n, exponent); }

std::string describe(const std::string& name, double measured, double required) {
  std::ostringstream os;
  os << name << ": measured " << measured << " < required " << required;
  return os.str();
}

// Records a threshold; the first failure becomes the trace's NoWitness.
bool check(RefinementTrace& t, const std::string& stage, const std::string& name, double measured,
           double required) {
  const bool passed = measured >= required;
  t.checks.push_back({stage, name, measured, required, passed});
  if (!passed && !t.failure) t.failure = NoWitness{stage, describe(name, measured, required), measured, required};
  return passed;
}

void fail(RefinementTrace& t, const std::string& stage, const std::string& reason, double measured,
          double required) {
  t.checks.push_back({stage, reason, measured, required, false});
  if (!t.failure) t.failure = NoWitness{stage, reason, measured, required};
}

std::size_t mass(const IncidenceGraph& g, const std::vector<Index>& points, const std::vector<bool>& line_mask) {
  std::size_t m = 0;
  for (Index i : points)
    for (Index j : g.lines_of_point[i])
      if (line_mask.empty() || line_mask[j]) ++m;
  return m;
}

std::vector<ProjPoint> to_points(const Instance& inst, const std::vector<Index>& idx) {
  std::vector<ProjPoint> out;
  for (Index i : idx) out.push_back(inst.points()[i]);
  return out;
}

std::vector<Index> to_indices(const Instance& inst, const std::vector<ProjPoint>& pts) {
  std::vector<Index> out;
  for (const auto& pt : pts) {
    auto i = inst.point_index(pt);
    if (!i) throw InvalidArgument("refinement trace refers to a point outside the instance");
    out.push_back(*i);
  }
  return out;
}

// {q in scope : q != p, line pq in `lines`} as a bitset over point indices
Bits pencil_neighbors(const IncidenceGraph& g, Index p, const std::vector<bool>& lines, const Bits& scope) {
  Bits out(g.lines_of_point.size());
  for (Index j : g.lines_of_point[p]) {
    if (!lines[j]) continue;
    for (Index q : g.points_of_line[j])
      if (q != p && scope.test(q)) out.set(q);
  }
  return out;
}

struct BestPair {
  Index a = 0, b = 0;
  std::size_t overlap = 0;
  bool found = false;
};

// Distinct pair of `candidates` (ascending) maximizing |nbr[a] & nbr[b]|;
// ties keep the lexicographically first pair.
BestPair best_pair(const std::vector<Index>& candidates, const std::vector<Bits>& nbr) {
  BestPair best;
  for (std::size_t x = 0; x < candidates.size(); ++x)
    for (std::size_t y = x + 1; y < candidates.size(); ++y) {
      const std::size_t o = nbr[x].and_count(nbr[y]);
      if (!best.found || o > best.overlap) {
        best = {candidates[x], candidates[y], o, true};
        best.a = candidates[x];
        best.b = candidates[y];
      }
    }
  return best;
}

std::size_t position(const std::vector<Index>& v, Index x) {
  return static_cast<std::size_t>(std::find(v.begin(), v.end(), x) - v.begin());
}

}  // namespace

void PipelineConfig::validate() const {
  if (!(epsilon.positive() && u128(epsilon.num()) * 2 < u128(epsilon.den()))) {
    throw InvalidArgument("epsilon must lie in (0, 1/2)");
  }
  const std::pair<const char*, const Ratio*> positive[] = {
      {"truncation_constant", &truncation_constant}, {"incidence_constant", &incidence_constant},
      {"p1_degree_constant", &p1_degree_constant},   {"l1_constant", &l1_constant},
      {"p2_constant", &p2_constant},                 {"pair_constant", &pair_constant},
      {"j_constant", &j_constant},                   {"q1_constant", &q1_constant},
      {"rich_line_constant", &rich_line_constant},   {"r_constant", &r_constant},
      {"witness_constant", &witness_constant}};
  for (const auto& [name, r] : positive)
    if (!r->positive()) throw InvalidArgument(std::string(name) + " must be positive");
  bsg.validate();
}

PipelineConfig PipelineConfig::permissive() {
  PipelineConfig c;
  const Ratio tiny(1, 1000);
  c.incidence_constant = tiny;
  c.p1_degree_constant = tiny;
  c.l1_constant = tiny;
  c.p2_constant = tiny;
  c.pair_constant = tiny;
  c.j_constant = tiny;
  c.q1_constant = tiny;
  c.rich_line_constant = tiny;
  c.r_constant = tiny;
  c.bsg.good_pair_constant = Ratio(1, 100);
  c.bsg.good_fraction = Ratio(1, 2);
  c.bsg.popularity_fraction = Ratio(1, 2);
  c.bsg.path_constant = Ratio(1, 100);
  c.bsg.size_constant = Ratio(1, 100);
  return c;
}

RefinementTrace first_refinement(const Instance& inst, const PipelineConfig& cfg,
                                 std::optional<std::size_t> n_bound) {
  RefinementTrace t;
  t.n_bound = n_bound.value_or(inst.size_bound());
  const IncidenceGraph g = incidence_graph(inst);
  t.incidences = g.incidences;
  const double n = static_cast<double>(std::max<std::size_t>(t.n_bound, 1));
  const double eps = cfg.epsilon.to_double();
  const std::size_t np = inst.num_points(), nl = inst.num_lines();
  const char* stage = "first_refinement";

  std::vector<Index> all(np);
  for (Index i = 0; i < np; ++i) all[i] = i;
  t.stages.push_back({"P", np, g.incidences});

  if (!check(t, stage, "incidences", static_cast<double>(g.incidences),
             scaled_power(cfg.incidence_constant, n, 1.5 - eps)))
    return t;

  // P1
  const double deg_floor = std::max(1.0, scaled_power(cfg.p1_degree_constant, n, 0.5 - eps));
  std::vector<std::size_t> p1_degree(np, 0);
  std::vector<Index> p1;
  for (Index i = 0; i < np; ++i) {
    const std::size_t d = g.lines_of_point[i].size();
    if (static_cast<double>(d) >= deg_floor) {
      p1.push_back(i);
      p1_degree[i] = d;
    }
  }
  t.p1 = to_points(inst, p1);
  t.stages.push_back({"P1", p1.size(), mass(g, p1, {})});
  if (!check(t, stage, "p1_size", static_cast<double>(p1.size()), 1.0)) return t;

  // dyadic bucket P1' with degrees in [K, 2K)
  const DyadicSelection sel = dyadic_select(p1_degree, 1);
  t.k = sel.k;
  const std::vector<Index>& p1p = sel.members;
  t.p1_prime = to_points(inst, p1p);
  t.stages.push_back({"P1'", p1p.size(), sel.mass});
  Bits in_p1p(np);
  for (Index i : p1p) in_p1p.set(i);

  // L1
  const double l1_floor = std::max(1.0, scaled_power(cfg.l1_constant, n, 0.5 - eps));
  std::vector<bool> in_l1(nl, false);
  std::vector<Index> l1;
  for (Index j = 0; j < nl; ++j) {
    std::size_t c = 0;
    for (Index i : g.points_of_line[j]) c += in_p1p.test(i);
    if (static_cast<double>(c) >= l1_floor) {
      in_l1[j] = true;
      l1.push_back(j);
      t.l1.push_back(inst.lines()[j]);
    }
  }
  t.stages.push_back({"L1", l1.size(), mass(g, p1p, in_l1)});
  if (!check(t, stage, "l1_size", static_cast<double>(l1.size()), 1.0)) return t;

  // P2
  const double p2_floor = std::max(1.0, cfg.p2_constant.to_double() * static_cast<double>(t.k));
  std::vector<Index> p2;
  for (Index i : p1p) {
    std::size_t c = 0;
    for (Index j : g.lines_of_point[i]) c += in_l1[j];
    if (static_cast<double>(c) >= p2_floor) p2.push_back(i);
  }
  t.p2 = to_points(inst, p2);
  t.stages.push_back({"P2", p2.size(), mass(g, p2, in_l1)});
  if (!check(t, stage, "p2_size", static_cast<double>(p2.size()), 2.0)) return t;

  // P_p for p in P2, then the best distinct pair
  std::vector<Bits> pp;
  pp.reserve(p2.size());
  for (Index i : p2) pp.push_back(pencil_neighbors(g, i, in_l1, in_p1p));
  const BestPair bp = best_pair(p2, pp);
  t.pt1 = inst.points()[bp.a];
  t.pt2 = inst.points()[bp.b];
  const Bits q = pp[position(p2, bp.a)] & pp[position(p2, bp.b)];
  const std::vector<Index> qi = q.members();
  t.q = to_points(inst, qi);
  t.stages.push_back({"Q", qi.size(), mass(g, qi, {})});
  const double kd = static_cast<double>(t.k);
  check(t, stage, "q_size", static_cast<double>(qi.size()),
        std::max(1.0, cfg.pair_constant.to_double() * kd * kd / std::pow(n, 2 * eps)));
  return t;
}

RefinementTrace second_refinement(RefinementTrace t, const Instance& inst, const PipelineConfig& cfg) {
  if (!t.ok() || !t.pt1 || !t.pt2) {
    throw InvalidArgument("second_refinement: the first refinement did not succeed");
  }
  const IncidenceGraph g = incidence_graph(inst);
  const double n = static_cast<double>(std::max<std::size_t>(t.n_bound, 1));
  const double eps = cfg.epsilon.to_double();
  const double kd = static_cast<double>(t.k);
  const std::size_t np = inst.num_points(), nl = inst.num_lines();
  const char* stage = "second_refinement";

  const Index p1 = to_indices(inst, {*t.pt1})[0];
  const Index p2 = to_indices(inst, {*t.pt2})[0];
  const std::vector<Index> qi = to_indices(inst, t.q);
  Bits in_q(np);
  for (Index i : qi) in_q.set(i);

  // J
  const double j_floor = std::max(1.0, cfg.j_constant.to_double() * kd * kd * kd / std::pow(n, 1 + 2 * eps));
  std::vector<bool> in_j(nl, false);
  for (Index j = 0; j < nl; ++j) {
    std::size_t c = 0;
    for (Index i : g.points_of_line[j]) c += in_q.test(i);
    if (static_cast<double>(c) >= j_floor) {
      in_j[j] = true;
      t.j.push_back(inst.lines()[j]);
    }
  }
  t.stages.push_back({"J", t.j.size(), mass(g, qi, in_j)});
  if (!check(t, stage, "j_size", static_cast<double>(t.j.size()), 1.0)) return t;

  // Q1
  const double q1_floor = std::max(1.0, cfg.q1_constant.to_double() * kd);
  std::vector<Index> q1;
  Bits in_q1(np);
  for (Index i : qi) {
    std::size_t c = 0;
    for (Index j : g.lines_of_point[i]) c += in_j[j];
    if (static_cast<double>(c) >= q1_floor) {
      q1.push_back(i);
      in_q1.set(i);
    }
  }
  t.q1 = to_points(inst, q1);
  t.stages.push_back({"Q1", q1.size(), mass(g, q1, in_j)});
  if (!check(t, stage, "q1_size", static_cast<double>(q1.size()), 1.0)) return t;

  // richest line of J through p1 that misses p2
  std::vector<Index> through_p1;
  for (Index j : g.lines_of_point[p1])
    if (in_j[j]) through_p1.push_back(j);
  if (through_p1.empty()) {
    fail(t, stage, "line-selection: no line of J passes through p1", 0, 1);
    return t;
  }
  std::optional<Index> rich;
  std::size_t richness = 0;
  for (Index j : through_p1) {
    const auto& on = g.points_of_line[j];
    if (std::binary_search(on.begin(), on.end(), p2)) continue;
    std::size_t c = 0;
    for (Index i : on) c += in_q1.test(i);
    if (!rich || c > richness) {
      rich = j;
      richness = c;
    }
  }
  if (!rich) {
    fail(t, stage, "line-selection: every line of J through p1 also contains p2", 0, 1);
    return t;
  }
  t.rich_line = inst.lines()[*rich];
  if (!check(t, stage, "rich_line_points", static_cast<double>(richness),
             std::max(1.0, scaled_power(cfg.rich_line_constant, n, 0.5 - 7 * eps))))
    return t;

  // Q2
  std::vector<Index> q2;
  for (Index i : g.points_of_line[*rich])
    if (in_q1.test(i) && i != p1 && i != p2) q2.push_back(i);
  t.q2 = to_points(inst, q2);
  t.stages.push_back({"Q2", q2.size(), mass(g, q2, in_j)});
  if (!check(t, stage, "q2_size", static_cast<double>(q2.size()), 2.0)) return t;

  // Q_p for p in Q2, best pair (p3, p4), R
  std::vector<Bits> qp;
  for (Index i : q2) qp.push_back(pencil_neighbors(g, i, in_j, in_q));
  const BestPair bp = best_pair(q2, qp);
  t.pt3 = inst.points()[bp.a];
  t.pt4 = inst.points()[bp.b];
  const std::vector<Index> r = (qp[position(q2, bp.a)] & qp[position(q2, bp.b)]).members();
  t.r = to_points(inst, r);
  t.stages.push_back({"R", r.size(), mass(g, r, {})});
  if (!check(t, stage, "r_size", static_cast<double>(r.size()),
             std::max(1.0, cfg.r_constant.to_double() * std::pow(kd, 6) / std::pow(n, 2 + 2 * eps))))
    return t;

  // colinearity pattern and the four-pencil cover of R
  const ProjLine& common = *t.rich_line;
  if (!incident(*t.pt1, common) || !incident(*t.pt3, common) || !incident(*t.pt4, common) ||
      incident(*t.pt2, common)) {
    throw InvariantViolation("second_refinement: p1, p3, p4 must be colinear with p2 off their line");
  }
  const ProjPoint centres[4] = {*t.pt1, *t.pt2, *t.pt3, *t.pt4};
  for (std::size_t c = 0; c < 4; ++c) {
    std::vector<ProjLine> cover;
    for (const ProjPoint& pt : t.r) {
      const ProjLine l = line_through(centres[c], pt);
      if (!inst.line_index(l)) throw InvariantViolation("second_refinement: cover line outside L");
      cover.push_back(l);
    }
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    t.r_cover[c] = cover.size();
    if (cover.size() > 2 * t.k) {
      throw InvariantViolation("second_refinement: R needs more than 2K lines through p" + std::to_string(c + 1));
    }
  }
  return t;
}

Normalization projective_normalize(const RefinementTrace& t, const PipelineConfig& cfg) {
  if (!t.ok() || !t.pt1 || !t.pt2 || !t.pt3 || !t.pt4 || !t.rich_line) {
    throw InvalidArgument("projective_normalize: refinement did not complete");
  }
  const u64 p = t.pt1->modulus();
  const PrimeContext ctx(p);
  const ProjLine& common = *t.rich_line;
  if (!incident(*t.pt1, common) || !incident(*t.pt3, common) || !incident(*t.pt4, common) ||
      incident(*t.pt2, common)) {
    throw InvariantViolation("projective_normalize: colinearity precondition violated");
  }
  const ProjMap tau = normalizing_map(common, *t.pt3, *t.pt4);

  const ProjPoint t2 = tau.apply(*t.pt2);
  const ProjPoint t1 = tau.apply(*t.pt1);
  if (!t2.is_affine() || t1.is_affine() || t1[1] != 1 || t1[0] == 0) {
    throw InvariantViolation("projective_normalize: unexpected images of p1 / p2");
  }
  const ProjMap shift = translate(-t2.coord(0), -t2.coord(1));
  // t1 = (u, 1, 0) has gradient z = 1/u; scaling y by 1/z = u makes it 1
  const ProjMap scale = scale_y(t1.coord(0));
  const ProjMap full = scale * shift * tau;

  Normalization out;
  out.map = full.matrix();
  out.gradient = residue::inv(t1[0], p);
  if (full.apply(*t.pt1) != ProjPoint::from_residues({1, 1, 0}, p) ||
      full.apply(*t.pt2) != ProjPoint::from_residues({0, 0, 1}, p)) {
    throw InvariantViolation("projective_normalize: p1 not at gradient 1 or p2 not at the origin");
  }

  for (const ProjPoint& r : t.r) {
    const ProjPoint img = full.apply(r);
    if (!img.is_affine()) {
      ++out.dropped_on_common_line;
      continue;
    }
    const FieldElement x = img.coord(0), y = img.coord(1);
    if (x.is_zero() && y.is_zero()) throw InvariantViolation("projective_normalize: R contains p2");
    out.e.insert({x, y});
    out.a.insert(x);
    out.b.insert(y);
  }
  if (out.e.size() + out.dropped_on_common_line != t.r.size()) {
    throw InvariantViolation("projective_normalize: map is not injective on R");
  }

  if (cfg.pad_to_k) {
    auto pad = [&](ElementSet& side, ElementSet& padding) {
      for (u64 v = 1; side.size() < t.k && v < p; ++v) {
        const FieldElement x = FieldElement::from_residue(v, p);
        if (side.insert(x).second) padding.insert(x);
      }
    };
    pad(out.a, out.padded_a);
    pad(out.b, out.padded_b);
  }

  const ProjPoint origin = ProjPoint::from_residues({0, 0, 1}, p);
  for (const auto& [x, y] : out.e) {
    out.gradient_one_cover.push_back(ProjLine::from_residues({1, p - 1, residue::sub(y.value(), x.value(), p)}, p));
    out.origin_cover.push_back(line_through(origin, ProjPoint::from_residues({x.value(), y.value(), 1}, p)));
  }
  for (auto* v : {&out.gradient_one_cover, &out.origin_cover}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return out;
}

WitnessReport run_pipeline(const Instance& inst, const PipelineConfig& cfg) {
  if (inst.num_points() == 0 || inst.num_lines() == 0) {
    throw InvalidArgument("empty instance: need at least one point and one line");
  }
  cfg.validate();
  WitnessReport rep;
  rep.config = cfg;
  rep.p = inst.p();
  rep.num_points = inst.num_points();
  rep.num_lines = inst.num_lines();
  rep.n_bound = inst.size_bound();
  rep.warn_n_ge_p = inst.warn_n_ge_p();
  rep.incidences = count_incidences(inst).incidences;

  const double n = static_cast<double>(rep.n_bound);
  const double eps = cfg.epsilon.to_double();
  rep.k_max = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(scaled_power(cfg.truncation_constant, n, 0.5 + eps))));
  const Instance trunc = truncate_high_degree(
      inst, rep.k_max, cfg.single_pass_truncation ? TruncationMode::SinglePass : TruncationMode::Fixpoint);
  rep.truncated_points = trunc.num_points();
  rep.truncated_lines = trunc.num_lines();
  rep.truncated_incidences = count_incidences(trunc).incidences;

  RefinementTrace trace = first_refinement(trunc, cfg, rep.n_bound);
  if (trace.ok()) trace = second_refinement(std::move(trace), trunc, cfg);
  rep.trace = std::move(trace);
  RefinementTrace& t = rep.trace;
  if (!t.ok()) {
    rep.no_witness = t.failure;
    return rep;
  }

  Normalization norm = projective_normalize(t, cfg);
  rep.normalized = true;
  rep.map = norm.map;
  rep.gradient = norm.gradient;
  rep.dropped_on_common_line = norm.dropped_on_common_line;
  rep.a = std::move(norm.a);
  rep.b = std::move(norm.b);
  rep.padded_a = std::move(norm.padded_a);
  rep.padded_b = std::move(norm.padded_b);
  rep.e = std::move(norm.e);
  rep.gradient_one_cover = std::move(norm.gradient_one_cover);
  rep.origin_cover = std::move(norm.origin_cover);
  rep.k = t.k;

  if (rep.e.empty()) {
    fail(t, "projective_normalize", "every point of R lies on the common line", 0, 1);
    rep.no_witness = t.failure;
    return rep;
  }

  const PrimeContext ctx(rep.p);
  const BipartiteEdgeSet g(ctx, rep.a, rep.b, rep.e, rep.padded_a, rep.padded_b);
  rep.partial_diff = partial_set(SetOp::Sub, g).size();
  const SetResult ratio = partial_set(SetOp::Div, g, ZeroDivisor::Exclude);
  rep.partial_ratio = ratio.size();
  rep.partial_ratio_excluded = ratio.excluded;

  // Gradient-1 lines y = x + c are the differences x - y = -c. Lines
  // through the origin are the slopes y/x plus the vertical when some x = 0.
  if (rep.gradient_one_cover.size() != rep.partial_diff) {
    throw InvariantViolation("gradient-1 cover count differs from |A -_E B|");
  }
  {
    EdgeSet flipped;
    for (const auto& [x, y] : rep.e) flipped.insert({y, x});
    const SetResult slopes = partial_set(SetOp::Div, BipartiteEdgeSet::from_edges(ctx, flipped), ZeroDivisor::Exclude);
    if (rep.origin_cover.size() != slopes.size() + (slopes.excluded > 0 ? 1 : 0)) {
      throw InvariantViolation("origin cover count differs from |B /_E A|");
    }
  }
  if (rep.gradient_one_cover.size() > t.r_cover[0] || rep.origin_cover.size() > t.r_cover[1]) {
    throw InvariantViolation("normalized covers exceed the pencils through p1 / p2");
  }

  const double e_sz = static_cast<double>(rep.e.size());
  const double a_sz = static_cast<double>(rep.a.size());
  const double b_sz = static_cast<double>(rep.b.size());
  const double kd = static_cast<double>(rep.k);
  rep.e_over_b = e_sz / b_sz;
  rep.k5_over_n = std::pow(kd, 5) / std::pow(n, 2 + 2 * eps);
  const double lemma_scale = std::pow(a_sz, 4) * std::pow(b_sz, 3) / std::pow(e_sz, 5);
  rep.diff_lemma_value = lemma_scale * std::pow(static_cast<double>(rep.partial_diff), 4);
  rep.ratio_lemma_value = lemma_scale * std::pow(static_cast<double>(rep.partial_ratio), 4);

  const double bound = cfg.witness_constant.to_double() * kd;
  const bool diff_ok = at_most(rep.partial_diff, cfg.witness_constant, rep.k);
  const bool ratio_ok = at_most(rep.partial_ratio, cfg.witness_constant, rep.k);
  t.checks.push_back({"witness", "partial_diff_at_most_CK", static_cast<double>(rep.partial_diff), bound, diff_ok});
  t.checks.push_back({"witness", "partial_ratio_at_most_CK", static_cast<double>(rep.partial_ratio), bound, ratio_ok});
  if (!diff_ok || !ratio_ok) {
    const bool d = !diff_ok;
    rep.no_witness = NoWitness{"witness", d ? "|A -_E B| exceeds C K" : "|A /_E B| exceeds C K",
                               static_cast<double>(d ? rep.partial_diff : rep.partial_ratio), bound};
    return rep;
  }

  rep.bsg_ran = true;
  rep.extraction = extract_refined(g, cfg.bsg);
  if (!rep.extraction.found) {
    t.checks.push_back({"bsg", "extract_refined", 0, 1, false});
    rep.no_witness = NoWitness{"bsg", rep.extraction.reason, 0, 1};
    return rep;
  }
  t.checks.push_back({"bsg", "extract_refined", 1, 1, true});
  rep.certificate = certify(g, rep.extraction.refined, cfg.bsg);
  if (!rep.certificate.path_recount_ok) throw InvariantViolation("path count disagrees with enumeration");
  t.checks.push_back({"bsg_certificate", "difference_bound", rep.certificate.diff_bound_ok ? 1.0 : 0.0, 1,
                      rep.certificate.diff_bound_ok});
  t.checks.push_back({"bsg_certificate", "ratio_bound", rep.certificate.ratio_bound_ok ? 1.0 : 0.0, 1,
                      rep.certificate.ratio_bound_ok});
  if (!rep.certificate.bounds_ok()) {
    rep.no_witness = NoWitness{"bsg_certificate", "certificate bound violated", 0, 1};
    return rep;
  }
  rep.rudnev = rudnev_ratio(rep.extraction.refined);
  rep.witness = true;
  return rep;
}

}  // namespace fpinc
