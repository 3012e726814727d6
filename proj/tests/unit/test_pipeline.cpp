#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fpinc/constructions.hpp"
#include "fpinc/errors.hpp"
#include "fpinc/io.hpp"
#include "fpinc/pipeline.hpp"

using namespace fpinc;

namespace {

std::size_t cover(const std::vector<ProjPoint>& s, const ProjPoint& centre) {
  std::set<ProjLine> lines;
  for (const auto& x : s) lines.insert(line_through(centre, x));
  return lines.size();
}

bool subset(const std::vector<ProjPoint>& a, const std::vector<ProjPoint>& b) {
  const std::set<ProjPoint> sb(b.begin(), b.end());
  for (const auto& x : a)
    if (!sb.count(x)) return false;
  return true;
}

const StageRecord& stage(const RefinementTrace& t, const std::string& name) {
  for (const auto& s : t.stages)
    if (s.name == name) return s;
  FAIL("missing stage " << name);
  return t.stages.front();
}

bool has_diff(const VerifyResult& v, const std::string& field) {
  for (const auto& d : v.diffs)
    if (d.field == field) return true;
  return false;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_NOTHROW(PipelineConfig{}.validate());
  CHECK_NOTHROW(PipelineConfig::permissive().validate());
  PipelineConfig c;
  c.epsilon = Ratio(1, 2);
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = PipelineConfig{};
  c.j_constant = Ratio(0, 1);
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
}

TEST_CASE("first refinement on the full plane p = 5") {
  const Instance inst = full_plane(5);
  const RefinementTrace t = first_refinement(inst, PipelineConfig::permissive());
  REQUIRE(t.ok());
  const PrimeContext f5(5);
  CHECK(t.k == 4);
  // every pair ties, so the first pair in canonical order wins
  CHECK(*t.pt1 == ProjPoint::affine(f5, 0, 0));
  CHECK(*t.pt2 == ProjPoint::affine(f5, 0, 1));
  CHECK(t.q.size() == 23);
  CHECK(cover(t.q, *t.pt1) == 6);
  CHECK(cover(t.q, *t.pt2) == 6);
  CHECK(cover(t.q, *t.pt1) <= 2 * t.k);
}

TEST_CASE("second refinement on the full plane p = 5") {
  const Instance inst = full_plane(5);
  const PipelineConfig cfg = PipelineConfig::permissive();
  const RefinementTrace t = second_refinement(first_refinement(inst, cfg), inst, cfg);
  REQUIRE(t.ok());
  const PrimeContext f5(5);
  CHECK(*t.rich_line == ProjLine(f5, 0, 1, 0));
  CHECK(t.q2.size() == 4);
  CHECK(*t.pt3 == ProjPoint::affine(f5, 1, 0));
  CHECK(*t.pt4 == ProjPoint::affine(f5, 2, 0));
  CHECK(t.r.size() == 21);
  for (std::size_t i = 0; i < 4; ++i) CHECK(t.r_cover[i] == 6);
  for (const auto& c : {*t.pt1, *t.pt2, *t.pt3, *t.pt4}) CHECK(cover(t.r, c) <= 2 * t.k);
}

TEST_CASE("stage monotonicity, containment and the p1..p4 pattern") {
  for (const Instance& inst : {full_plane(5), full_plane(7), full_plane(3, false), full_plane(5, false)}) {
    for (const PipelineConfig& cfg : {PipelineConfig{}, PipelineConfig::permissive()}) {
      RefinementTrace t = first_refinement(inst, cfg);
      REQUIRE(t.ok());
      t = second_refinement(t, inst, cfg);
      REQUIRE(t.ok());
      const char* chain[] = {"P", "P1", "P1'", "P2"};
      for (int i = 0; i + 1 < 4; ++i) {
        CHECK(stage(t, chain[i + 1]).size <= stage(t, chain[i]).size);
        CHECK(stage(t, chain[i + 1]).mass <= stage(t, chain[i]).mass);
      }
      CHECK(stage(t, "Q").size <= stage(t, "P1'").size);
      CHECK(stage(t, "Q").mass <= stage(t, "P1'").mass);
      CHECK(stage(t, "Q1").mass <= stage(t, "Q").mass);
      CHECK(stage(t, "Q2").mass <= stage(t, "Q1").mass);
      CHECK(stage(t, "R").mass <= stage(t, "Q").mass);
      CHECK(subset(t.p1, std::vector<ProjPoint>(inst.points().begin(), inst.points().end())));
      CHECK(subset(t.p1_prime, t.p1));
      CHECK(subset(t.p2, t.p1_prime));
      CHECK(subset(t.q, t.p1_prime));
      CHECK(subset(t.q1, t.q));
      CHECK(subset(t.q2, t.q1));
      CHECK(subset(t.r, t.q));
      const std::set<ProjPoint> four{*t.pt1, *t.pt2, *t.pt3, *t.pt4};
      CHECK(four.size() == 4);
      CHECK(incident(*t.pt1, *t.rich_line));
      CHECK(incident(*t.pt3, *t.rich_line));
      CHECK(incident(*t.pt4, *t.rich_line));
      CHECK_FALSE(incident(*t.pt2, *t.rich_line));
    }
  }
}

TEST_CASE("guards surface as NoWitness") {
  const WitnessReport low = run_pipeline(random_instance(20, 101, 3), PipelineConfig{});
  CHECK_FALSE(low.witness);
  REQUIRE(low.no_witness);
  CHECK(low.no_witness->stage == "first_refinement");
  CHECK(low.no_witness->measured < low.no_witness->required);

  // every line of J through p1 also contains p2
  const PrimeContext f11(11);
  std::vector<ProjPoint> row;
  for (std::int64_t x = 0; x < 5; ++x) row.push_back(ProjPoint::affine(f11, x, 0));
  const Instance collinear(f11, row, {ProjLine::slope_intercept(f11, 0, 0)});
  const WitnessReport sel = run_pipeline(collinear, PipelineConfig::permissive());
  REQUIRE(sel.no_witness);
  CHECK(sel.no_witness->stage == "second_refinement");
  CHECK(sel.no_witness->reason.rfind("line-selection", 0) == 0);

  const WitnessReport few = run_pipeline(cartesian_product(5, 101), PipelineConfig::permissive());
  REQUIRE(few.no_witness);
  CHECK(few.no_witness->stage == "second_refinement");
  CHECK(few.no_witness->reason.rfind("q2_size", 0) == 0);

  CHECK_THROWS_AS(run_pipeline(Instance(f11), PipelineConfig{}), InvalidArgument);
  CHECK_THROWS_AS(second_refinement(low.trace, random_instance(20, 101, 3), PipelineConfig{}), InvalidArgument);
}

TEST_CASE("normalization of an already normalized configuration is the identity") {
  const PrimeContext f7(7);
  RefinementTrace t;
  t.k = 4;
  t.pt1 = ProjPoint(f7, 1, 1, 0);
  t.pt2 = ProjPoint::affine(f7, 0, 0);
  t.pt3 = ProjPoint(f7, 1, 0, 0);
  t.pt4 = ProjPoint(f7, 0, 1, 0);
  t.rich_line = ProjLine::at_infinity(f7);
  for (std::int64_t x : {1, 2, 3})
    for (std::int64_t y : {2, 5}) t.r.push_back(ProjPoint::affine(f7, x, y));
  PipelineConfig cfg;
  cfg.pad_to_k = false;
  const Normalization n = projective_normalize(t, cfg);
  CHECK(ProjMap::from_residues(n.map, 7).same_projective_map(ProjMap::identity(f7)));
  CHECK(n.e.size() == 6);
  CHECK(n.a == make_set(f7, {1, 2, 3}));
  CHECK(n.b == make_set(f7, {2, 5}));
  CHECK(n.gradient == 1);
  CHECK(n.dropped_on_common_line == 0);

  cfg.pad_to_k = true;
  const Normalization padded = projective_normalize(t, cfg);
  CHECK(padded.a.size() == 4);
  CHECK(padded.padded_a == make_set(f7, {4}));
  CHECK(padded.padded_b == make_set(f7, {1, 3}));

  t.pt2 = ProjPoint(f7, 1, 0, 0);  // p2 on the common line
  CHECK_THROWS_AS(projective_normalize(t, cfg), InvariantViolation);
}

TEST_CASE("end-to-end witness on the full plane p = 5") {
  for (const PipelineConfig& cfg : {PipelineConfig::permissive(), PipelineConfig{}}) {
    const WitnessReport w = run_pipeline(full_plane(5), cfg);
    REQUIRE(w.witness);
    CHECK(verify_witness(w).ok);
    CHECK(w.k == 4);
    CHECK(w.partial_diff <= 4 * w.k);
    CHECK(w.partial_ratio <= 4 * w.k);
    CHECK(w.gradient_one_cover.size() == w.partial_diff);
    CHECK(w.e.size() == 19);
    CHECK(w.dropped_on_common_line == 2);
    CHECK(w.e.size() + w.dropped_on_common_line == w.trace.r.size());
    CHECK(w.a == make_set(PrimeContext(5), {0, 1, 2, 3, 4}));
    CHECK(w.padded_a.empty());
    CHECK(w.certificate.bounds_ok());
    REQUIRE(w.rudnev);
    // every edge lies on a recorded gradient-1 line and a line through 0
    const std::set<ProjLine> g1(w.gradient_one_cover.begin(), w.gradient_one_cover.end());
    const std::set<ProjLine> g0(w.origin_cover.begin(), w.origin_cover.end());
    for (const auto& [x, y] : w.e) {
      const ProjPoint pt = ProjPoint::from_residues({x.value(), y.value(), 1}, 5);
      bool on1 = false, on0 = false;
      for (const auto& l : g1) on1 = on1 || incident(pt, l);
      for (const auto& l : g0) on0 = on0 || incident(pt, l);
      CHECK(on1);
      CHECK(on0);
    }
    CHECK(g1.size() <= 2 * w.k);
    CHECK(g0.size() <= 2 * w.k);
  }
}

TEST_CASE("more witnesses verify") {
  for (const Instance& inst : {full_plane(3), full_plane(7), full_plane(3, false), full_plane(7, false)}) {
    const WitnessReport w = run_pipeline(inst, PipelineConfig::permissive());
    if (w.witness) CHECK(verify_witness(w).ok);
  }
}

TEST_CASE("Elekes grid n = 3 regression snapshot") {
  const WitnessReport w = run_pipeline(elekes_grid(3, 101), PipelineConfig{});
  CHECK_FALSE(w.witness);
  REQUIRE(w.no_witness);
  CHECK(w.no_witness->stage == "second_refinement");
  CHECK(w.no_witness->reason.rfind("r_size", 0) == 0);
  CHECK(w.trace.k == 2);
  CHECK(w.incidences == 81);
}

TEST_CASE("determinism") {
  const Instance inst = full_plane(5);
  CHECK(report_to_json(run_pipeline(inst, PipelineConfig{})).dump() ==
        report_to_json(run_pipeline(inst, PipelineConfig{})).dump());
}

TEST_CASE("verify_witness catches corruptions") {
  const WitnessReport w = run_pipeline(full_plane(5), PipelineConfig::permissive());
  REQUIRE(w.witness);

  WitnessReport a = w;
  a.partial_diff += 1;
  VerifyResult v = verify_witness(a);
  CHECK_FALSE(v.ok);
  CHECK(has_diff(v, "partial_diff"));

  WitnessReport b = w;
  const PrimeContext f5(5);
  for (std::int64_t x = 0; x < 5 && b.e.size() == w.e.size(); ++x)
    for (std::int64_t y = 0; y < 5 && b.e.size() == w.e.size(); ++y) b.e.insert({FieldElement(f5, x), FieldElement(f5, y)});
  REQUIRE(b.e.size() == w.e.size() + 1);
  v = verify_witness(b);
  CHECK_FALSE(v.ok);
  CHECK(has_diff(v, "e"));

  WitnessReport c = w;
  c.gradient_one_cover.pop_back();
  v = verify_witness(c);
  CHECK_FALSE(v.ok);
  CHECK(has_diff(v, "gradient_one_cover"));

  WitnessReport d = w;
  d.certificate.min_path4_count += 1;
  CHECK(has_diff(verify_witness(d), "certificate.min_path4_count"));

  WitnessReport e = w;
  e.rudnev->dratio -= 1;
  CHECK(has_diff(verify_witness(e), "rudnev.dratio"));

  WitnessReport f = w;
  f.witness = false;
  CHECK_FALSE(verify_witness(f).ok);
}

TEST_CASE("report JSON round trip") {
  for (const Instance& inst : {full_plane(5), elekes_grid(3, 101)}) {
    const WitnessReport w = run_pipeline(inst, PipelineConfig{});
    const json j = report_to_json(w);
    const WitnessReport back = report_from_json(j, "test");
    CHECK(report_to_json(back).dump() == j.dump());
    CHECK(back.trace == w.trace);
    if (w.witness) CHECK(verify_witness(back).ok);
  }
}
