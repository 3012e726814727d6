#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpinc/bsg.hpp"
#include "fpinc/incidence.hpp"
#include "fpinc/plane.hpp"
#include "fpinc/ratio.hpp"
#include "fpinc/sumsets.hpp"

namespace fpinc {

// Every asymptotic threshold of the reduction as an explicit constant. The
// log factors hidden in the soft-O thresholds are dropped.
struct PipelineConfig {
  Ratio epsilon{1, 10};
  // K_max = ceil(c N^{1/2+eps}) for the degree truncation
  Ratio truncation_constant{4, 1};
  bool single_pass_truncation = false;
  // I >= c N^{3/2-eps}
  Ratio incidence_constant{1, 4};
  // P1: points of degree >= c N^{1/2-eps}
  Ratio p1_degree_constant{1, 2};
  // L1: lines with >= c N^{1/2-eps} points of P1'
  Ratio l1_constant{1, 2};
  // P2: points of P1' on >= c K lines of L1
  Ratio p2_constant{1, 2};
  // |Q| >= c K^2 / N^{2 eps}
  Ratio pair_constant{1, 4};
  // J: lines with >= c K^3 / N^{1+2eps} points of Q
  Ratio j_constant{1, 2};
  // Q1: points of Q on >= c K lines of J
  Ratio q1_constant{1, 2};
  // chosen line through p1 carries >= c N^{1/2-7eps} points of Q1
  Ratio rich_line_constant{1, 4};
  // |R| >= c K^6 / N^{2+2eps}
  Ratio r_constant{1, 4};
  // witness: |A -_E B|, |A /_E B| <= C K
  Ratio witness_constant{4, 1};
  // pad A and B with unused field elements up to K
  bool pad_to_k = true;
  BsgConfig bsg;
  std::uint64_t seed = 0;

  // Throws InvalidArgument.
  void validate() const;
  // Every popularity constant tiny, so desk-scale instances clear each stage.
  static PipelineConfig permissive();

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

struct ThresholdCheck {
  std::string stage;
  std::string name;
  double measured = 0;
  double required = 0;
  bool passed = false;

  friend bool operator==(const ThresholdCheck&, const ThresholdCheck&) = default;
};

struct StageRecord {
  std::string name;
  std::size_t size = 0;
  std::size_t mass = 0;  // incidences against the line set the stage is defined by

  friend bool operator==(const StageRecord&, const StageRecord&) = default;
};

struct NoWitness {
  std::string stage;
  std::string reason;
  double measured = 0;
  double required = 0;

  friend bool operator==(const NoWitness&, const NoWitness&) = default;
};

struct RefinementTrace {
  std::size_t n_bound = 0;  // N
  std::size_t incidences = 0;
  std::size_t k = 0;

  std::vector<ProjPoint> p1, p1_prime, p2;
  std::vector<ProjLine> l1;
  std::optional<ProjPoint> pt1, pt2;
  std::vector<ProjPoint> q;

  std::vector<ProjLine> j;
  std::vector<ProjPoint> q1;
  std::optional<ProjLine> rich_line;
  std::vector<ProjPoint> q2;
  std::optional<ProjPoint> pt3, pt4;
  std::vector<ProjPoint> r;
  // distinct lines through p1..p4 needed to cover R
  std::array<std::size_t, 4> r_cover{};

  std::vector<StageRecord> stages;
  std::vector<ThresholdCheck> checks;
  std::optional<NoWitness> failure;

  bool ok() const noexcept { return !failure; }
  friend bool operator==(const RefinementTrace&, const RefinementTrace&) = default;
};

// Picks P1, the dyadic bucket (P1', K), L1, P2, then the pair (p1, p2)
// maximizing |P_p1 & P_p2| and Q = P_p1 & P_p2. `inst` should already be
// degree-truncated. n_bound defaults to inst.size_bound().
RefinementTrace first_refinement(const Instance& inst, const PipelineConfig& cfg,
                                 std::optional<std::size_t> n_bound = std::nullopt);

// Continues a successful first refinement: J, Q1, the richest line through
// p1 missing p2, Q2, the pair (p3, p4) and R = Q_p3 & Q_p4.
RefinementTrace second_refinement(RefinementTrace trace, const Instance& inst, const PipelineConfig& cfg);

struct Normalization {
  Matrix3 map{};                 // tau followed by translation and y-scaling
  u64 gradient = 0;              // z, the pencil gradient before scaling
  std::size_t dropped_on_common_line = 0;
  ElementSet a, b, padded_a, padded_b;
  EdgeSet e;
  std::vector<ProjLine> gradient_one_cover;  // y = x + c meeting E
  std::vector<ProjLine> origin_cover;        // lines through (0,0) meeting E
};

// Sends the line p1 p3 p4 to infinity with p3, p4 at the horizontal and
// vertical directions, then moves p2 to the origin and rescales y so p1's
// pencil has gradient 1. E is the image of R.
Normalization projective_normalize(const RefinementTrace& trace, const PipelineConfig& cfg);

struct WitnessReport {
  PipelineConfig config;
  u64 p = 0;
  std::size_t num_points = 0, num_lines = 0, n_bound = 0, incidences = 0;
  bool warn_n_ge_p = false;
  std::size_t k_max = 0;
  std::size_t truncated_points = 0, truncated_lines = 0, truncated_incidences = 0;

  RefinementTrace trace;

  bool normalized = false;
  Matrix3 map{};
  std::uint64_t gradient = 0;
  std::size_t dropped_on_common_line = 0;
  ElementSet a, b, padded_a, padded_b;
  EdgeSet e;
  std::size_t k = 0;
  std::size_t partial_diff = 0;
  std::size_t partial_ratio = 0;
  std::size_t partial_ratio_excluded = 0;
  std::vector<ProjLine> gradient_one_cover;
  std::vector<ProjLine> origin_cover;

  bool bsg_ran = false;
  BsgExtraction extraction;
  BsgCertificate certificate;
  std::optional<DifferenceRatio> rudnev;

  // |E|/|B| against K^5/N^{2+2eps}, and |A|^4|B|^3|A op_E B|^4/|E|^5
  double e_over_b = 0, k5_over_n = 0, diff_lemma_value = 0, ratio_lemma_value = 0;

  bool witness = false;
  std::optional<NoWitness> no_witness;
};

// truncate -> first_refinement -> second_refinement -> projective_normalize
// -> BSG extraction and certificate -> difference-ratio measurement. Throws
// InvalidArgument for an empty instance; every threshold miss is a NoWitness.
WitnessReport run_pipeline(const Instance& inst, const PipelineConfig& cfg);

struct FieldDiff {
  std::string field;
  std::string reported;
  std::string recomputed;
};

struct VerifyResult {
  bool ok = true;
  std::vector<FieldDiff> diffs;
};

// Recomputes every claimed quantity of a Witness report from its raw sets by
// direct enumeration and lists each mismatch.
VerifyResult verify_witness(const WitnessReport& report);

}  // namespace fpinc
