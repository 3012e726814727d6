#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>

#include "fpinc/ratio.hpp"
#include "fpinc/sumsets.hpp"

namespace fpinc {

// Every constant of the Balog-Szemeredi-Gowers refinement, explicit.
struct BsgConfig {
  // (a1, a2) is good when |N(a1) & N(a2)| >= c |E|^2 / (|A|^2 |B|)
  Ratio good_pair_constant{1, 20};
  // the candidate A' needs at least this fraction of |A'|^2 ordered good pairs
  Ratio good_fraction{9, 10};
  // a in A' is popular when it is good with this fraction of A'
  Ratio popularity_fraction{7, 10};
  // every pair of A'' must be joined by >= c |E|^5 / (|A|^4 |B|^3) length-4 paths
  Ratio path_constant{1, 10};
  // |A''| >= floor(c |E| / |B|)
  Ratio size_constant{1, 4};
  // certificate bound: |A'-A'| * rho <= C |A -_E B|^4 (and likewise for ratios)
  Ratio certificate_constant{1, 1};

  // Throws InvalidArgument. Fractions must lie in (0, 1];
  // good_pair_constant <= (1 - good_fraction) / 2 and
  // popularity_fraction <= good_fraction.
  void validate() const;

  friend bool operator==(const BsgConfig&, const BsgConfig&) = default;
};

using ElementPair = std::pair<FieldElement, FieldElement>;

ElementSet common_neighborhood(const BipartiteEdgeSet& g, const FieldElement& a1, const FieldElement& a2);

bool is_good_pair(const BipartiteEdgeSet& g, const FieldElement& a1, const FieldElement& a2,
                  const BsgConfig& cfg);
// Ordered pairs of A x A, diagonal included.
std::set<ElementPair> good_pairs(const BipartiteEdgeSet& g, const BsgConfig& cfg);

// Number of (b1, a, b2) with (a1,b1), (a,b1), (a,b2), (a2,b2) in E: the
// paths a1 - b1 - a - b2 - a2.
std::uint64_t count_paths4(const BipartiteEdgeSet& g, const FieldElement& a1, const FieldElement& a2);

// The lemma's lower bound |E|^5 / (|A|^4 |B|^3) as a double (report only).
double path_bound(const BipartiteEdgeSet& g);

struct BsgExtraction {
  bool found = false;
  ElementSet refined;    // A''
  ElementSet candidate;  // A' it was drawn from
  std::size_t candidate_good_pairs = 0;
  std::uint64_t min_paths = 0;
  std::size_t required_size = 0;
  std::string reason;    // why nothing was found
};

// Candidates A' are the degree-ordered prefixes of A, largest first. For each
// one that has enough good pairs, A'' keeps its popular members; the first
// A'' meeting the size and path thresholds wins.
BsgExtraction extract_refined(const BipartiteEdgeSet& g, const BsgConfig& cfg);

struct BsgSizes {
  std::size_t a = 0, b = 0, e = 0;
  std::size_t partial_diff = 0;            // |A -_E B|
  std::size_t partial_ratio = 0;           // |A /_E B|, edges with b = 0 skipped
  std::size_t partial_ratio_zero_free = 0; // over edges with both ends nonzero
  std::size_t aprime_diff = 0;             // |A' - A'|
  std::size_t aprime_ratio = 0;            // |A'\{0} / A'\{0}|

  friend bool operator==(const BsgSizes&, const BsgSizes&) = default;
};

struct BsgCertificate {
  ElementSet a_prime;
  bool degenerate = false;  // A' empty
  std::uint64_t min_path4_count = 0;        // over ordered pairs of A'
  std::uint64_t ratio_min_path4_count = 0;  // same, on the zero-free subgraph
  std::size_t ratio_excluded_edges = 0;
  BsgSizes sizes;
  bool diff_bound_ok = false;
  bool ratio_bound_ok = false;
  bool path_recount_ok = false;

  bool bounds_ok() const noexcept { return diff_bound_ok && ratio_bound_ok; }
  friend bool operator==(const BsgCertificate&, const BsgCertificate&) = default;
};

BsgCertificate certify(const BipartiteEdgeSet& g, const ElementSet& a_prime, const BsgConfig& cfg);

}  // namespace fpinc
