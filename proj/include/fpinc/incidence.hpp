#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fpinc/plane.hpp"

namespace fpinc {

using Index = std::uint32_t;

// A point set and a line set over one prime field. Both are stored sorted in
// canonical-triple order; duplicates are rejected at construction.
class Instance {
 public:
  explicit Instance(const PrimeContext& ctx) : ctx_(ctx) {}
  Instance(const PrimeContext& ctx, std::vector<ProjPoint> points, std::vector<ProjLine> lines);

  const PrimeContext& context() const noexcept { return ctx_; }
  u64 p() const noexcept { return ctx_.p(); }
  std::span<const ProjPoint> points() const noexcept { return points_; }
  std::span<const ProjLine> lines() const noexcept { return lines_; }
  std::size_t num_points() const noexcept { return points_.size(); }
  std::size_t num_lines() const noexcept { return lines_.size(); }

  // N := max(|P|, |L|)
  std::size_t size_bound() const noexcept { return std::max(points_.size(), lines_.size()); }
  // The nondegeneracy hypothesis N < p fails.
  bool warn_n_ge_p() const noexcept { return size_bound() >= ctx_.p(); }
  bool empty() const noexcept { return points_.empty() && lines_.empty(); }

  std::optional<Index> point_index(const ProjPoint& pt) const;
  std::optional<Index> line_index(const ProjLine& l) const;

  // Keeps the points/lines whose flag is set.
  Instance restrict(const std::vector<bool>& keep_point, const std::vector<bool>& keep_line) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  PrimeContext ctx_;
  std::vector<ProjPoint> points_;
  std::vector<ProjLine> lines_;
};

enum class CountMethod { BruteForce, Bucketed };

struct DegreeTables {
  std::vector<std::size_t> point_degree;  // aligned with Instance::points()
  std::vector<std::size_t> line_degree;   // aligned with Instance::lines()
  std::size_t incidences = 0;

  friend bool operator==(const DegreeTables&, const DegreeTables&) = default;
};

// Adjacency in both directions; every list is sorted ascending.
struct IncidenceGraph {
  std::vector<std::vector<Index>> lines_of_point;
  std::vector<std::vector<Index>> points_of_line;
  std::size_t incidences = 0;

  DegreeTables degrees() const;
};

DegreeTables count_incidences(const Instance& inst, CountMethod method = CountMethod::Bucketed);
IncidenceGraph incidence_graph(const Instance& inst, CountMethod method = CountMethod::Bucketed);

enum class TruncationMode {
  Fixpoint,    // alternate point and line removal until nothing changes
  SinglePass,  // one point round, then one line round
};

// Removes points and lines whose degree exceeds k_max.
Instance truncate_high_degree(const Instance& inst, std::size_t k_max,
                              TruncationMode mode = TruncationMode::Fixpoint);

struct DyadicSelection {
  std::vector<Index> members;  // indices into the degree array, ascending
  std::size_t k = 0;           // bucket is [k, 2k)
  std::size_t mass = 0;        // sum of member degrees
  unsigned bucket = 0;         // k == 2^bucket

  bool empty() const noexcept { return members.empty(); }
};

// Among entries with degree >= d_min, the power-of-two bucket [2^j, 2^{j+1})
// carrying the largest total degree; ties go to the smaller j.
DyadicSelection dyadic_select(std::span<const std::size_t> degrees, std::size_t d_min);

struct PointSelection {
  std::vector<ProjPoint> points;
  std::size_t k = 0;
  std::size_t mass = 0;
};
std::optional<PointSelection> dyadic_select(const Instance& inst, std::size_t d_min);

// Both Cauchy-Schwarz incidence bounds, evaluated exactly:
//   I <= |L|^{1/2} |P| + |L|   and   I <= |P|^{1/2} |L| + |P|
struct TrivialBounds {
  bool lines_side = false;
  bool points_side = false;
  double lines_side_slack = 0;   // bound minus I
  double points_side_slack = 0;
};
TrivialBounds trivial_bounds(std::size_t num_points, std::size_t num_lines, std::size_t incidences);

}  // namespace fpinc
