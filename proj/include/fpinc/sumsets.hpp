#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "fpinc/field.hpp"

namespace fpinc {

using ElementSet = std::set<FieldElement>;
using Edge = std::pair<FieldElement, FieldElement>;
using EdgeSet = std::set<Edge>;

// E subset of A x B. Every vertex carries at least one edge unless it is
// flagged as padding; padded vertices carry none.
class BipartiteEdgeSet {
 public:
  explicit BipartiteEdgeSet(const PrimeContext& ctx) : p_(ctx.p()) {}
  BipartiteEdgeSet(const PrimeContext& ctx, ElementSet left, ElementSet right, EdgeSet edges,
                   ElementSet padded_left = {}, ElementSet padded_right = {});
  // A and B are the projections of the edges.
  static BipartiteEdgeSet from_edges(const PrimeContext& ctx, const EdgeSet& edges);
  // Complete graph A x B.
  static BipartiteEdgeSet complete(const PrimeContext& ctx, const ElementSet& left,
                                   const ElementSet& right);

  u64 p() const noexcept { return p_; }
  const ElementSet& left() const noexcept { return left_; }
  const ElementSet& right() const noexcept { return right_; }
  const EdgeSet& edges() const noexcept { return edges_; }
  const ElementSet& padded_left() const noexcept { return padded_left_; }
  const ElementSet& padded_right() const noexcept { return padded_right_; }

  // N(a); throws InvalidArgument if a is not in A.
  const ElementSet& neighbors(const FieldElement& a) const;
  bool has_edge(const FieldElement& a, const FieldElement& b) const { return edges_.count({a, b}) > 0; }

  // Subgraph on the edges whose endpoints are both nonzero. Vertices that
  // lose every edge are dropped (padding is dropped too).
  BipartiteEdgeSet without_zero_endpoints() const;

  friend bool operator==(const BipartiteEdgeSet& a, const BipartiteEdgeSet& b) {
    return a.p_ == b.p_ && a.left_ == b.left_ && a.right_ == b.right_ && a.edges_ == b.edges_ &&
           a.padded_left_ == b.padded_left_ && a.padded_right_ == b.padded_right_;
  }

 private:
  void index();

  u64 p_;
  ElementSet left_, right_;
  EdgeSet edges_;
  ElementSet padded_left_, padded_right_;
  std::map<FieldElement, ElementSet> nbrs_;
};

enum class SetOp { Add, Sub, Mul, Div };

char op_symbol(SetOp op) noexcept;

enum class ZeroDivisor {
  Error,    // throw DivisionByZero naming the offending element
  Exclude,  // skip the pair and count it
};

struct SetResult {
  ElementSet values;
  std::size_t excluded = 0;  // pairs skipped for a zero divisor
  std::size_t size() const noexcept { return values.size(); }
};

// {a op b : a in A, b in B}
SetResult full_set(SetOp op, const ElementSet& a, const ElementSet& b,
                   ZeroDivisor policy = ZeroDivisor::Error);
// {a op b : (a, b) in E}
SetResult partial_set(SetOp op, const BipartiteEdgeSet& g, ZeroDivisor policy = ZeroDivisor::Error);

struct DifferenceRatio {
  std::size_t size = 0;
  std::size_t dminus = 0;  // |A - A|
  std::size_t dratio = 0;  // |A / A|, zero excluded from the divisor side
  double ratio = 0;        // max(dminus, dratio) / |A|^{12/11}
  bool warn_large = false; // |A| >= sqrt(p): outside the estimate's hypothesis
};

// Measurement only: exact set sizes plus the floating-point ratio.
DifferenceRatio rudnev_ratio(const ElementSet& a);

ElementSet make_set(const PrimeContext& ctx, std::initializer_list<std::int64_t> values);
ElementSet make_set(const PrimeContext& ctx, const std::vector<std::int64_t>& values);

}  // namespace fpinc
