#include "fpinc/sumsets.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fpinc/errors.hpp"

namespace fpinc {

namespace {

u64 common_modulus(const ElementSet& a, const ElementSet& b) {
  u64 p = 0;
  for (const ElementSet* s : {&a, &b}) {
    for (const FieldElement& x : *s) {
      if (p == 0) p = x.modulus();
      if (x.modulus() != p) throw ContextMismatch("sumset operands from different fields");
    }
  }
  return p;
}

ElementSet to_set(std::vector<u64>& raw, u64 p) {
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  ElementSet out;
  for (u64 v : raw) out.insert(out.end(), FieldElement::from_residue(v, p));
  return out;
}

u64 apply(SetOp op, u64 a, u64 b, u64 b_inv, u64 p) {
  switch (op) {
    case SetOp::Add: return residue::add(a, b, p);
    case SetOp::Sub: return residue::sub(a, b, p);
    case SetOp::Mul: return residue::mul(a, b, p);
    case SetOp::Div: return residue::mul(a, b_inv, p);
  }
  return 0;
}

[[noreturn]] void zero_divisor(const FieldElement& a) {
  throw DivisionByZero("division by zero: element 0 on the divisor side (numerator " +
                       std::to_string(a.value()) + ")");
}

}  // namespace

char op_symbol(SetOp op) noexcept {
  switch (op) {
    case SetOp::Add: return '+';
    case SetOp::Sub: return '-';
    case SetOp::Mul: return '*';
    case SetOp::Div: return '/';
  }
  return '?';
}

BipartiteEdgeSet::BipartiteEdgeSet(const PrimeContext& ctx, ElementSet left, ElementSet right,
                                   EdgeSet edges, ElementSet padded_left, ElementSet padded_right)
    : p_(ctx.p()),
      left_(std::move(left)),
      right_(std::move(right)),
      edges_(std::move(edges)),
      padded_left_(std::move(padded_left)),
      padded_right_(std::move(padded_right)) {
  for (const ElementSet* s : {&left_, &right_, &padded_left_, &padded_right_})
    for (const FieldElement& x : *s)
      if (x.modulus() != p_) throw ContextMismatch("edge set vertex from another field");
  for (const auto& [a, b] : edges_) {
    if (!left_.count(a) || !right_.count(b)) {
      throw InvalidArgument("edge (" + std::to_string(a.value()) + ", " + std::to_string(b.value()) +
                            ") not in A x B");
    }
  }
  index();
  ElementSet used_right;
  for (const auto& e : edges_) used_right.insert(e.second);
  for (const FieldElement& a : left_) {
    const bool isolated = nbrs_[a].empty();
    if (isolated != (padded_left_.count(a) > 0)) {
      throw InvalidArgument("left vertex " + std::to_string(a.value()) +
                            (isolated ? " has no edge and is not padding" : " is padding but has edges"));
    }
  }
  for (const FieldElement& b : right_) {
    const bool isolated = !used_right.count(b);
    if (isolated != (padded_right_.count(b) > 0)) {
      throw InvalidArgument("right vertex " + std::to_string(b.value()) +
                            (isolated ? " has no edge and is not padding" : " is padding but has edges"));
    }
  }
  for (const FieldElement& a : padded_left_)
    if (!left_.count(a)) throw InvalidArgument("padding outside A");
  for (const FieldElement& b : padded_right_)
    if (!right_.count(b)) throw InvalidArgument("padding outside B");
}

void BipartiteEdgeSet::index() {
  nbrs_.clear();
  for (const FieldElement& a : left_) nbrs_[a];
  for (const auto& [a, b] : edges_) nbrs_[a].insert(b);
}

BipartiteEdgeSet BipartiteEdgeSet::from_edges(const PrimeContext& ctx, const EdgeSet& edges) {
  ElementSet left, right;
  for (const auto& [a, b] : edges) {
    left.insert(a);
    right.insert(b);
  }
  return BipartiteEdgeSet(ctx, std::move(left), std::move(right), edges);
}

BipartiteEdgeSet BipartiteEdgeSet::complete(const PrimeContext& ctx, const ElementSet& left,
                                            const ElementSet& right) {
  EdgeSet edges;
  for (const auto& a : left)
    for (const auto& b : right) edges.insert({a, b});
  if (left.empty() || right.empty()) {
    return BipartiteEdgeSet(ctx, left, right, {}, left, right);
  }
  return BipartiteEdgeSet(ctx, left, right, std::move(edges));
}

const ElementSet& BipartiteEdgeSet::neighbors(const FieldElement& a) const {
  auto it = nbrs_.find(a);
  if (it == nbrs_.end()) throw InvalidArgument("element " + std::to_string(a.value()) + " is not in A");
  return it->second;
}

BipartiteEdgeSet BipartiteEdgeSet::without_zero_endpoints() const {
  EdgeSet kept;
  for (const auto& e : edges_)
    if (!e.first.is_zero() && !e.second.is_zero()) kept.insert(e);
  return from_edges(PrimeContext(p_), kept);
}

SetResult full_set(SetOp op, const ElementSet& a, const ElementSet& b, ZeroDivisor policy) {
  SetResult out;
  const u64 p = common_modulus(a, b);
  if (p == 0) return out;
  std::vector<std::pair<u64, u64>> rhs;
  rhs.reserve(b.size());
  for (const FieldElement& y : b) {
    if (op == SetOp::Div && y.is_zero()) {
      if (policy == ZeroDivisor::Error && !a.empty()) zero_divisor(*a.begin());
      out.excluded += a.size();
      continue;
    }
    rhs.emplace_back(y.value(), op == SetOp::Div ? residue::inv(y.value(), p) : 0);
  }
  std::vector<u64> raw;
  raw.reserve(a.size() * rhs.size());
  for (const FieldElement& x : a)
    for (const auto& [y, y_inv] : rhs) raw.push_back(apply(op, x.value(), y, y_inv, p));
  out.values = to_set(raw, p);
  return out;
}

SetResult partial_set(SetOp op, const BipartiteEdgeSet& g, ZeroDivisor policy) {
  SetResult out;
  const u64 p = g.p();
  std::vector<u64> raw;
  raw.reserve(g.edges().size());
  for (const auto& [x, y] : g.edges()) {
    if (op == SetOp::Div && y.is_zero()) {
      if (policy == ZeroDivisor::Error) zero_divisor(x);
      ++out.excluded;
      continue;
    }
    raw.push_back(apply(op, x.value(), y.value(), op == SetOp::Div ? residue::inv(y.value(), p) : 0, p));
  }
  out.values = to_set(raw, p);
  return out;
}

DifferenceRatio rudnev_ratio(const ElementSet& a) {
  if (a.empty()) throw InvalidArgument("rudnev_ratio: A must be nonempty");
  DifferenceRatio m;
  m.size = a.size();
  m.dminus = full_set(SetOp::Sub, a, a).size();
  m.dratio = full_set(SetOp::Div, a, a, ZeroDivisor::Exclude).size();
  const double n = static_cast<double>(a.size());
  m.ratio = static_cast<double>(std::max(m.dminus, m.dratio)) / std::pow(n, 12.0 / 11.0);
  const u64 p = a.begin()->modulus();
  m.warn_large = static_cast<unsigned __int128>(a.size()) * a.size() >= p;
  return m;
}

ElementSet make_set(const PrimeContext& ctx, std::initializer_list<std::int64_t> values) {
  return make_set(ctx, std::vector<std::int64_t>(values));
}

ElementSet make_set(const PrimeContext& ctx, const std::vector<std::int64_t>& values) {
  ElementSet out;
  for (std::int64_t v : values) out.insert(FieldElement(ctx, v));
  return out;
}

}  // namespace fpinc
