#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "fpinc/incidence.hpp"
#include "fpinc/sumsets.hpp"

namespace fpinc {

// Largest p accepted by full_plane; PG(2,p) has p^2 + p + 1 points.
inline constexpr u64 kMaxFullPlaneModulus = 1021;

// P = {0..n-1} x {0..2n^2-1}, L = {y = m x + c : m < n, c < n^2}.
// Exactly n^4 incidences. Requires p > 2 n^2 so no coordinate wraps.
Instance elekes_grid(std::uint64_t n, u64 p);

// n distinct uniform affine points and n distinct uniform affine lines.
Instance random_instance(std::uint64_t n, u64 p, std::uint64_t seed);

// All p^2 affine points and p^2 + p affine lines, or all of PG(2,p).
Instance full_plane(u64 p, bool affine_only = true);

// P = {0..n-1}^2, L = {y = m x + c : m, c < n}.
Instance cartesian_product(std::uint64_t n, u64 p);

// Random E subset of A x B with A = {1..size_a}, B = {1..size_b}; each edge
// kept with probability `density`. Isolated vertices are flagged as padding.
BipartiteEdgeSet random_bipartite(std::size_t size_a, std::size_t size_b, double density, u64 p,
                                  std::uint64_t seed);

enum class GenKind { Elekes, Random, FullPlane, CartesianProduct };

std::string to_string(GenKind kind);
GenKind parse_gen_kind(const std::string& s);

struct GenSpec {
  GenKind kind = GenKind::Elekes;
  std::uint64_t n = 2;  // grid side (elekes, cartesian_product) or N (random)
  u64 p = 101;
  std::uint64_t seed = 1;
  bool affine_only = true;  // full_plane
};

// Throws InvalidArgument when the parameters are out of range for the kind.
Instance generate(const GenSpec& spec);

// Uniform integer in [0, bound) from a 64-bit Mersenne twister, by
// rejection. Unlike std::uniform_int_distribution the output sequence is the
// same on every standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace fpinc
