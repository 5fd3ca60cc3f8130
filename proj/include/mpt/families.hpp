#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "mpt/graph.hpp"
#include "mpt/matrix.hpp"

namespace mpt {

/// Two zero-weight cycles of lengths k and k+1 sharing node 0; N = 2k.
MaxPlusMatrix generate_ek(std::int64_t k);

/// E_k plus a zero-weight self-loop at the shared node.
MaxPlusMatrix generate_ek_with_shared_loop(std::int64_t k);

/// Cherry graph H_{l,c} on 4l nodes.
///
/// Layout: cycle C-hat on 0..l-1, path C-hat -> s through l..2l-2, s = 2l-1,
/// path s -> C through 2l..3l-2, cycle C on 3l-1..4l-1. Cycle edges weigh
/// 3c except the first edge of each cycle (3c+1); edges leaving s weigh c,
/// edges towards s weigh 3c (from C-hat) and 4c (from C).
MaxPlusMatrix generate_cherry(std::int64_t l, std::int64_t c);

/// (l, c) when `a` is exactly generate_cherry(N/4, delta).
std::optional<std::pair<std::int64_t, std::int64_t>> recognize_cherry(const MaxPlusMatrix& a);

/// l_0 = 112 c l^3 - 16 l^3 - 12 c l^2 + 4 l - 1 for H_{l,c}.
std::int64_t er_walk_length(std::int64_t l, std::int64_t c);

/// B_ER = l_0 + 2N^2 + N with N = 4l.
std::int64_t er_bound(std::int64_t l, std::int64_t c);

// Deterministic random instances. Only the raw 64-bit output of the engine is
// used, so results do not depend on the standard library's distributions.

using Rng = std::mt19937_64;

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);
bool bernoulli(Rng& rng, double p);

struct RandomMatrixSpec {
  std::size_t n = 4;
  double density = 0.5;       // each entry finite with this probability
  double min_density = 0.4;   // reject samples whose finite fraction is lower
  std::int64_t lo = -5;       // weights in [lo, hi]
  std::int64_t hi = 5;
  std::int64_t max_den = 1;   // denominators drawn from 1..max_den
};

/// Rejection-samples until G(A) is strongly connected and dense enough.
MaxPlusMatrix random_irreducible_matrix(Rng& rng, const RandomMatrixSpec& spec);

/// Finite vector with integer entries in [lo, hi].
MaxPlusVector random_vector(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi);

/// Strongly connected digraph: a random Hamiltonian cycle plus extra edges.
Digraph random_strongly_connected(Rng& rng, std::size_t n, double density);

/// Weakly connected acyclic orientation: random spanning tree plus extra edges,
/// all oriented along a random node order.
Digraph random_acyclic(Rng& rng, std::size_t n, double extra_density);

/// Random tree with independently oriented edges.
Digraph random_oriented_tree(Rng& rng, std::size_t n);

}  // namespace mpt
