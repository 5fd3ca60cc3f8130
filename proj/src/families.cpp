#include "mpt/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mpt/errors.hpp"

namespace mpt {

MaxPlusMatrix generate_ek(std::int64_t k) {
  if (k < 2) throw InputError("E_k requires k >= 2");
  const auto n = static_cast<std::size_t>(2 * k);
  MaxPlusMatrix a(n);
  const auto kk = static_cast<std::size_t>(k);
  // Cycle of length k: 0 -> 1 -> ... -> k-1 -> 0.
  for (std::size_t i = 0; i + 1 < kk; ++i) a(i, i + 1) = 0L;
  a(kk - 1, 0) = 0L;
  // Cycle of length k+1: 0 -> k -> ... -> 2k-1 -> 0.
  a(0, kk) = 0L;
  for (std::size_t i = kk; i + 1 < n; ++i) a(i, i + 1) = 0L;
  a(n - 1, 0) = 0L;
  return a;
}

MaxPlusMatrix generate_ek_with_shared_loop(std::int64_t k) {
  MaxPlusMatrix a = generate_ek(k);
  a(0, 0) = 0L;
  return a;
}

MaxPlusMatrix generate_cherry(std::int64_t l, std::int64_t c) {
  if (l < 2) throw InputError("cherry requires l >= 2");
  if (c < 1) throw InputError("cherry requires c >= 1");
  const auto ll = static_cast<std::size_t>(l);
  MaxPlusMatrix a(4 * ll);
  const ExtendedRational light(static_cast<long>(c));
  const ExtendedRational cycle_w(static_cast<long>(3 * c));
  const ExtendedRational heavy_w(static_cast<long>(3 * c + 1));
  const ExtendedRational back_from_c(static_cast<long>(4 * c));

  // C-hat: 0 .. l-1.
  for (std::size_t i = 0; i < ll; ++i) a(i, (i + 1) % ll) = i == 0 ? heavy_w : cycle_w;

  // Path between node 0 of C-hat and s: 0, l, l+1, ..., 2l-2, s.
  const std::size_t s = 2 * ll - 1;
  std::vector<std::size_t> hat_path{0};
  for (std::size_t i = ll; i <= s; ++i) hat_path.push_back(i);
  for (std::size_t t = 0; t + 1 < hat_path.size(); ++t) {
    a(hat_path[t], hat_path[t + 1]) = cycle_w;  // towards s
    a(hat_path[t + 1], hat_path[t]) = light;    // away from s
  }

  // Path between s and node v = 3l-1 of C: s, 2l, ..., 3l-2, v.
  const std::size_t v = 3 * ll - 1;
  std::vector<std::size_t> c_path{s};
  for (std::size_t i = 2 * ll; i <= v; ++i) c_path.push_back(i);
  for (std::size_t t = 0; t + 1 < c_path.size(); ++t) {
    a(c_path[t], c_path[t + 1]) = light;            // away from s
    a(c_path[t + 1], c_path[t]) = back_from_c;      // towards s
  }

  // C: v .. 4l-1, length l+1.
  const std::size_t len = ll + 1;
  for (std::size_t t = 0; t < len; ++t) a(v + t, v + (t + 1) % len) = t == 0 ? heavy_w : cycle_w;
  return a;
}

std::optional<std::pair<std::int64_t, std::int64_t>> recognize_cherry(const MaxPlusMatrix& a) {
  if (a.size() % 4 != 0 || a.size() < 8) return std::nullopt;
  const ExtendedRational delta = a.min_finite();
  if (delta.is_neg_inf() || delta.value().get_den() != 1 || delta.value() < 1) return std::nullopt;
  if (!delta.value().get_num().fits_slong_p()) return std::nullopt;
  const auto l = static_cast<std::int64_t>(a.size() / 4);
  const std::int64_t c = delta.value().get_num().get_si();
  if (generate_cherry(l, c) != a) return std::nullopt;
  return std::make_pair(l, c);
}

std::int64_t er_walk_length(std::int64_t l, std::int64_t c) {
  return 112 * c * l * l * l - 16 * l * l * l - 12 * c * l * l + 4 * l - 1;
}

std::int64_t er_bound(std::int64_t l, std::int64_t c) {
  if (l < 2 || c < 1) throw InputError("er_bound requires l >= 2 and c >= 1");
  const std::int64_t n = 4 * l;
  return er_walk_length(l, c) + 2 * n * n + n;
}

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InputError("uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

bool bernoulli(Rng& rng, double p) {
  // 53 random bits -> [0, 1).
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

namespace {

ExtendedRational random_weight(Rng& rng, const RandomMatrixSpec& spec) {
  const std::int64_t den = uniform_int(rng, 1, spec.max_den);
  const std::int64_t num = uniform_int(rng, spec.lo * den, spec.hi * den);
  return ExtendedRational(Rational(static_cast<long>(num), static_cast<unsigned long>(den)));
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(i) - 1))]);
  return p;
}

}  // namespace

MaxPlusMatrix random_irreducible_matrix(Rng& rng, const RandomMatrixSpec& spec) {
  if (spec.n == 0) throw InputError("random matrix needs n >= 1");
  if (spec.max_den < 1 || spec.lo > spec.hi) throw InputError("bad random weight range");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    MaxPlusMatrix a(spec.n);
    std::size_t finite = 0;
    for (std::size_t i = 0; i < spec.n; ++i)
      for (std::size_t j = 0; j < spec.n; ++j)
        if (bernoulli(rng, spec.density)) {
          a(i, j) = random_weight(rng, spec);
          ++finite;
        }
    if (static_cast<double>(finite) < spec.min_density * static_cast<double>(spec.n * spec.n)) continue;
    if (finite == 0 || !is_irreducible(a)) continue;
    return a;
  }
  throw ResourceError("could not sample an irreducible matrix with the requested density");
}

MaxPlusVector random_vector(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  MaxPlusVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = ExtendedRational(static_cast<long>(uniform_int(rng, lo, hi)));
  return v;
}

Digraph random_strongly_connected(Rng& rng, std::size_t n, double density) {
  Digraph g(n);
  const auto order = random_permutation(rng, n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(order[i], order[(i + 1) % n]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (bernoulli(rng, density)) g.add_edge(i, j);
  return g;
}

Digraph random_acyclic(Rng& rng, std::size_t n, double extra_density) {
  Digraph g(n);
  const auto order = random_permutation(rng, n);
  for (std::size_t k = 1; k < n; ++k) {
    const auto parent = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(k) - 1));
    g.add_edge(order[parent], order[k]);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (bernoulli(rng, extra_density)) g.add_edge(order[a], order[b]);
  return g;
}

Digraph random_oriented_tree(Rng& rng, std::size_t n) {
  Digraph g(n);
  for (std::size_t k = 1; k < n; ++k) {
    const auto parent = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(k) - 1));
    if (bernoulli(rng, 0.5))
      g.add_edge(parent, k);
    else
      g.add_edge(k, parent);
  }
  return g;
}

}  // namespace mpt
