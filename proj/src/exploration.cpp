#include "mpt/exploration.hpp"

#include <algorithm>

#include "mpt/errors.hpp"

namespace mpt {

std::int64_t wielandt_number(std::int64_t m) { return m * m - 2 * m + 2; }

EpUpperBounds ep_upper_bounds(std::int64_t node_count, std::int64_t girth, std::int64_t cyclicity) {
  const std::int64_t n = node_count;
  const std::int64_t g = girth;
  const std::int64_t c = cyclicity;
  if (n < 1) throw InputError("ep_upper_bounds: N must be positive");
  if (g < 1 || g > n) throw InputError("ep_upper_bounds: girth must lie in [1, N]");
  if (c < 1 || g % c != 0) throw InputError("ep_upper_bounds: cyclicity must divide the girth");

  EpUpperBounds b;
  const Rational denardo(n + (n - 2) * g);
  const Rational general = Rational(2 * g * n, c) - Rational(g, c) - Rational(2 * g) + Rational(c);
  b.girth_bound = std::min(denardo, general);
  b.girth_bound.canonicalize();
  b.girth_bound_ceil = ceil_to_int(b.girth_bound);
  b.wielandt = wielandt_number(n);
  b.schwarz = c * wielandt_number(n / c) + n % c;
  return b;
}

std::int64_t exploration_penalty(const Digraph& h) {
  if (!is_strongly_connected(h)) throw PreconditionError("exploration_penalty: graph is not strongly connected");
  const auto g = girth(h);
  // A lone node without self-loop has no closed walk of positive length.
  if (!g) throw PreconditionError("exploration_penalty: graph has no cycle");
  const std::int64_t c = cyclicity(h);
  const auto bounds = ep_upper_bounds(static_cast<std::int64_t>(h.node_count()), *g, c);
  const std::int64_t limit = std::min(bounds.girth_bound_ceil, bounds.schwarz) + c;

  const BoolMatrix adj = BoolMatrix::adjacency(h);
  BoolMatrix step = BoolMatrix::identity(h.node_count());
  for (std::int64_t k = 0; k < c; ++k) step = step * adj;

  std::int64_t last_failure = -1;
  BoolMatrix power = BoolMatrix::identity(h.node_count());
  for (std::int64_t n = 0; n <= limit; n += c) {
    for (std::size_t i = 0; i < h.node_count(); ++i) {
      if (!power(i, i)) {
        last_failure = n;
        break;
      }
    }
    power = power * step;
  }
  return last_failure + 1;
}

}  // namespace mpt
