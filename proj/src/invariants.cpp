#include "hopfdg/invariants.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "hopfdg/error.hpp"
#include "hopfdg/hopf.hpp"

namespace hopfdg {
namespace {

// Sums weight(block index vector) over all compositions of the vertex set,
// bucketed by number of blocks.
template <class Ring, class Weight>
BinPoly<Ring> sum_over_compositions(const Digraph& g, const Limits& limits,
                                    const char* what, Weight&& weight) {
  require_composition_bound(g.vertex_count(), limits, what);
  const std::size_t n = g.vertex_count();
  std::vector<Ring> coeffs(n + 1, Ring(0));
  for (std::size_t k = (n == 0 ? 0 : 1); k <= n; ++k) {
    CompositionStream stream(n, k);
    while (stream.next()) coeffs[k] += weight(stream.block_indices());
  }
  return BinPoly<Ring>(std::move(coeffs));
}

}  // namespace

BinPoly<BigInt> strict_chromatic(const Digraph& g, const Limits& limits) {
  return sum_over_compositions<BigInt>(
      g, limits, "strict_chromatic", [&](const std::vector<std::size_t>& f) {
        for (const auto& e : g.edges()) {
          if (!(f[e.tail] < f[e.head])) return BigInt(0);
        }
        return BigInt(1);
      });
}

BinPoly<BigInt> weak_chromatic(const Digraph& g, const Limits& limits) {
  return sum_over_compositions<BigInt>(
      g, limits, "weak_chromatic", [&](const std::vector<std::size_t>& f) {
        for (const auto& e : g.edges()) {
          if (f[e.tail] > f[e.head]) return BigInt(0);
        }
        return BigInt(1);
      });
}

BinPoly<MPoly> b_polynomial(const Digraph& g, const Limits& limits) {
  return sum_over_compositions<MPoly>(
      g, limits, "b_polynomial", [&](const std::vector<std::size_t>& f) {
        std::uint32_t ascents = 0;
        std::uint32_t descents = 0;
        for (const auto& e : g.edges()) {
          if (f[e.head] > f[e.tail]) ++ascents;
          if (f[e.head] < f[e.tail]) ++descents;
        }
        return MPoly::monomial({ascents, descents, 0}, 1);
      });
}

BinPoly<MPoly> edge_invariant(const Digraph& g, const Limits& limits) {
  return aa_poly(g, edge_character(), limits);
}

namespace {

bool satisfies(EdgeRule rule, std::uint64_t tail, std::uint64_t head) {
  switch (rule) {
    case EdgeRule::strictly_increasing:
      return tail < head;
    case EdgeRule::weakly_increasing:
      return tail <= head;
    case EdgeRule::strictly_decreasing:
      return tail > head;
    case EdgeRule::weakly_decreasing:
      return tail >= head;
  }
  return false;
}

// Counts maps with f[0] restricted to first_values (all other coordinates
// free), by odometer over coordinates 1..m-1.
std::uint64_t count_slice(const Digraph& g, std::uint64_t n, EdgeRule rule,
                          const std::vector<std::uint64_t>& first_values) {
  const std::size_t m = g.vertex_count();
  std::uint64_t count = 0;
  std::vector<std::uint64_t> f(m, 0);
  for (const std::uint64_t v0 : first_values) {
    std::fill(f.begin(), f.end(), 0);
    f[0] = v0;
    while (true) {
      bool ok = true;
      for (const auto& e : g.edges()) {
        if (!satisfies(rule, f[e.tail], f[e.head])) {
          ok = false;
          break;
        }
      }
      count += ok;
      std::size_t pos = 1;
      while (pos < m && ++f[pos] == n) f[pos++] = 0;
      if (pos == m) break;
    }
  }
  return count;
}

}  // namespace

BigInt count_colorings(const Digraph& g, std::uint64_t n, EdgeRule rule,
                       const Limits& limits) {
  const std::size_t m = g.vertex_count();
  if (m == 0) return 1;
  if (n == 0) return 0;
  require_work_bound(n, m, limits, "count_colorings");
  const unsigned workers =
      static_cast<unsigned>(std::max<std::uint64_t>(
          1, std::min<std::uint64_t>(limits.threads, n)));
  std::vector<std::vector<std::uint64_t>> slices(workers);
  for (std::uint64_t v = 0; v < n; ++v) slices[v % workers].push_back(v);
  std::vector<std::uint64_t> partial(workers, 0);
  if (workers == 1) {
    partial[0] = count_slice(g, n, rule, slices[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { partial[w] = count_slice(g, n, rule, slices[w]); });
    }
    for (auto& t : pool) t.join();
  }
  BigInt total = 0;
  for (const auto p : partial) total += p;
  return total;
}

ReciprocityVerdict check_reciprocity(const Digraph& g, std::uint64_t n,
                                     const Limits& limits) {
  ReciprocityVerdict v;
  if (!is_acyclic(g)) {
    v.hypothesis_holds = false;
    v.message = "hypothesis violated: graph not acyclic";
    return v;
  }
  const BigInt sign = g.vertex_count() % 2 == 0 ? 1 : -1;
  const BigInt minus_n = -BigInt(n);
  v.aa_side = sign * eval_binpoly(aa_poly(g, basic_character(), limits), minus_n);
  v.strict_side = sign * eval_binpoly(strict_chromatic(g, limits), minus_n);
  v.weak_side = brute_weak(g, n, limits);
  v.holds = v.aa_side == v.weak_side && v.strict_side == v.weak_side;
  v.message = v.holds ? "holds" : "MISMATCH";
  return v;
}

EdgeReciprocityVerdict check_edge_reciprocity(const Digraph& g,
                                              std::uint64_t n,
                                              const Limits& limits) {
  EdgeReciprocityVerdict v;
  v.lhs = eval_binpoly(edge_invariant(g, limits), -BigInt(n));
  v.rhs = eval_binpoly(aa_poly_of_sum(antipode(g, limits), edge_character(),
                                      limits),
                       BigInt(n));
  v.holds = v.lhs == v.rhs;
  return v;
}

}  // namespace hopfdg
