#pragma once

// Shared fixtures and brute-force oracles. The oracles enumerate all k^n maps
// directly and share no code path with the library's composition streams or
// memoized chain recursion.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hopfdg/binpoly.hpp"
#include "hopfdg/digraph.hpp"
#include "hopfdg/hopf.hpp"
#include "hopfdg/random.hpp"

namespace hopfdg::testing {

inline Digraph make_graph(std::vector<Label> vertices,
                          std::vector<std::pair<Label, Label>> edges) {
  return Digraph(LabelSet(std::move(vertices)), edges);
}

/// The three-vertex example graph: transitive tournament 0 -> 1 -> 2, 0 -> 2.
inline Digraph g3() {
  return make_graph({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}});
}

inline Digraph two_cycle() {
  return make_graph({"a", "b"}, {{"a", "b"}, {"b", "a"}});
}

inline Digraph single_edge() { return make_graph({"a", "b"}, {{"a", "b"}}); }

inline Digraph edgeless(std::size_t m) {
  return Digraph::edgeless(numbered_labels(m));
}

inline Subset mask(const Digraph& g, std::vector<Label> labels) {
  return g.vertices().mask_of(labels);
}

/// Calls f(index vector) for every map [n] -> [k], surjective or not.
inline void for_each_map(std::size_t n, std::size_t k,
                         const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k == 0) {
    if (n == 0) f({});
    return;
  }
  std::vector<std::size_t> x(n, 0);
  while (true) {
    f(x);
    std::size_t pos = 0;
    while (pos < n && ++x[pos] == k) x[pos++] = 0;
    if (pos == n) break;
  }
}

inline bool is_surjective(const std::vector<std::size_t>& x, std::size_t k) {
  std::vector<bool> hit(k, false);
  for (auto v : x) hit[v] = true;
  for (bool h : hit) {
    if (!h) return false;
  }
  return true;
}

inline std::uint64_t count_surjections(std::size_t n, std::size_t k) {
  std::uint64_t count = 0;
  for_each_map(n, k, [&](const auto& x) { count += is_surjective(x, k); });
  return count;
}

/// Sums weight(f) over surjections f : I ->> [k], bucketed by k.
template <class Ring>
BinPoly<Ring> brute_binomial_form(
    const Digraph& g,
    const std::function<Ring(const std::vector<std::size_t>&)>& weight) {
  const std::size_t n = g.vertex_count();
  std::vector<Ring> coeffs(n + 1, Ring(0));
  for (std::size_t k = 0; k <= n; ++k) {
    for_each_map(n, k, [&](const auto& f) {
      if (is_surjective(f, k)) coeffs[k] += weight(f);
    });
  }
  return BinPoly<Ring>(std::move(coeffs));
}

/// Takeuchi's sum taken literally: every surjection f : I ->> [k] is a
/// composition; keep it iff no edge points to an earlier block.
inline FormalSum brute_antipode(const Digraph& g) {
  FormalSum out(g.vertices());
  const std::size_t n = g.vertex_count();
  if (n == 0) {
    out.add(g, 1);
    return out;
  }
  for (std::size_t k = 1; k <= n; ++k) {
    for_each_map(n, k, [&](const auto& f) {
      if (!is_surjective(f, k)) return;
      std::vector<Edge> kept;
      for (const auto& e : g.edges()) {
        if (f[e.head] < f[e.tail]) return;
        if (f[e.head] == f[e.tail]) kept.push_back(e);
      }
      out.add(Digraph(g.vertices(), kept), k % 2 == 0 ? 1 : -1);
    });
  }
  return out;
}

/// AA polynomial by the same literal enumeration: c_k sums
/// prod_i zeta(g|_{T_i}) over admissible compositions into k blocks.
template <class Ring>
BinPoly<Ring> brute_aa_poly(const Digraph& g, const Character<Ring>& zeta) {
  return brute_binomial_form<Ring>(g, [&](const std::vector<std::size_t>& f) {
    for (const auto& e : g.edges()) {
      if (f[e.head] < f[e.tail]) return Ring(0);
    }
    std::size_t k = 0;
    for (auto v : f) k = std::max(k, v + 1);
    Ring product(1);
    for (std::size_t b = 0; b < k; ++b) {
      Subset block = 0;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == b) block |= Subset{1} << i;
      }
      product = product * zeta(restrict(g, block));
    }
    return product;
  });
}

/// Lower halves straight from the definition: no edge (u,v) with u outside
/// and v inside.
inline std::vector<Subset> brute_lower_halves(const Digraph& g) {
  std::vector<Subset> out;
  for (Subset s = 0; s <= g.vertices().full(); ++s) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (!(s >> e.tail & 1) && (s >> e.head & 1)) ok = false;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

}  // namespace hopfdg::testing
