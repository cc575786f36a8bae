#pragma once

// Named polynomial invariants of digraphs (strict/weak chromatic,
// B-polynomial, edge invariant), brute-force counters and reciprocity checks.

#include <cstdint>
#include <string>

#include "hopfdg/binpoly.hpp"
#include "hopfdg/digraph.hpp"
#include "hopfdg/limits.hpp"
#include "hopfdg/ring.hpp"

namespace hopfdg {

/// Surjective strictly increasing colorings, counted per number of colors:
/// c_k = #{f : I ->> [k] | f(u) < f(v) for every edge (u,v)}.
/// Computed by filtering compositions, independently of aa_poly.
BinPoly<BigInt> strict_chromatic(const Digraph& g, const Limits& limits = {});

/// As strict_chromatic with f(u) <= f(v).
BinPoly<BigInt> weak_chromatic(const Digraph& g, const Limits& limits = {});

/// c_k = sum over surjective f onto [k] of y^{#ascents} z^{#descents}, where
/// an edge (u,v) ascends when f(v) > f(u).
BinPoly<MPoly> b_polynomial(const Digraph& g, const Limits& limits = {});

/// AA polynomial of the edge character q^{|E|}.
BinPoly<MPoly> edge_invariant(const Digraph& g, const Limits& limits = {});

/// Constraint imposed on a map f : I -> [n] along every edge (u,v).
enum class EdgeRule {
  strictly_increasing,  // f(u) <  f(v)
  weakly_increasing,    // f(u) <= f(v)
  strictly_decreasing,  // f(u) >  f(v)
  weakly_decreasing,    // f(u) >= f(v)
};

/// Exhaustive count over all n^|I| maps. Throws SizeLimitError when that
/// exceeds limits.max_work. Splits the scan across limits.threads workers.
BigInt count_colorings(const Digraph& g, std::uint64_t n, EdgeRule rule,
                       const Limits& limits = {});

inline BigInt brute_strict(const Digraph& g, std::uint64_t n,
                           const Limits& limits = {}) {
  return count_colorings(g, n, EdgeRule::strictly_increasing, limits);
}

inline BigInt brute_weak(const Digraph& g, std::uint64_t n,
                         const Limits& limits = {}) {
  return count_colorings(g, n, EdgeRule::weakly_increasing, limits);
}

struct ReciprocityVerdict {
  bool hypothesis_holds = true;
  bool holds = false;
  /// (-1)^|I| * chi_g(-n), chi the AA polynomial of the basic character.
  BigInt aa_side;
  /// (-1)^|I| * strict_chromatic(g)(-n).
  BigInt strict_side;
  /// Weak colorings counted by brute force.
  BigInt weak_side;
  std::string message;
};

/// (-1)^|I| chi_g(-n) = (-1)^|I| pi^>_g(-n) = pi^>=_g(n) for acyclic g.
/// Cyclic input yields hypothesis_holds = false and no assertion.
ReciprocityVerdict check_reciprocity(const Digraph& g, std::uint64_t n,
                                     const Limits& limits = {});

struct EdgeReciprocityVerdict {
  bool holds = false;
  /// psi_g(-n)
  MPoly lhs;
  /// psi of the antipode of g, evaluated at n
  MPoly rhs;
};

EdgeReciprocityVerdict check_edge_reciprocity(const Digraph& g,
                                              std::uint64_t n,
                                              const Limits& limits = {});

}  // namespace hopfdg
