#pragma once

// Linearized Hopf structure on digraphs: formal sums, the Takeuchi
// antipode, characters and the AA polynomial engine.

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfdg/binpoly.hpp"
#include "hopfdg/digraph.hpp"
#include "hopfdg/limits.hpp"
#include "hopfdg/ring.hpp"

namespace hopfdg {

/// Integer linear combination of digraphs on one vertex set.
class FormalSum {
 public:
  using Terms = std::map<Digraph, BigInt>;

  explicit FormalSum(LabelSet vertex_set = {})
      : vertex_set_(std::move(vertex_set)) {}
  /// 1 * g
  static FormalSum of(const Digraph& g);

  const LabelSet& vertex_set() const noexcept { return vertex_set_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  BigInt coefficient(const Digraph& g) const;

  /// Adds c * g; throws DomainError if g lives on another vertex set.
  void add(const Digraph& g, const BigInt& c);

  FormalSum& operator+=(const FormalSum& other);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) {
    return a += b;
  }
  friend FormalSum operator*(const BigInt& s, const FormalSum& x);
  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  LabelSet vertex_set_;
  Terms terms_;
};

/// Signed list like "-1·[0->1, 0->2] +1·[]" in canonical term order.
std::string to_string(const FormalSum& s);

/// Takeuchi antipode: sum over compositions (S_1..S_k) of I of
/// (-1)^k mu o Delta_{S_1..S_k}(g). The empty graph maps to itself.
FormalSum antipode(const Digraph& g, const Limits& limits = {});
/// Linear extension of the antipode.
FormalSum antipode(const FormalSum& s, const Limits& limits = {});

/// Multiplicative, relabeling-invariant function on digraphs.
template <class Ring>
struct Character {
  std::string name;
  std::function<Ring(const Digraph&)> fn;

  Ring operator()(const Digraph& g) const { return fn(g); }
};

/// 1 on edgeless graphs, 0 otherwise.
BigInt char_basic(const Digraph& g);
/// q^{|E|}.
MPoly char_edge(const Digraph& g);

Character<BigInt> basic_character();
Character<MPoly> edge_character();

namespace detail {

/// Non-empty B subset of `remaining` such that no edge of g enters B from
/// remaining \ B, i.e. the next admissible block after a lower-half prefix.
std::vector<Subset> admissible_blocks(const Digraph& g, Subset remaining);

}  // namespace detail

/// The AA polynomial of g for the character zeta, in the binomial basis:
/// c_k = sum over compositions (T_1..T_k) whose prefixes are lower halves of
/// prod_i zeta(g|_{T_i}).
template <class Ring>
BinPoly<Ring> aa_poly(const Digraph& g, const Character<Ring>& zeta,
                      const Limits& limits = {}) {
  require_composition_bound(g.vertex_count(), limits, "aa_poly");
  const std::size_t n = g.vertex_count();
  // counts[R][k]: weighted number of admissible k-block chains covering the
  // remaining set R. Memoized by R; zeta(g|_B) cached by B.
  std::unordered_map<Subset, std::vector<Ring>> memo;
  std::unordered_map<Subset, Ring> block_value;
  std::function<const std::vector<Ring>&(Subset)> chains =
      [&](Subset remaining) -> const std::vector<Ring>& {
    if (auto it = memo.find(remaining); it != memo.end()) return it->second;
    std::vector<Ring> acc(n + 1, Ring(0));
    if (remaining == 0) {
      acc[0] = Ring(1);
    } else {
      for (const Subset block : detail::admissible_blocks(g, remaining)) {
        auto bv = block_value.find(block);
        if (bv == block_value.end()) {
          bv = block_value.emplace(block, zeta(restrict(g, block))).first;
        }
        // Copied: the recursive call below may rehash block_value.
        const Ring value = bv->second;
        if (ring_is_zero(value)) continue;
        const auto& rest = chains(remaining & ~block);
        for (std::size_t k = 0; k < n; ++k) {
          if (!ring_is_zero(rest[k])) acc[k + 1] += value * rest[k];
        }
      }
    }
    return memo.emplace(remaining, std::move(acc)).first->second;
  };
  return BinPoly<Ring>(chains(g.vertices().full()));
}

template <class Ring>
Ring char_of_sum(const FormalSum& s, const Character<Ring>& zeta) {
  Ring total(0);
  for (const auto& [g, c] : s.terms()) total += Ring(c) * zeta(g);
  return total;
}

template <class Ring>
BinPoly<Ring> aa_poly_of_sum(const FormalSum& s, const Character<Ring>& zeta,
                             const Limits& limits = {}) {
  BinPoly<Ring> total;
  for (const auto& [g, c] : s.terms()) {
    total += Ring(c) * aa_poly(g, zeta, limits);
  }
  return total;
}

}  // namespace hopfdg
