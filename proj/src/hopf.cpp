#include "hopfdg/hopf.hpp"

#include "hopfdg/error.hpp"

namespace hopfdg {

FormalSum FormalSum::of(const Digraph& g) {
  FormalSum s(g.vertices());
  s.add(g, 1);
  return s;
}

BigInt FormalSum::coefficient(const Digraph& g) const {
  const auto it = terms_.find(g);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void FormalSum::add(const Digraph& g, const BigInt& c) {
  if (g.vertices() != vertex_set_) {
    throw DomainError("FormalSum::add: graph has a different vertex set");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  for (const auto& [g, c] : other.terms_) add(g, c);
  return *this;
}

FormalSum operator*(const BigInt& s, const FormalSum& x) {
  FormalSum out(x.vertex_set_);
  for (const auto& [g, c] : x.terms_) out.add(g, s * c);
  return out;
}

std::string to_string(const FormalSum& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : s.terms()) {
    if (!out.empty()) out += " ";
    out += (c > 0 ? "+" : "") + c.str() + "\xC2\xB7" + edge_list_string(g);
  }
  return out;
}

namespace detail {

std::vector<Subset> admissible_blocks(const Digraph& g, Subset remaining) {
  std::vector<Subset> out;
  for_each_submask(remaining, [&](Subset block) {
    if (block == 0) return;
    const Subset rest = remaining & ~block;
    for (Subset b = block; b != 0; b &= b - 1) {
      const auto v = static_cast<std::size_t>(__builtin_ctzll(b));
      if ((g.in_neighbours(v) & rest) != 0) return;
    }
    out.push_back(block);
  });
  return out;
}

}  // namespace detail

namespace {

// Edge sets of g as bit vectors over g's edge indices.
using EdgeSet = std::vector<std::uint64_t>;
using EdgeSetSum = std::map<EdgeSet, BigInt>;

EdgeSet internal_edges(const Digraph& g, Subset block) {
  EdgeSet set((g.edge_count() + 63) / 64, 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    if ((block >> e.tail & 1) && (block >> e.head & 1)) {
      set[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  return set;
}

}  // namespace

FormalSum antipode(const Digraph& g, const Limits& limits) {
  require_composition_bound(g.vertex_count(), limits, "antipode");
  FormalSum result(g.vertices());
  if (g.vertex_count() == 0) {
    result.add(g, 1);
    return result;
  }
  // sums[R]: signed sum over admissible chains covering R of the union of
  // edge sets internal to the chain's blocks.
  std::unordered_map<Subset, EdgeSetSum> memo;
  std::function<const EdgeSetSum&(Subset)> chains =
      [&](Subset remaining) -> const EdgeSetSum& {
    if (auto it = memo.find(remaining); it != memo.end()) return it->second;
    EdgeSetSum acc;
    if (remaining == 0) {
      acc.emplace(EdgeSet((g.edge_count() + 63) / 64, 0), 1);
    } else {
      for (const Subset block : detail::admissible_blocks(g, remaining)) {
        const EdgeSet inside = internal_edges(g, block);
        for (const auto& [rest, c] : chains(remaining & ~block)) {
          EdgeSet merged = rest;
          for (std::size_t w = 0; w < merged.size(); ++w) merged[w] |= inside[w];
          auto [it, inserted] = acc.try_emplace(std::move(merged), -c);
          if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) acc.erase(it);
          }
        }
      }
    }
    return memo.emplace(remaining, std::move(acc)).first->second;
  };
  for (const auto& [set, c] : chains(g.vertices().full())) {
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      if (set[i / 64] >> (i % 64) & 1) kept.push_back(g.edges()[i]);
    }
    result.add(Digraph(g.vertices(), std::move(kept)), c);
  }
  return result;
}

FormalSum antipode(const FormalSum& s, const Limits& limits) {
  FormalSum result(s.vertex_set());
  for (const auto& [g, c] : s.terms()) result += c * antipode(g, limits);
  return result;
}

BigInt char_basic(const Digraph& g) { return g.edge_count() == 0 ? 1 : 0; }

MPoly char_edge(const Digraph& g) {
  return MPoly::variable(Var::q, static_cast<std::uint32_t>(g.edge_count()));
}

Character<BigInt> basic_character() { return {"basic", char_basic}; }

Character<MPoly> edge_character() { return {"edge", char_edge}; }

}  // namespace hopfdg
