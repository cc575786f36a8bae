#pragma once

// Simple directed graphs on labeled vertex sets, with the set-level Hopf
// operations: relabeling, restriction, disjoint union and lower-half splits.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfdg/limits.hpp"
#include "hopfdg/species.hpp"

namespace hopfdg {

/// Directed edge between vertex indices of the owning graph.
struct Edge {
  std::size_t tail;
  std::size_t head;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A digraph without self-loops or parallel edges. Two digraphs are equal
/// iff they have the same vertex labels and the same edge set; the edge list
/// is kept sorted, which makes that structural comparison canonical.
class Digraph {
 public:
  /// The empty graph on the empty vertex set.
  Digraph() = default;
  /// Throws GraphError on self-loops, repeated edges or unknown endpoints.
  Digraph(LabelSet vertices,
          const std::vector<std::pair<Label, Label>>& edges);
  Digraph(LabelSet vertices, std::vector<Edge> edges);

  static Digraph edgeless(LabelSet vertices);

  const LabelSet& vertices() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Heads of edges leaving vertex i.
  Subset out_neighbours(std::size_t i) const { return out_[i]; }
  /// Tails of edges entering vertex i.
  Subset in_neighbours(std::size_t i) const { return in_[i]; }
  bool has_edge(std::size_t tail, std::size_t head) const {
    return (out_[tail] >> head & 1) != 0;
  }

  std::vector<std::pair<Label, Label>> labeled_edges() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }
  friend auto operator<=>(const Digraph& a, const Digraph& b) {
    if (auto c = a.vertices_ <=> b.vertices_; c != 0) return c;
    return a.edges_ <=> b.edges_;
  }

 private:
  void index_edges();

  LabelSet vertices_;
  std::vector<Edge> edges_;
  std::vector<Subset> out_;
  std::vector<Subset> in_;
};

/// "[0->1, 1->2]"; "[]" when edgeless.
std::string edge_list_string(const Digraph& g);

/// Transports g along `sigma`, which must be a bijection from g's vertices.
Digraph relabel(const Digraph& g, const std::map<Label, Label>& sigma);

/// Induced subgraph on s.
Digraph restrict(const Digraph& g, Subset s);

/// Disjoint union; throws DisjointnessError if the vertex sets overlap.
Digraph product(const Digraph& g1, const Digraph& g2);

/// No edge enters s from its complement.
bool is_lower_half(const Digraph& g, Subset s);

/// All lower halves in increasing bitmask order; always contains 0 and full.
std::vector<Subset> lower_halves(const Digraph& g, const Limits& limits = {});

/// (g|_S, g|_T) when s is a lower half; nullopt stands for the zero tensor.
std::optional<std::pair<Digraph, Digraph>> coproduct(const Digraph& g,
                                                     Subset s);

/// mu o Delta along a composition: the graph keeping only edges internal
/// to blocks, or nullopt if some prefix union is not a lower half.
std::optional<Digraph> mu_delta(const Digraph& g, const Composition& c);

bool is_acyclic(const Digraph& g);

/// Same vertices, every edge reversed.
Digraph reverse(const Digraph& g);

}  // namespace hopfdg
