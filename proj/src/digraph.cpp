#include "hopfdg/digraph.hpp"

#include <algorithm>
#include <set>

#include "hopfdg/error.hpp"

namespace hopfdg {

Digraph::Digraph(LabelSet vertices,
                 const std::vector<std::pair<Label, Label>>& edges)
    : vertices_(std::move(vertices)) {
  edges_.reserve(edges.size());
  for (const auto& [tail, head] : edges) {
    const auto t = vertices_.index_of(tail);
    const auto h = vertices_.index_of(head);
    if (!t || !h) {
      throw GraphError("edge " + tail + " -> " + head +
                       " has an endpoint outside the vertex set");
    }
    edges_.push_back({*t, *h});
  }
  index_edges();
}

Digraph::Digraph(LabelSet vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.tail >= vertices_.size() || e.head >= vertices_.size()) {
      throw GraphError("edge endpoint index out of range");
    }
  }
  index_edges();
}

Digraph Digraph::edgeless(LabelSet vertices) {
  return Digraph(std::move(vertices), std::vector<Edge>{});
}

void Digraph::index_edges() {
  std::sort(edges_.begin(), edges_.end());
  out_.assign(vertices_.size(), 0);
  in_.assign(vertices_.size(), 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.tail == e.head) {
      throw GraphError("self-loop at vertex " + vertices_[e.tail]);
    }
    if (i > 0 && edges_[i - 1] == e) {
      throw GraphError("parallel edge " + vertices_[e.tail] + " -> " +
                       vertices_[e.head]);
    }
    out_[e.tail] |= Subset{1} << e.head;
    in_[e.head] |= Subset{1} << e.tail;
  }
}

std::vector<std::pair<Label, Label>> Digraph::labeled_edges() const {
  std::vector<std::pair<Label, Label>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) {
    out.emplace_back(vertices_[e.tail], vertices_[e.head]);
  }
  return out;
}

std::string edge_list_string(const Digraph& g) {
  std::string out = "[";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i > 0) out += ", ";
    out += g.vertices()[g.edges()[i].tail] + "->" +
           g.vertices()[g.edges()[i].head];
  }
  return out + "]";
}

Digraph relabel(const Digraph& g, const std::map<Label, Label>& sigma) {
  std::vector<Label> image;
  image.reserve(g.vertex_count());
  std::set<Label> seen;
  for (const auto& v : g.vertices()) {
    const auto it = sigma.find(v);
    if (it == sigma.end()) {
      throw BijectionError("relabeling is not defined on vertex '" + v + "'");
    }
    if (!seen.insert(it->second).second) {
      throw BijectionError("relabeling is not injective at '" + it->second +
                           "'");
    }
    image.push_back(it->second);
  }
  std::vector<std::pair<Label, Label>> edges;
  for (const auto& [tail, head] : g.labeled_edges()) {
    edges.emplace_back(sigma.at(tail), sigma.at(head));
  }
  try {
    return Digraph(LabelSet(std::move(image)), edges);
  } catch (const DomainError& e) {
    throw BijectionError(e.what());
  }
}

Digraph restrict(const Digraph& g, Subset s) {
  g.vertices().require_subset(s, "restrict");
  // New index of old vertex i is the number of members of s below i.
  std::vector<std::size_t> position(g.vertex_count(), 0);
  std::size_t next = 0;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (s >> i & 1) position[i] = next++;
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if ((s >> e.tail & 1) && (s >> e.head & 1)) {
      edges.push_back({position[e.tail], position[e.head]});
    }
  }
  return Digraph(g.vertices().subset(s), std::move(edges));
}

Digraph product(const Digraph& g1, const Digraph& g2) {
  LabelSet all = disjoint_union(g1.vertices(), g2.vertices());
  std::vector<std::pair<Label, Label>> edges = g1.labeled_edges();
  for (auto& e : g2.labeled_edges()) edges.push_back(std::move(e));
  return Digraph(std::move(all), edges);
}

bool is_lower_half(const Digraph& g, Subset s) {
  g.vertices().require_subset(s, "is_lower_half");
  const Subset outside = g.vertices().full() & ~s;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if ((s >> v & 1) && (g.in_neighbours(v) & outside) != 0) return false;
  }
  return true;
}

std::vector<Subset> lower_halves(const Digraph& g, const Limits& limits) {
  std::vector<Subset> out;
  auto stream = enumerate_subsets(g.vertices(), limits);
  while (auto s = stream.next()) {
    if (is_lower_half(g, *s)) out.push_back(*s);
  }
  return out;
}

std::optional<std::pair<Digraph, Digraph>> coproduct(const Digraph& g,
                                                     Subset s) {
  if (!is_lower_half(g, s)) return std::nullopt;
  return std::make_pair(restrict(g, s),
                        restrict(g, g.vertices().full() & ~s));
}

std::optional<Digraph> mu_delta(const Digraph& g, const Composition& c) {
  if (!is_composition(c, g.vertices().full())) {
    throw DomainError("mu_delta: not a composition of the vertex set");
  }
  // Block index per vertex; an edge may not point to an earlier block, and
  // survives only when both ends share a block.
  std::vector<std::size_t> block(g.vertex_count(), 0);
  for (std::size_t b = 0; b < c.blocks.size(); ++b) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (c.blocks[b] >> v & 1) block[v] = b;
    }
  }
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (block[e.head] < block[e.tail]) return std::nullopt;
    if (block[e.head] == block[e.tail]) kept.push_back(e);
  }
  return Digraph(g.vertices(), std::move(kept));
}

bool is_acyclic(const Digraph& g) {
  enum class Mark { white, grey, black };
  std::vector<Mark> mark(g.vertex_count(), Mark::white);
  // Iterative DFS with an explicit stack of (vertex, remaining successors).
  for (std::size_t root = 0; root < g.vertex_count(); ++root) {
    if (mark[root] != Mark::white) continue;
    std::vector<std::pair<std::size_t, Subset>> stack;
    stack.emplace_back(root, g.out_neighbours(root));
    mark[root] = Mark::grey;
    while (!stack.empty()) {
      auto& [v, pending] = stack.back();
      if (pending == 0) {
        mark[v] = Mark::black;
        stack.pop_back();
        continue;
      }
      const auto w = static_cast<std::size_t>(__builtin_ctzll(pending));
      pending &= pending - 1;
      if (mark[w] == Mark::grey) return false;
      if (mark[w] == Mark::white) {
        mark[w] = Mark::grey;
        stack.emplace_back(w, g.out_neighbours(w));
      }
    }
  }
  return true;
}

Digraph reverse(const Digraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back({e.head, e.tail});
  return Digraph(g.vertices(), std::move(edges));
}

}  // namespace hopfdg
