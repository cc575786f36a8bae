#include "hopfdg/random.hpp"

#include <algorithm>

#include "hopfdg/error.hpp"

namespace hopfdg {

LabelSet numbered_labels(std::size_t n) {
  std::vector<Label> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return LabelSet(std::move(labels));
}

namespace {

std::vector<Edge> ordered_pairs(const LabelSet& labels) {
  // Pairs of label indices, ordered lexicographically by (tail, head) label
  // value as integers so that "10" follows "9".
  std::vector<std::size_t> by_number(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    by_number[i] = labels.at(std::to_string(i));
  }
  std::vector<Edge> pairs;
  for (std::size_t u = 0; u < labels.size(); ++u) {
    for (std::size_t v = 0; v < labels.size(); ++v) {
      if (u != v) pairs.push_back({by_number[u], by_number[v]});
    }
  }
  return pairs;
}

}  // namespace

Digraph random_digraph(std::size_t n, unsigned edge_percent, Random& rng) {
  LabelSet labels = numbered_labels(n);
  std::vector<Edge> edges;
  for (const auto& e : ordered_pairs(labels)) {
    if (rng.chance(edge_percent)) edges.push_back(e);
  }
  return Digraph(std::move(labels), std::move(edges));
}

std::uint64_t digraph_count(std::size_t n) {
  const std::size_t pairs = n * (n == 0 ? 0 : n - 1);
  if (pairs >= 64) throw SizeLimitError("digraph_count: too many vertices");
  return std::uint64_t{1} << pairs;
}

Digraph nth_digraph(std::size_t n, std::uint64_t index) {
  LabelSet labels = numbered_labels(n);
  const auto pairs = ordered_pairs(labels);
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    if (index >> j & 1) edges.push_back(pairs[j]);
  }
  return Digraph(std::move(labels), std::move(edges));
}

std::map<Label, Label> random_relabeling(const LabelSet& labels, Random& rng) {
  std::vector<std::size_t> perm(labels.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.below(i)]);
  }
  std::map<Label, Label> sigma;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    sigma.emplace(labels[i], "v" + std::to_string(perm[i]));
  }
  return sigma;
}

}  // namespace hopfdg
