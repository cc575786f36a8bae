#pragma once

// Finite label sets and the decompositions every Hopf operation iterates
// over. Subsets are bitmasks relative to a LabelSet's order.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfdg/limits.hpp"

namespace hopfdg {

using Label = std::string;
/// Bit i set iff the i-th label of the ambient LabelSet is a member.
using Subset = std::uint64_t;

inline constexpr std::size_t kMaxLabels = 64;

/// Finite, totally ordered (lexicographically) set of distinct labels.
class LabelSet {
 public:
  LabelSet() = default;
  /// Sorts the labels; throws DomainError on empty or duplicate labels.
  explicit LabelSet(std::vector<Label> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const Label& operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  auto begin() const noexcept { return labels_.begin(); }
  auto end() const noexcept { return labels_.end(); }

  std::optional<std::size_t> index_of(const Label& label) const;
  /// Index of `label`; throws DomainError when absent.
  std::size_t at(const Label& label) const;

  Subset full() const noexcept;
  bool contains(Subset s) const noexcept { return (s & ~full()) == 0; }
  /// Throws DomainError unless s is a subset of this set.
  void require_subset(Subset s, const char* what) const;

  Subset mask_of(const std::vector<Label>& labels) const;
  std::vector<Label> labels_of(Subset s) const;
  /// The labels of s, as a LabelSet of their own.
  LabelSet subset(Subset s) const;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;
  friend auto operator<=>(const LabelSet&, const LabelSet&) = default;

 private:
  std::vector<Label> labels_;
};

/// Union of disjoint label sets; throws DisjointnessError on overlap.
LabelSet disjoint_union(const LabelSet& a, const LabelSet& b);

/// Rewrites a subset of `from` as a subset of `to` (labels must exist there).
Subset transport(Subset s, const LabelSet& from, const LabelSet& to);

/// Image of a subset of `from` under the bijection sigma, as a subset of `to`.
Subset transport(Subset s, const LabelSet& from, const LabelSet& to,
                 const std::map<Label, Label>& sigma);

inline std::size_t popcount(Subset s) noexcept {
  return static_cast<std::size_t>(__builtin_popcountll(s));
}

/// Ordered sequence of non-empty, disjoint blocks covering a ground set.
struct Composition {
  std::vector<Subset> blocks;

  std::size_t length() const noexcept { return blocks.size(); }
  friend bool operator==(const Composition&, const Composition&) = default;
};

bool is_composition(const Composition& c, Subset ground);

/// Stream of all compositions of an n-element set into k blocks.
///
/// The order is lexicographic in the block-index vector (b_0, ..., b_{n-1})
/// where b_i is the block holding element i. Only surjective index vectors
/// are visited; infeasible prefixes are skipped, not filtered.
class CompositionStream {
 public:
  CompositionStream(std::size_t n, std::size_t k);

  std::optional<Composition> next();

  /// Block index of each element in the composition last returned by next().
  const std::vector<std::size_t>& block_indices() const noexcept {
    return index_;
  }

 private:
  bool complete_from(std::size_t pos);
  std::size_t unused_blocks() const;

  std::size_t n_;
  std::size_t k_;
  std::vector<std::size_t> index_;
  std::vector<std::size_t> uses_;
  bool started_ = false;
  bool done_ = false;
};

CompositionStream enumerate_compositions(const LabelSet& ground,
                                         std::size_t k);

/// Stream of all 2^n subsets in increasing bitmask order.
class SubsetStream {
 public:
  explicit SubsetStream(std::size_t n) : full_(n == 64 ? ~Subset{0} : (Subset{1} << n) - 1) {}

  std::optional<Subset> next() {
    if (done_) return std::nullopt;
    const Subset s = current_;
    if (current_ == full_) {
      done_ = true;
    } else {
      ++current_;
    }
    return s;
  }

 private:
  Subset full_;
  Subset current_ = 0;
  bool done_ = false;
};

/// Throws SizeLimitError when |ground| exceeds limits.max_subset_vertices.
SubsetStream enumerate_subsets(const LabelSet& ground,
                               const Limits& limits = {});

/// Calls f(s) for every submask s of `mask`, including 0 and mask itself.
template <class F>
void for_each_submask(Subset mask, F&& f) {
  Subset s = mask;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & mask;
  }
}

}  // namespace hopfdg
