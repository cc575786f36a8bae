#include "hopfdg/species.hpp"

#include <algorithm>

#include "hopfdg/error.hpp"

namespace hopfdg {

LabelSet::LabelSet(std::vector<Label> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw DomainError("empty label");
    if (i > 0 && labels_[i] == labels_[i - 1]) {
      throw DomainError("duplicate label '" + labels_[i] + "'");
    }
  }
  if (labels_.size() > kMaxLabels) {
    throw SizeLimitError("label sets are limited to " +
                         std::to_string(kMaxLabels) + " labels");
  }
}

std::optional<std::size_t> LabelSet::index_of(const Label& label) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t LabelSet::at(const Label& label) const {
  const auto idx = index_of(label);
  if (!idx) throw DomainError("unknown label '" + label + "'");
  return *idx;
}

Subset LabelSet::full() const noexcept {
  return labels_.size() == 64 ? ~Subset{0}
                              : (Subset{1} << labels_.size()) - 1;
}

void LabelSet::require_subset(Subset s, const char* what) const {
  if (!contains(s)) {
    throw DomainError(std::string(what) + ": subset is not contained in the "
                                          "ground set");
  }
}

Subset LabelSet::mask_of(const std::vector<Label>& labels) const {
  Subset s = 0;
  for (const auto& label : labels) s |= Subset{1} << at(label);
  return s;
}

std::vector<Label> LabelSet::labels_of(Subset s) const {
  std::vector<Label> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (s >> i & 1) out.push_back(labels_[i]);
  }
  return out;
}

LabelSet LabelSet::subset(Subset s) const {
  require_subset(s, "LabelSet::subset");
  LabelSet out;
  out.labels_ = labels_of(s);
  return out;
}

LabelSet disjoint_union(const LabelSet& a, const LabelSet& b) {
  std::vector<Label> all = a.labels();
  for (const auto& label : b) {
    if (a.index_of(label)) {
      throw DisjointnessError("label '" + label + "' occurs in both sets");
    }
    all.push_back(label);
  }
  return LabelSet(std::move(all));
}

Subset transport(Subset s, const LabelSet& from, const LabelSet& to) {
  Subset out = 0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (s >> i & 1) out |= Subset{1} << to.at(from[i]);
  }
  return out;
}

Subset transport(Subset s, const LabelSet& from, const LabelSet& to,
                 const std::map<Label, Label>& sigma) {
  Subset out = 0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (s >> i & 1) out |= Subset{1} << to.at(sigma.at(from[i]));
  }
  return out;
}

bool is_composition(const Composition& c, Subset ground) {
  Subset seen = 0;
  for (const Subset block : c.blocks) {
    if (block == 0 || (block & seen) != 0) return false;
    seen |= block;
  }
  return seen == ground;
}

CompositionStream::CompositionStream(std::size_t n, std::size_t k)
    : n_(n), k_(k), index_(n, 0), uses_(k, 0) {
  // No surjection exists unless 1 <= k <= n, except the empty composition
  // of the empty set (k = 0, n = 0).
  if (k > n || (k == 0 && n != 0)) done_ = true;
}

std::size_t CompositionStream::unused_blocks() const {
  std::size_t missing = 0;
  for (std::size_t b = 0; b < k_; ++b) missing += uses_[b] == 0;
  return missing;
}

bool CompositionStream::complete_from(std::size_t pos) {
  for (std::size_t i = pos; i < n_; ++i) {
    const std::size_t remaining_after = n_ - i - 1;
    bool placed = false;
    for (std::size_t b = 0; b < k_; ++b) {
      ++uses_[b];
      if (unused_blocks() <= remaining_after) {
        index_[i] = b;
        placed = true;
        break;
      }
      --uses_[b];
    }
    if (!placed) return false;
  }
  return true;
}

std::optional<Composition> CompositionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!complete_from(0)) {
      done_ = true;
      return std::nullopt;
    }
  } else {
    // Find the rightmost position that can be bumped to a larger block index
    // while keeping a surjective completion possible.
    bool advanced = false;
    for (std::size_t pos = n_; pos-- > 0;) {
      --uses_[index_[pos]];
      for (std::size_t b = index_[pos] + 1; b < k_; ++b) {
        ++uses_[b];
        if (unused_blocks() <= n_ - pos - 1) {
          index_[pos] = b;
          advanced = complete_from(pos + 1);
          break;
        }
        --uses_[b];
      }
      if (advanced) break;
    }
    if (!advanced) {
      done_ = true;
      return std::nullopt;
    }
  }
  Composition c;
  c.blocks.assign(k_, 0);
  for (std::size_t i = 0; i < n_; ++i) c.blocks[index_[i]] |= Subset{1} << i;
  return c;
}

CompositionStream enumerate_compositions(const LabelSet& ground,
                                         std::size_t k) {
  return CompositionStream(ground.size(), k);
}

SubsetStream enumerate_subsets(const LabelSet& ground, const Limits& limits) {
  require_subset_bound(ground.size(), limits, "enumerate_subsets");
  return SubsetStream(ground.size());
}

}  // namespace hopfdg
