#pragma once

// Seeded, platform-independent sampling for property checks.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hopfdg/digraph.hpp"
#include "hopfdg/ring.hpp"

namespace hopfdg {

/// Draws are taken straight from the mt19937_64 output stream (fully
/// specified by the standard) rather than std distributions, whose results
/// differ between standard libraries.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  /// between(lo, hi) / between(1, max_den)
  Rational fraction(std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
    const std::int64_t num = between(lo, hi);
    return Rational(num, between(1, max_den));
  }
  bool chance(unsigned percent) { return below(100) < percent; }
  Subset subset_of(Subset ground) { return ground & next(); }

 private:
  std::mt19937_64 engine_;
};

/// Labels "0", "1", ..., "n-1".
LabelSet numbered_labels(std::size_t n);

/// Each ordered pair (u, v), u != v, becomes an edge with the given
/// probability (percent). 2-cycles are allowed.
Digraph random_digraph(std::size_t n, unsigned edge_percent, Random& rng);

/// Number of simple digraphs on n labeled vertices: 2^(n(n-1)).
std::uint64_t digraph_count(std::size_t n);

/// The index-th digraph on numbered_labels(n): bit j of index selects the
/// j-th ordered pair in lexicographic order.
Digraph nth_digraph(std::size_t n, std::uint64_t index);

/// A random bijection of g's labels onto fresh labels "v<k>".
std::map<Label, Label> random_relabeling(const LabelSet& labels, Random& rng);

}  // namespace hopfdg
