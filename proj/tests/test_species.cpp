#include <algorithm>
#include <set>

#include "doctest.h"
#include "hopfdg/binpoly.hpp"
#include "hopfdg/error.hpp"
#include "hopfdg/species.hpp"
#include "support.hpp"

using namespace hopfdg;
using hopfdg::testing::count_surjections;

namespace {

std::vector<Composition> collect(CompositionStream stream) {
  std::vector<Composition> out;
  while (auto c = stream.next()) out.push_back(*c);
  return out;
}

}  // namespace

TEST_CASE("LabelSet sorts and rejects duplicates or empty labels") {
  const LabelSet s({"c", "a", "b"});
  CHECK(s.labels() == std::vector<Label>{"a", "b", "c"});
  CHECK(s.at("b") == 1);
  CHECK_FALSE(s.index_of("z"));
  CHECK_THROWS_AS(LabelSet({"a", "a"}), DomainError);
  CHECK_THROWS_AS(LabelSet({""}), DomainError);
  CHECK_THROWS_AS(s.at("z"), DomainError);
  CHECK(s.subset(0b101).labels() == std::vector<Label>{"a", "c"});
  CHECK_THROWS_AS(s.subset(0b1000), DomainError);
}

TEST_CASE("disjoint_union and transport") {
  const LabelSet a({"x", "z"});
  const LabelSet b({"y"});
  const LabelSet u = disjoint_union(a, b);
  CHECK(u.labels() == std::vector<Label>{"x", "y", "z"});
  CHECK(transport(0b10, a, u) == 0b100);
  CHECK_THROWS_AS(disjoint_union(a, a), DisjointnessError);
}

TEST_CASE("compositions of small sets") {
  SUBCASE("singleton, one block") {
    const auto all = collect(enumerate_compositions(LabelSet({"a"}), 1));
    REQUIRE(all.size() == 1);
    CHECK(all[0].blocks == std::vector<Subset>{0b1});
  }
  SUBCASE("two elements, two blocks: both orders") {
    const auto all = collect(enumerate_compositions(LabelSet({"a", "b"}), 2));
    REQUIRE(all.size() == 2);
    CHECK(all[0].blocks == std::vector<Subset>{0b01, 0b10});
    CHECK(all[1].blocks == std::vector<Subset>{0b10, 0b01});
  }
  SUBCASE("three elements, two blocks") {
    // Oracle: surjections 3 -> 2 counted over all 8 maps.
    REQUIRE(count_surjections(3, 2) == 6);
    CHECK(collect(CompositionStream(3, 2)).size() == 6);
  }
  SUBCASE("degenerate block counts give empty streams") {
    CHECK(collect(CompositionStream(3, 0)).empty());
    CHECK(collect(CompositionStream(2, 3)).empty());
    // The empty set has exactly one composition, with no blocks.
    CHECK(collect(CompositionStream(0, 0)).size() == 1);
  }
}

TEST_CASE("composition counts are k! S(n,k) and match brute-force surjections") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const auto expected = factorial(k) * stirling_second(n, k);
      CHECK(expected == count_surjections(n, k));
      std::uint64_t count = 0;
      CompositionStream stream(n, k);
      while (stream.next()) ++count;
      CHECK(BigInt(count) == expected);
    }
  }
}

TEST_CASE("every streamed composition is valid, distinct, and ordered") {
  const LabelSet ground({"a", "b", "c", "d", "e"});
  for (std::size_t k = 1; k <= ground.size(); ++k) {
    std::set<std::vector<Subset>> seen;
    std::vector<std::size_t> previous;
    CompositionStream stream(ground.size(), k);
    while (auto c = stream.next()) {
      CHECK(c->length() == k);
      CHECK(is_composition(*c, ground.full()));
      CHECK(seen.insert(c->blocks).second);
      // Concatenating the blocks and sorting recovers the ground set.
      std::vector<Label> concatenated;
      for (const Subset b : c->blocks) {
        for (const auto& l : ground.labels_of(b)) concatenated.push_back(l);
      }
      std::sort(concatenated.begin(), concatenated.end());
      CHECK(concatenated == ground.labels());
      CHECK(previous < stream.block_indices());
      previous = stream.block_indices();
    }
  }
}

TEST_CASE("subset enumeration") {
  auto count = [](SubsetStream s) {
    std::vector<Subset> out;
    while (auto x = s.next()) out.push_back(*x);
    return out;
  };
  CHECK(count(enumerate_subsets(LabelSet())) == std::vector<Subset>{0});
  CHECK(count(enumerate_subsets(LabelSet({"a"}))) == std::vector<Subset>{0, 1});
  CHECK(count(enumerate_subsets(LabelSet({"0", "1", "2"}))).size() == 8);
  Limits tight;
  tight.max_subset_vertices = 2;
  CHECK_THROWS_AS(enumerate_subsets(LabelSet({"0", "1", "2"}), tight),
                  SizeLimitError);
}
