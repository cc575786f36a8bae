#include "doctest.h"
#include "hopfdg/digraph.hpp"
#include "hopfdg/error.hpp"
#include "hopfdg/random.hpp"
#include "support.hpp"

using namespace hopfdg;
using namespace hopfdg::testing;

TEST_CASE("construction rejects loops, parallel edges and unknown endpoints") {
  CHECK_THROWS_AS(make_graph({"a"}, {{"a", "a"}}), GraphError);
  CHECK_THROWS_AS(make_graph({"a", "b"}, {{"a", "b"}, {"a", "b"}}), GraphError);
  CHECK_THROWS_AS(make_graph({"a"}, {{"a", "b"}}), GraphError);
  CHECK_NOTHROW(two_cycle());
}

TEST_CASE("the example graph is the unique 3-edge digraph with its lower halves") {
  // Lower halves {}, {0}, {0,1}, {0,1,2}; brute force over all 64 digraphs.
  const std::vector<Subset> wanted{0b000, 0b001, 0b011, 0b111};
  std::vector<Digraph> matches;
  for (std::uint64_t i = 0; i < digraph_count(3); ++i) {
    const Digraph g = nth_digraph(3, i);
    if (g.edge_count() == 3 && brute_lower_halves(g) == wanted) {
      matches.push_back(g);
    }
  }
  REQUIRE(matches.size() == 1);
  CHECK(matches[0] == g3());
}

TEST_CASE("relabel") {
  const Digraph g = make_graph({"0", "1"}, {{"0", "1"}});
  CHECK(relabel(g, {{"0", "0"}, {"1", "1"}}) == g);
  const Digraph moved = relabel(g, {{"0", "a"}, {"1", "b"}});
  CHECK(moved == make_graph({"a", "b"}, {{"a", "b"}}));
  const std::map<Label, Label> sigma{{"0", "x"}, {"1", "y"}};
  const std::map<Label, Label> tau{{"x", "q"}, {"y", "p"}};
  CHECK(relabel(relabel(g, sigma), tau) ==
        relabel(g, {{"0", "q"}, {"1", "p"}}));
  CHECK_THROWS_AS(relabel(g, {{"0", "a"}}), BijectionError);
  CHECK_THROWS_AS(relabel(g, {{"0", "a"}, {"1", "a"}}), BijectionError);
}

TEST_CASE("restrict") {
  const Digraph g = g3();
  CHECK(restrict(g, mask(g, {"0", "1"})) == make_graph({"0", "1"}, {{"0", "1"}}));
  CHECK(restrict(g, g.vertices().full()) == g);
  CHECK(restrict(g, 0) == Digraph());
  CHECK_THROWS_AS(restrict(g, 0b1000), DomainError);
}

TEST_CASE("product") {
  const Digraph a = Digraph::edgeless(LabelSet({"a"}));
  const Digraph b = Digraph::edgeless(LabelSet({"b"}));
  CHECK(product(a, b) == Digraph::edgeless(LabelSet({"a", "b"})));
  CHECK(product(g3(), Digraph()) == g3());
  const Digraph e = make_graph({"x", "y"}, {{"y", "x"}});
  CHECK(product(g3(), e).edge_count() == 4);
  CHECK_THROWS_AS(product(g3(), g3()), DisjointnessError);
}

TEST_CASE("lower halves") {
  const Digraph g = g3();
  CHECK(is_lower_half(g, mask(g, {"0", "1"})));
  CHECK_FALSE(is_lower_half(g, mask(g, {"1"})));
  CHECK(is_lower_half(g, 0));
  CHECK(is_lower_half(g, g.vertices().full()));
  CHECK(lower_halves(g) == std::vector<Subset>{0b000, 0b001, 0b011, 0b111});
  CHECK(lower_halves(edgeless(4)).size() == 16);
  // Oracle: brute force over the 4 subsets of {a,b}.
  CHECK(brute_lower_halves(two_cycle()) == std::vector<Subset>{0b00, 0b11});
  CHECK(lower_halves(two_cycle()) == std::vector<Subset>{0b00, 0b11});
  CHECK_THROWS_AS(is_lower_half(g, 0b1000), DomainError);
}

TEST_CASE("coproduct") {
  const Digraph g = g3();
  const auto split = coproduct(g, mask(g, {"0", "1"}));
  REQUIRE(split);
  CHECK(split->first == make_graph({"0", "1"}, {{"0", "1"}}));
  CHECK(split->second == Digraph::edgeless(LabelSet({"2"})));
  CHECK_FALSE(coproduct(g, mask(g, {"1", "2"})));
  const auto counit = coproduct(g, 0);
  REQUIRE(counit);
  CHECK(counit->first == Digraph());
  CHECK(counit->second == g);
}

TEST_CASE("mu_delta along compositions") {
  const Digraph g = g3();
  const Subset v0 = 0b001, v1 = 0b010, v2 = 0b100;
  CHECK(mu_delta(g, {{v0, v1, v2}}) == Digraph::edgeless(g.vertices()));
  CHECK(mu_delta(g, {{v0 | v1, v2}}) ==
        make_graph({"0", "1", "2"}, {{"0", "1"}}));
  CHECK_FALSE(mu_delta(g, {{v1, v0 | v2}}));
  CHECK_THROWS_AS(mu_delta(g, {{v0, v1}}), DomainError);
}

TEST_CASE("lower halves are closed under union and intersection") {
  Random rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph g = random_digraph(1 + rng.below(6), 30, rng);
    const auto halves = lower_halves(g);
    CHECK(halves == brute_lower_halves(g));
    for (const Subset a : halves) {
      for (const Subset b : halves) {
        CHECK(is_lower_half(g, a | b));
        CHECK(is_lower_half(g, a & b));
      }
    }
  }
}

TEST_CASE("mu_delta agrees with iterated binary coproducts") {
  Random rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    const Digraph g = random_digraph(n, 35, rng);
    for (std::size_t k = 1; k <= n; ++k) {
      CompositionStream stream(n, k);
      while (auto c = stream.next()) {
        // Split off one block at a time from what remains.
        std::optional<Digraph> rest = g;
        std::vector<Digraph> pieces;
        Subset consumed = 0;
        bool prefixes_ok = true;
        for (const Subset block : c->blocks) {
          consumed |= block;
          prefixes_ok = prefixes_ok && is_lower_half(g, consumed);
          if (!rest) continue;
          const auto split =
              coproduct(*rest, transport(block, g.vertices(), rest->vertices()));
          if (!split) {
            rest.reset();
            continue;
          }
          pieces.push_back(split->first);
          rest = split->second;
        }
        const auto direct = mu_delta(g, *c);
        CHECK(direct.has_value() == prefixes_ok);
        CHECK(direct.has_value() == rest.has_value());
        if (direct && rest) {
          Digraph joined;
          for (const auto& p : pieces) joined = product(joined, p);
          CHECK(*direct == joined);
        }
      }
    }
  }
}

TEST_CASE("relabeling commutes with restrict, product and coproduct") {
  Random rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Digraph g = random_digraph(1 + rng.below(6), 40, rng);
    const auto sigma = random_relabeling(g.vertices(), rng);
    const Digraph moved = relabel(g, sigma);
    const Subset s = rng.subset_of(g.vertices().full());
    const Subset moved_s = transport(s, g.vertices(), moved.vertices(), sigma);
    CHECK(restrict(moved, moved_s) == relabel(restrict(g, s), sigma));
    const auto split = coproduct(g, s);
    const auto moved_split = coproduct(moved, moved_s);
    REQUIRE(split.has_value() == moved_split.has_value());
    if (split) {
      CHECK(moved_split->first == relabel(split->first, sigma));
      CHECK(moved_split->second == relabel(split->second, sigma));
    }
    const Digraph g1 = restrict(g, s);
    const Digraph g2 = restrict(g, g.vertices().full() & ~s);
    CHECK(relabel(product(g1, g2), sigma) ==
          product(relabel(g1, sigma), relabel(g2, sigma)));
  }
}

TEST_CASE("acyclicity and reversal") {
  CHECK(is_acyclic(g3()));
  CHECK(is_acyclic(Digraph()));
  CHECK_FALSE(is_acyclic(two_cycle()));
  CHECK_FALSE(is_acyclic(make_graph({"a", "b", "c"},
                                    {{"a", "b"}, {"b", "c"}, {"c", "a"}})));
  CHECK(reverse(reverse(g3())) == g3());
  CHECK(reverse(single_edge()) == make_graph({"a", "b"}, {{"b", "a"}}));
}
