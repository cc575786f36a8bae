#pragma once

// Base polytopes of extended submodular functions, the graph cone C(g), and
// their equivalence decided by exact max-flow; plus the lattice-point and
// generic-direction counters tied to the graph cone.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfdg/digraph.hpp"
#include "hopfdg/limits.hpp"
#include "hopfdg/ring.hpp"
#include "hopfdg/subfun.hpp"

namespace hopfdg {

/// A point of Q^I, coordinates in the ground set's label order.
struct RationalVec {
  LabelSet ground;
  std::vector<Rational> coords;

  RationalVec() = default;
  /// Throws DomainError if the sizes disagree.
  RationalVec(LabelSet ground_set, std::vector<Rational> values);
  static RationalVec zero(const LabelSet& ground_set);

  /// x(A) = sum of coordinates over A.
  Rational sum(Subset a) const;
  Rational total() const { return sum(ground.full()); }

  friend bool operator==(const RationalVec&, const RationalVec&) = default;
};

std::string to_string(const RationalVec& x);

/// x(I) = z(I) and x(A) <= z(A) for every A with finite z(A).
bool base_member(const ExtBool& z, const RationalVec& x,
                 const Limits& limits = {});

/// e_head - e_tail for each edge, in the graph's edge order.
std::vector<RationalVec> cone_generators(const Digraph& g);

/// Every generator of C(g) satisfies 1_S . v <= 0, i.e. the cone is
/// bounded above in the direction of 1_S.
bool cone_bounded_along(const Digraph& g, Subset s);

struct Arc {
  std::size_t tail;
  std::size_t head;
  /// Non-negative rational or infinity.
  ExtValue capacity;
};

/// Capacitated network with a distinguished source and sink.
class FlowNetwork {
 public:
  FlowNetwork(std::size_t node_count, std::size_t source, std::size_t sink);

  /// Throws PreconditionError on self-loops, negative capacities, arcs into
  /// the source or out of the sink.
  std::size_t add_arc(std::size_t tail, std::size_t head, ExtValue capacity);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t source() const noexcept { return source_; }
  std::size_t sink() const noexcept { return sink_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

 private:
  std::size_t node_count_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<Arc> arcs_;
};

struct FlowResult {
  Rational value;
  /// Flow on each arc, indexed like FlowNetwork::arcs().
  std::vector<Rational> flow;
  /// Min-cut certificate: nodes reachable from the source in the residual
  /// network. The source is always in it, the sink never.
  std::vector<bool> source_side;
};

/// Exact maximum flow by shortest augmenting paths on integers obtained by
/// clearing denominators. Infinite capacities are replaced by one plus the
/// sum of all finite capacities. Throws UnboundedFlowError if the sink is
/// reachable from the source through infinite arcs alone.
FlowResult max_flow(const FlowNetwork& net);

struct FlowAudit {
  bool capacities_ok = false;
  bool conservation_ok = false;
  bool value_ok = false;
  /// Certificate partition separates source from sink and its crossing
  /// capacity (from the original capacities) equals the flow value.
  bool cut_ok = false;
  Rational cut_capacity;

  bool passed() const noexcept {
    return capacities_ok && conservation_ok && value_ok && cut_ok;
  }
};

/// Independent verification of a flow and its min-cut certificate.
FlowAudit audit_flow(const FlowNetwork& net, const FlowResult& result);

/// Auxiliary network: vertices of g, then alpha = |I|, omega = |I| + 1.
/// Arcs 0..|E|-1 are g's edges (infinite capacity) in edge order; then
/// alpha -> i with capacity -x_i for x_i < 0 and i -> omega with capacity
/// x_i for x_i > 0. Throws PreconditionError unless x(I) = 0.
FlowNetwork build_flow_network(const Digraph& g, const RationalVec& x);

/// Non-negative weight per edge of g (in edge order).
using EdgeWeights = std::vector<Rational>;

struct ConeDecision {
  bool member = false;
  /// Sum of positive coordinates; the flow value needed for membership.
  Rational required;
  /// Present iff x(I) = 0 and the flow problem was run.
  std::optional<FlowResult> flow;
  std::optional<FlowAudit> audit;
  std::optional<EdgeWeights> witness;
};

/// Decides x in C(g) by max-flow. On membership the witness is checked to
/// reconstruct x exactly before returning.
ConeDecision decide_cone_membership(const Digraph& g, const RationalVec& x);

/// Witness weights when x lies in C(g), nullopt otherwise.
std::optional<EdgeWeights> cone_member(const Digraph& g, const RationalVec& x);

/// sum_e lambda_e (e_head - e_tail)
RationalVec combine_generators(const Digraph& g, const EdgeWeights& lambda);

struct Theorem1Report {
  std::size_t samples = 0;
  std::size_t members = 0;
  std::size_t mismatches = 0;
  std::size_t flows_certified = 0;
  std::size_t flow_certificate_failures = 0;
  std::size_t witnesses_verified = 0;
  std::optional<RationalVec> counterexample;

  bool passed() const noexcept {
    return mismatches == 0 && flow_certificate_failures == 0;
  }
};

/// Compares base_member(low(g), x) against cone_member(g, x) on seeded
/// samples: a third conic combinations of generators, a third perturbed
/// members, a third unconstrained sum-zero vectors.
Theorem1Report check_theorem1(const Digraph& g, std::size_t samples,
                              std::uint64_t seed, const Limits& limits = {});

/// #{y : I -> [n] | y(head) < y(tail) for every edge}.
BigInt generic_count(const Digraph& g, std::uint64_t n,
                     const Limits& limits = {});

/// #{y : I -> [n] | y(head) <= y(tail) for every edge}, each such y having a
/// single maximal vertex (the apex). Throws HypothesisError for cyclic g.
BigInt vertex_sum_count(const Digraph& g, std::uint64_t n,
                        const Limits& limits = {});

/// Lattice points of (n+1) * interior(Delta_g) when `interior`, otherwise of
/// (n-1) * Delta_g, where Delta_g = {x in [0,1]^I | x_u <= x_v per edge}.
BigInt ascent_lattice_count(const Digraph& g, std::uint64_t n, bool interior,
                            const Limits& limits = {});

}  // namespace hopfdg
