#include "hopfdg/polytope.hpp"

#include <deque>

#include "hopfdg/error.hpp"
#include "hopfdg/invariants.hpp"
#include "hopfdg/random.hpp"

namespace hopfdg {

RationalVec::RationalVec(LabelSet ground_set, std::vector<Rational> values)
    : ground(std::move(ground_set)), coords(std::move(values)) {
  if (coords.size() != ground.size()) {
    throw DomainError("RationalVec: expected " + std::to_string(ground.size()) +
                      " coordinates, got " + std::to_string(coords.size()));
  }
}

RationalVec RationalVec::zero(const LabelSet& ground_set) {
  return RationalVec(ground_set, std::vector<Rational>(ground_set.size(), 0));
}

Rational RationalVec::sum(Subset a) const {
  Rational s = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (a >> i & 1) s += coords[i];
  }
  return s;
}

std::string to_string(const RationalVec& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(x.coords[i]);
  }
  return out + ")";
}

bool base_member(const ExtBool& z, const RationalVec& x,
                 const Limits& limits) {
  if (z.ground() != x.ground) {
    throw DomainError("base_member: vector and function have different grounds");
  }
  require_subset_bound(z.ground().size(), limits, "base_member");
  const ExtValue& top = z(z.ground().full());
  if (top.is_infinite()) {
    throw PreconditionError("base_member: z(I) is infinite");
  }
  if (x.total() != top.value()) return false;
  for (Subset a = 0; a < z.values().size(); ++a) {
    const ExtValue& bound = z(a);
    if (bound.is_finite() && x.sum(a) > bound.value()) return false;
  }
  return true;
}

std::vector<RationalVec> cone_generators(const Digraph& g) {
  std::vector<RationalVec> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    RationalVec v = RationalVec::zero(g.vertices());
    v.coords[e.head] += 1;
    v.coords[e.tail] -= 1;
    out.push_back(std::move(v));
  }
  return out;
}

bool cone_bounded_along(const Digraph& g, Subset s) {
  g.vertices().require_subset(s, "cone_bounded_along");
  for (const auto& v : cone_generators(g)) {
    if (v.sum(s) > 0) return false;
  }
  return true;
}

FlowNetwork::FlowNetwork(std::size_t node_count, std::size_t source,
                         std::size_t sink)
    : node_count_(node_count), source_(source), sink_(sink) {
  if (source >= node_count || sink >= node_count || source == sink) {
    throw PreconditionError("FlowNetwork: invalid source or sink");
  }
}

std::size_t FlowNetwork::add_arc(std::size_t tail, std::size_t head,
                                 ExtValue capacity) {
  if (tail >= node_count_ || head >= node_count_) {
    throw PreconditionError("FlowNetwork: arc endpoint out of range");
  }
  if (tail == head) throw PreconditionError("FlowNetwork: self-loop");
  if (head == source_) {
    throw PreconditionError("FlowNetwork: arc into the source");
  }
  if (tail == sink_) {
    throw PreconditionError("FlowNetwork: arc out of the sink");
  }
  if (capacity.is_finite() && capacity.value() < 0) {
    throw PreconditionError("FlowNetwork: negative capacity");
  }
  arcs_.push_back({tail, head, std::move(capacity)});
  return arcs_.size() - 1;
}

namespace {

// Residual graph over scaled integer capacities. Residual edge 2a is arc a
// forward, 2a+1 is its reverse.
struct Residual {
  std::vector<std::vector<std::size_t>> adjacency;
  std::vector<std::size_t> to;
  std::vector<BigInt> remaining;
};

bool sink_reachable_through_infinite_arcs(const FlowNetwork& net) {
  std::vector<bool> seen(net.node_count(), false);
  std::deque<std::size_t> queue{net.source()};
  seen[net.source()] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (v == net.sink()) return true;
    for (const auto& arc : net.arcs()) {
      if (arc.tail == v && arc.capacity.is_infinite() && !seen[arc.head]) {
        seen[arc.head] = true;
        queue.push_back(arc.head);
      }
    }
  }
  return false;
}

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
  if (sink_reachable_through_infinite_arcs(net)) {
    throw UnboundedFlowError("max_flow: no cut of finite capacity");
  }
  BigInt scale = 1;
  for (const auto& arc : net.arcs()) {
    if (arc.capacity.is_finite()) {
      scale = lcm(scale, denominator(arc.capacity.value()));
    }
  }
  BigInt finite_total = 0;
  std::vector<BigInt> capacity(net.arcs().size());
  for (std::size_t a = 0; a < net.arcs().size(); ++a) {
    const auto& c = net.arcs()[a].capacity;
    if (c.is_finite()) {
      capacity[a] = numerator(c.value()) * (scale / denominator(c.value()));
      finite_total += capacity[a];
    }
  }
  const BigInt surrogate = finite_total + 1;
  Residual res;
  res.adjacency.resize(net.node_count());
  for (std::size_t a = 0; a < net.arcs().size(); ++a) {
    const auto& arc = net.arcs()[a];
    if (arc.capacity.is_infinite()) capacity[a] = surrogate;
    res.adjacency[arc.tail].push_back(res.to.size());
    res.to.push_back(arc.head);
    res.remaining.push_back(capacity[a]);
    res.adjacency[arc.head].push_back(res.to.size());
    res.to.push_back(arc.tail);
    res.remaining.push_back(0);
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  BigInt value = 0;
  std::vector<std::size_t> parent_edge(net.node_count());
  while (true) {
    std::fill(parent_edge.begin(), parent_edge.end(), kNone);
    std::vector<bool> seen(net.node_count(), false);
    std::deque<std::size_t> queue{net.source()};
    seen[net.source()] = true;
    while (!queue.empty() && !seen[net.sink()]) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (const std::size_t r : res.adjacency[v]) {
        const std::size_t w = res.to[r];
        if (!seen[w] && res.remaining[r] > 0) {
          seen[w] = true;
          parent_edge[w] = r;
          queue.push_back(w);
        }
      }
    }
    if (!seen[net.sink()]) break;
    BigInt bottleneck = -1;
    for (std::size_t v = net.sink(); v != net.source(); v = res.to[parent_edge[v] ^ 1]) {
      const BigInt& r = res.remaining[parent_edge[v]];
      if (bottleneck < 0 || r < bottleneck) bottleneck = r;
    }
    for (std::size_t v = net.sink(); v != net.source(); v = res.to[parent_edge[v] ^ 1]) {
      res.remaining[parent_edge[v]] -= bottleneck;
      res.remaining[parent_edge[v] ^ 1] += bottleneck;
    }
    value += bottleneck;
  }

  FlowResult result;
  result.value = Rational(value, scale);
  result.flow.reserve(net.arcs().size());
  for (std::size_t a = 0; a < net.arcs().size(); ++a) {
    result.flow.push_back(Rational(res.remaining[2 * a + 1], scale));
  }
  // Residual reachability after the last (failed) search.
  result.source_side.assign(net.node_count(), false);
  std::deque<std::size_t> queue{net.source()};
  result.source_side[net.source()] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (const std::size_t r : res.adjacency[v]) {
      const std::size_t w = res.to[r];
      if (!result.source_side[w] && res.remaining[r] > 0) {
        result.source_side[w] = true;
        queue.push_back(w);
      }
    }
  }
  return result;
}

FlowAudit audit_flow(const FlowNetwork& net, const FlowResult& result) {
  FlowAudit audit;
  const auto& arcs = net.arcs();
  if (result.flow.size() != arcs.size() ||
      result.source_side.size() != net.node_count()) {
    return audit;
  }
  audit.capacities_ok = true;
  std::vector<Rational> balance(net.node_count(), 0);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const Rational& f = result.flow[a];
    if (f < 0 || (arcs[a].capacity.is_finite() && f > arcs[a].capacity.value())) {
      audit.capacities_ok = false;
    }
    balance[arcs[a].tail] -= f;
    balance[arcs[a].head] += f;
  }
  audit.conservation_ok = true;
  for (std::size_t v = 0; v < net.node_count(); ++v) {
    if (v != net.source() && v != net.sink() && balance[v] != 0) {
      audit.conservation_ok = false;
    }
  }
  audit.value_ok = -balance[net.source()] == result.value &&
                   balance[net.sink()] == result.value;
  audit.cut_ok = result.source_side[net.source()] &&
                 !result.source_side[net.sink()];
  audit.cut_capacity = 0;
  for (const auto& arc : arcs) {
    if (result.source_side[arc.tail] && !result.source_side[arc.head]) {
      if (arc.capacity.is_infinite()) {
        audit.cut_ok = false;
      } else {
        audit.cut_capacity += arc.capacity.value();
      }
    }
  }
  audit.cut_ok = audit.cut_ok && audit.cut_capacity == result.value;
  return audit;
}

FlowNetwork build_flow_network(const Digraph& g, const RationalVec& x) {
  if (x.ground != g.vertices()) {
    throw DomainError("build_flow_network: vector and graph have different "
                      "vertex sets");
  }
  if (x.total() != 0) {
    throw PreconditionError("build_flow_network: coordinates must sum to 0");
  }
  const std::size_t n = g.vertex_count();
  const std::size_t alpha = n;
  const std::size_t omega = n + 1;
  FlowNetwork net(n + 2, alpha, omega);
  for (const auto& e : g.edges()) {
    net.add_arc(e.tail, e.head, ExtValue::infinity());
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coords[i] < 0) net.add_arc(alpha, i, ExtValue(Rational(-x.coords[i])));
    if (x.coords[i] > 0) net.add_arc(i, omega, ExtValue(x.coords[i]));
  }
  return net;
}

RationalVec combine_generators(const Digraph& g, const EdgeWeights& lambda) {
  if (lambda.size() != g.edge_count()) {
    throw DomainError("combine_generators: one weight per edge expected");
  }
  RationalVec x = RationalVec::zero(g.vertices());
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    x.coords[g.edges()[i].head] += lambda[i];
    x.coords[g.edges()[i].tail] -= lambda[i];
  }
  return x;
}

ConeDecision decide_cone_membership(const Digraph& g, const RationalVec& x) {
  if (x.ground != g.vertices()) {
    throw DomainError("cone_member: vector and graph have different vertex "
                      "sets");
  }
  ConeDecision d;
  for (const auto& c : x.coords) {
    if (c > 0) d.required += c;
  }
  if (x.total() != 0) return d;
  const FlowNetwork net = build_flow_network(g, x);
  d.flow = max_flow(net);
  d.audit = audit_flow(net, *d.flow);
  d.member = d.flow->value == d.required;
  if (d.member) {
    EdgeWeights lambda(d.flow->flow.begin(),
                       d.flow->flow.begin() +
                           static_cast<std::ptrdiff_t>(g.edge_count()));
    if (combine_generators(g, lambda) != x) {
      throw std::logic_error("cone_member: flow witness does not reconstruct x");
    }
    d.witness = std::move(lambda);
  }
  return d;
}

std::optional<EdgeWeights> cone_member(const Digraph& g, const RationalVec& x) {
  return decide_cone_membership(g, x).witness;
}

namespace {

RationalVec conic_sample(const Digraph& g, Random& rng) {
  EdgeWeights lambda;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    lambda.push_back(rng.fraction(0, 3, 3));
  }
  return combine_generators(g, lambda);
}

}  // namespace

Theorem1Report check_theorem1(const Digraph& g, std::size_t samples,
                              std::uint64_t seed, const Limits& limits) {
  Theorem1Report report;
  const ExtBool z = low(g, limits);
  const std::size_t n = g.vertex_count();
  Random rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    RationalVec x;
    switch (s % 3) {
      case 0:
        x = conic_sample(g, rng);
        break;
      case 1:
        x = conic_sample(g, rng);
        if (n >= 2) {
          const auto i = static_cast<std::size_t>(rng.below(n));
          auto j = static_cast<std::size_t>(rng.below(n - 1));
          if (j >= i) ++j;
          const Rational c = rng.fraction(1, 3, 2) * (rng.below(2) ? 1 : -1);
          x.coords[i] += c;
          x.coords[j] -= c;
        }
        break;
      default: {
        x = RationalVec::zero(g.vertices());
        Rational sum = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
          x.coords[i] = rng.fraction(-3, 3, 3);
          sum += x.coords[i];
        }
        if (n > 0) x.coords[n - 1] = -sum;
        break;
      }
    }
    ++report.samples;
    const bool in_polytope = base_member(z, x, limits);
    const ConeDecision d = decide_cone_membership(g, x);
    if (d.audit) {
      if (d.audit->passed()) {
        ++report.flows_certified;
      } else {
        ++report.flow_certificate_failures;
      }
    }
    if (d.witness) ++report.witnesses_verified;
    if (d.member) ++report.members;
    if (in_polytope != d.member) {
      ++report.mismatches;
      if (!report.counterexample) report.counterexample = x;
    }
  }
  return report;
}

BigInt generic_count(const Digraph& g, std::uint64_t n, const Limits& limits) {
  return count_colorings(g, n, EdgeRule::strictly_decreasing, limits);
}

BigInt vertex_sum_count(const Digraph& g, std::uint64_t n,
                        const Limits& limits) {
  if (!is_acyclic(g)) {
    throw HypothesisError("vertex_sum_count: graph has a directed cycle, so "
                          "its cone has no vertex");
  }
  return count_colorings(g, n, EdgeRule::weakly_decreasing, limits);
}

namespace {

// Integer points of t * Delta_g (or of its interior) by scanning the box
// {0..t}^I against the defining inequalities.
BigInt dilated_points(const Digraph& g, std::uint64_t t, bool interior,
                      const Limits& limits) {
  const std::size_t m = g.vertex_count();
  if (m == 0) return 1;
  require_work_bound(t + 1, m, limits, "ascent_lattice_count");
  std::vector<std::uint64_t> x(m, 0);
  std::uint64_t count = 0;
  while (true) {
    bool inside = true;
    for (std::size_t i = 0; i < m && inside; ++i) {
      inside = interior ? (x[i] > 0 && x[i] < t) : x[i] <= t;
    }
    for (std::size_t e = 0; e < g.edge_count() && inside; ++e) {
      const auto& edge = g.edges()[e];
      inside = interior ? x[edge.tail] < x[edge.head]
                        : x[edge.tail] <= x[edge.head];
    }
    count += inside;
    std::size_t pos = 0;
    while (pos < m && ++x[pos] > t) x[pos++] = 0;
    if (pos == m) break;
  }
  return count;
}

}  // namespace

BigInt ascent_lattice_count(const Digraph& g, std::uint64_t n, bool interior,
                            const Limits& limits) {
  if (interior) return dilated_points(g, n + 1, true, limits);
  // (-1) * Delta_g is empty.
  if (n == 0) return g.vertex_count() == 0 ? 1 : 0;
  return dilated_points(g, n - 1, false, limits);
}

}  // namespace hopfdg
