#include "hopfdg/subfun.hpp"

#include "hopfdg/error.hpp"

namespace hopfdg {

const Rational& ExtValue::value() const {
  if (infinite_) throw PreconditionError("ExtValue: value of infinity");
  return value_;
}

ExtValue operator+(const ExtValue& a, const ExtValue& b) {
  if (a.infinite_ || b.infinite_) return ExtValue::infinity();
  return ExtValue(a.value_ + b.value_);
}

std::string to_string(const ExtValue& v) {
  return v.is_infinite() ? "inf" : to_string(v.value());
}

ExtBool::ExtBool(LabelSet ground, std::vector<ExtValue> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
  if (ground_.size() >= 63 || values_.size() != (std::size_t{1} << ground_.size())) {
    throw DomainError("ExtBool: table size does not match 2^|ground|");
  }
  if (!(values_[0] == ExtValue(0))) {
    throw DomainError("ExtBool: value on the empty set must be 0");
  }
}

ExtBool low(const Digraph& g, const Limits& limits) {
  require_subset_bound(g.vertex_count(), limits, "low");
  std::vector<ExtValue> values(std::size_t{1} << g.vertex_count(),
                               ExtValue::infinity());
  for (const Subset s : lower_halves(g, limits)) values[s] = ExtValue(0);
  return ExtBool(g.vertices(), std::move(values));
}

ExtBool bf_product(const ExtBool& u, const ExtBool& v, const Limits& limits) {
  LabelSet ground = disjoint_union(u.ground(), v.ground());
  require_subset_bound(ground.size(), limits, "bf_product");
  const Subset s_part = transport(u.ground().full(), u.ground(), ground);
  // Index maps from the union back to each factor.
  std::vector<Subset> to_u(ground.size(), 0);
  std::vector<Subset> to_v(ground.size(), 0);
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (s_part >> i & 1) {
      to_u[i] = Subset{1} << u.ground().at(ground[i]);
    } else {
      to_v[i] = Subset{1} << v.ground().at(ground[i]);
    }
  }
  std::vector<ExtValue> values(std::size_t{1} << ground.size());
  for (Subset e = 0; e < values.size(); ++e) {
    Subset eu = 0;
    Subset ev = 0;
    for (Subset b = e; b != 0; b &= b - 1) {
      const auto i = static_cast<std::size_t>(__builtin_ctzll(b));
      eu |= to_u[i];
      ev |= to_v[i];
    }
    values[e] = u(eu) + v(ev);
  }
  return ExtBool(std::move(ground), std::move(values));
}

namespace {

// Spreads the low popcount(within) bits of e over the members of within.
Subset expand(Subset e, Subset within) {
  Subset out = 0;
  std::size_t bit = 0;
  for (Subset b = within; b != 0; b &= b - 1, ++bit) {
    if (e >> bit & 1) out |= b & -b;
  }
  return out;
}

}  // namespace

ExtBool bf_restrict(const ExtBool& z, Subset s) {
  z.ground().require_subset(s, "bf_restrict");
  const std::size_t k = popcount(s);
  std::vector<ExtValue> values(std::size_t{1} << k);
  for (Subset e = 0; e < values.size(); ++e) values[e] = z(expand(e, s));
  return ExtBool(z.ground().subset(s), std::move(values));
}

std::optional<ExtBool> bf_contract(const ExtBool& z, Subset s) {
  z.ground().require_subset(s, "bf_contract");
  if (z(s).is_infinite()) return std::nullopt;
  const Subset t = z.ground().full() & ~s;
  const Rational base = z(s).value();
  std::vector<ExtValue> values(std::size_t{1} << popcount(t));
  for (Subset e = 0; e < values.size(); ++e) {
    const ExtValue& v = z(expand(e, t) | s);
    values[e] = v.is_infinite() ? v : ExtValue(v.value() - base);
  }
  return ExtBool(z.ground().subset(t), std::move(values));
}

bool is_submodular(const ExtBool& z, const Limits& limits) {
  require_subset_bound(z.ground().size(), limits, "is_submodular");
  const auto& v = z.values();
  for (Subset a = 0; a < v.size(); ++a) {
    if (v[a].is_infinite()) continue;
    for (Subset b = a + 1; b < v.size(); ++b) {
      if (v[b].is_infinite()) continue;
      const ExtValue lhs = v[a | b] + v[a & b];
      if (lhs.is_infinite() ||
          lhs.value() > v[a].value() + v[b].value()) {
        return false;
      }
    }
  }
  return true;
}

MorphismVerdict check_low_morphism(const Digraph& g, Subset s,
                                   const Limits& limits) {
  MorphismVerdict verdict;
  const ExtBool z = low(g, limits);
  const Subset t = g.vertices().full() & ~s;
  const auto split = coproduct(g, s);
  const auto contracted = bf_contract(z, s);
  if (!split) {
    verdict.both_zero = !contracted.has_value();
    verdict.restriction_holds = verdict.both_zero;
    verdict.contraction_holds = verdict.both_zero;
  } else {
    verdict.restriction_holds = bf_restrict(z, s) == low(split->first, limits);
    verdict.contraction_holds =
        contracted.has_value() && *contracted == low(split->second, limits);
  }
  const Digraph g1 = restrict(g, s);
  const Digraph g2 = restrict(g, t);
  verdict.product_holds =
      low(product(g1, g2), limits) ==
      bf_product(low(g1, limits), low(g2, limits), limits);
  return verdict;
}

}  // namespace hopfdg
