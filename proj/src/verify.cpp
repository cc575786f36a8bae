#include "hopfdg/verify.hpp"

#include <functional>
#include <optional>
#include <tuple>

#include "hopfdg/error.hpp"
#include "hopfdg/hopf.hpp"
#include "hopfdg/invariants.hpp"
#include "hopfdg/polytope.hpp"
#include "hopfdg/random.hpp"
#include "hopfdg/subfun.hpp"

namespace hopfdg {

bool SuiteReport::passed() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return false;
  }
  return true;
}

namespace {

/// Counts cases for one named check and keeps the first counterexample.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void record(bool ok, const std::function<std::string()>& describe) {
    ++cases_;
    if (!ok && !failure_) failure_ = describe();
  }

  CheckResult result() const {
    if (failure_) return {name_, CheckStatus::fail, *failure_};
    return {name_, CheckStatus::pass,
            std::to_string(cases_) + (cases_ == 1 ? " case" : " cases")};
  }

 private:
  std::string name_;
  std::size_t cases_ = 0;
  std::optional<std::string> failure_;
};

std::string subset_string(const LabelSet& labels, Subset s) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels.labels_of(s)) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

using Split = std::optional<std::pair<Digraph, Digraph>>;
using TripleSplit = std::optional<std::tuple<Digraph, Digraph, Digraph>>;

// (id (x) Delta) o Delta, splitting off `first` and then `second`.
TripleSplit split_first_then_rest(const Digraph& g, Subset first,
                                  Subset second) {
  const auto outer = coproduct(g, first);
  if (!outer) return std::nullopt;
  const Subset inner_mask = transport(second, g.vertices(),
                                      outer->second.vertices());
  const auto inner = coproduct(outer->second, inner_mask);
  if (!inner) return std::nullopt;
  return std::make_tuple(outer->first, inner->first, inner->second);
}

// (Delta (x) id) o Delta, splitting off `first u second` and then `first`.
TripleSplit split_union_then_first(const Digraph& g, Subset first,
                                   Subset second) {
  const auto outer = coproduct(g, first | second);
  if (!outer) return std::nullopt;
  const Subset inner_mask = transport(first, g.vertices(),
                                      outer->first.vertices());
  const auto inner = coproduct(outer->first, inner_mask);
  if (!inner) return std::nullopt;
  return std::make_tuple(inner->first, inner->second, outer->second);
}

// Calls f(a, b) on nested pairs a <= b <= I: all of them up to 6 vertices,
// otherwise `samples` random ones.
template <class F>
void for_nested_pairs(const Digraph& g, const VerifyOptions& opts,
                      Random& rng, F&& f) {
  const Subset full = g.vertices().full();
  if (g.vertex_count() <= 6) {
    for (Subset b = 0;; ++b) {
      for_each_submask(b, [&](Subset a) { f(a, b); });
      if (b == full) break;
    }
  } else {
    for (std::size_t i = 0; i < opts.samples; ++i) {
      const Subset b = rng.subset_of(full);
      f(rng.subset_of(b), b);
    }
  }
}

// Calls f(p, s) on pairs of subsets: all of them up to 6 vertices,
// otherwise `samples` random ones.
template <class F>
void for_subset_pairs(const Digraph& g, const VerifyOptions& opts,
                      Random& rng, F&& f) {
  const Subset full = g.vertices().full();
  if (g.vertex_count() <= 6) {
    for (Subset p = 0; p <= full; ++p) {
      for (Subset s = 0; s <= full; ++s) f(p, s);
    }
  } else {
    for (std::size_t i = 0; i < opts.samples; ++i) {
      const Subset p = rng.subset_of(full);
      f(p, rng.subset_of(full));
    }
  }
}

Split relabel_split(const Split& s, const std::map<Label, Label>& sigma) {
  if (!s) return std::nullopt;
  return std::make_pair(relabel(s->first, sigma), relabel(s->second, sigma));
}

FormalSum relabel_sum(const FormalSum& s, const std::map<Label, Label>& sigma,
                      const LabelSet& target) {
  FormalSum out(target);
  for (const auto& [g, c] : s.terms()) out.add(relabel(g, sigma), c);
  return out;
}

}  // namespace

SuiteReport verify_hopf_axioms(const Digraph& g, const VerifyOptions& opts) {
  SuiteReport report{"hopf-axioms", {}};
  Random rng(opts.seed);
  const LabelSet& labels = g.vertices();
  const Subset full = labels.full();

  Tally coassoc("coassociativity");
  for_nested_pairs(g, opts, rng, [&](Subset a, Subset b) {
    const Subset t = b & ~a;
    const bool ok =
        split_first_then_rest(g, a, t) == split_union_then_first(g, a, t);
    coassoc.record(ok, [&] {
      return "S=" + subset_string(labels, a) + " T=" + subset_string(labels, t);
    });
  });
  report.checks.push_back(coassoc.result());

  // The graph as a product g|_P . g|_{I\P}, against coproducts along S.
  Tally compat("compatibility");
  for_subset_pairs(g, opts, rng, [&](Subset p, Subset s) {
    const Digraph g1 = restrict(g, p);
    const Digraph g2 = restrict(g, full & ~p);
    const Split whole = coproduct(product(g1, g2), s);
    const Split left = coproduct(g1, transport(s & p, labels, g1.vertices()));
    const Split right =
        coproduct(g2, transport(s & ~p, labels, g2.vertices()));
    Split expected;
    if (left && right) {
      expected = std::make_pair(product(left->first, right->first),
                                product(left->second, right->second));
    }
    compat.record(whole == expected, [&] {
      return "P=" + subset_string(labels, p) + " S=" + subset_string(labels, s);
    });
  });
  report.checks.push_back(compat.result());

  Tally natural("naturality");
  const auto sigma = random_relabeling(labels, rng);
  const auto tau = random_relabeling(relabel(g, sigma).vertices(), rng);
  const Digraph moved = relabel(g, sigma);
  {
    std::map<Label, Label> composite;
    for (const auto& [from, to] : sigma) composite.emplace(from, tau.at(to));
    natural.record(relabel(moved, tau) == relabel(g, composite),
                   [] { return std::string("relabel(relabel(g,s),t) != relabel(g,t.s)"); });
  }
  for_nested_pairs(g, opts, rng, [&](Subset a, Subset b) {
    const Subset moved_a = transport(a, labels, moved.vertices(), sigma);
    const Subset moved_b = transport(b, labels, moved.vertices(), sigma);
    bool ok = restrict(moved, moved_b) == relabel(restrict(g, b), sigma);
    ok = ok && coproduct(moved, moved_a) == relabel_split(coproduct(g, a), sigma);
    const Digraph g1 = restrict(g, b);
    const Digraph g2 = restrict(g, full & ~b);
    ok = ok && relabel(product(g1, g2), sigma) ==
                   product(relabel(g1, sigma), relabel(g2, sigma));
    natural.record(ok, [&] {
      return "S=" + subset_string(labels, a) + " B=" + subset_string(labels, b);
    });
  });
  natural.record(antipode(moved, opts.limits) ==
                     relabel_sum(antipode(g, opts.limits), sigma,
                                 moved.vertices()),
                 [] { return std::string("antipode does not commute with relabeling"); });
  report.checks.push_back(natural.result());

  Tally unit("unitality");
  const Digraph empty;
  unit.record(product(g, empty) == g && product(empty, g) == g,
              [] { return std::string("g . 1 != g"); });
  unit.record(coproduct(g, 0) == Split(std::make_pair(empty, g)),
              [] { return std::string("Delta_{0,I}(g) != 1 (x) g"); });
  unit.record(coproduct(g, full) == Split(std::make_pair(g, empty)),
              [] { return std::string("Delta_{I,0}(g) != g (x) 1"); });
  unit.record(antipode(empty, opts.limits) == FormalSum::of(empty),
              [] { return std::string("antipode of the unit"); });
  report.checks.push_back(unit.result());

  Tally involution("antipode-involution (extra)");
  involution.record(
      antipode(antipode(g, opts.limits), opts.limits) == FormalSum::of(g),
      [&] { return "S(S(g)) = " + to_string(antipode(antipode(g))); });
  report.checks.push_back(involution.result());
  return report;
}

SuiteReport verify_morphism(const Digraph& g, const VerifyOptions& opts) {
  SuiteReport report{"morphism", {}};
  const LabelSet& labels = g.vertices();
  const ExtBool z = low(g, opts.limits);

  Tally submodular("low-submodular");
  submodular.record(is_submodular(z, opts.limits),
                    [] { return std::string("low(g) is not submodular"); });
  report.checks.push_back(submodular.result());

  Tally lattice("lower-half-lattice");
  const auto halves = lower_halves(g, opts.limits);
  for (const Subset a : halves) {
    for (const Subset b : halves) {
      lattice.record(is_lower_half(g, a | b) && is_lower_half(g, a & b), [&] {
        return "A=" + subset_string(labels, a) + " B=" + subset_string(labels, b);
      });
    }
  }
  report.checks.push_back(lattice.result());

  Tally restriction("low-restriction");
  Tally contraction("low-contraction");
  Tally prod("low-product");
  auto subsets = enumerate_subsets(labels, opts.limits);
  while (auto s = subsets.next()) {
    const MorphismVerdict v = check_low_morphism(g, *s, opts.limits);
    const auto where = [&] { return "S=" + subset_string(labels, *s); };
    restriction.record(v.restriction_holds, where);
    contraction.record(v.contraction_holds, where);
    prod.record(v.product_holds, where);
  }
  report.checks.push_back(restriction.result());
  report.checks.push_back(contraction.result());
  report.checks.push_back(prod.result());
  return report;
}

SuiteReport verify_theorem1(const Digraph& g, const VerifyOptions& opts) {
  SuiteReport report{"theorem1", {}};
  const Theorem1Report r =
      check_theorem1(g, opts.samples, opts.seed, opts.limits);
  const std::string counts = std::to_string(r.samples) + " samples, " +
                             std::to_string(r.members) + " members";
  if (r.mismatches == 0) {
    report.checks.push_back({"base-polytope-equals-cone", CheckStatus::pass,
                             counts});
  } else {
    report.checks.push_back(
        {"base-polytope-equals-cone", CheckStatus::fail,
         std::to_string(r.mismatches) + " mismatches; first x = " +
             to_string(*r.counterexample)});
  }
  report.checks.push_back(
      {"min-cut-certificates",
       r.flow_certificate_failures == 0 ? CheckStatus::pass : CheckStatus::fail,
       std::to_string(r.flows_certified) + " certified, " +
           std::to_string(r.flow_certificate_failures) + " failed"});
  report.checks.push_back({"cone-witnesses", CheckStatus::pass,
                           std::to_string(r.witnesses_verified) +
                               " witnesses reconstruct x"});

  Tally bounded("coproduct-boundedness");
  auto subsets = enumerate_subsets(g.vertices(), opts.limits);
  while (auto s = subsets.next()) {
    const bool split = coproduct(g, *s).has_value();
    bounded.record(split == cone_bounded_along(g, *s) &&
                       split == is_lower_half(g, *s),
                   [&] { return "S=" + subset_string(g.vertices(), *s); });
  }
  report.checks.push_back(bounded.result());
  return report;
}

SuiteReport verify_reciprocity(const Digraph& g, const VerifyOptions& opts) {
  SuiteReport report{"reciprocity", {}};
  const Limits& limits = opts.limits;
  const auto strict = strict_chromatic(g, limits);
  const auto weak = weak_chromatic(g, limits);
  const auto chi = aa_poly(g, basic_character(), limits);
  const auto psi = edge_invariant(g, limits);
  const FormalSum s = antipode(g, limits);
  const BigInt sign = g.vertex_count() % 2 == 0 ? 1 : -1;

  Tally main_theorem("basic-character-is-strict-chromatic");
  main_theorem.record(chi == strict, [&] {
    return "aa_poly = " + to_string(chi) + ", strict = " + to_string(strict);
  });
  for (std::uint64_t n = 0; n <= 5; ++n) {
    main_theorem.record(eval_binpoly(chi, BigInt(n)) == brute_strict(g, n, limits),
                        [&] { return "n=" + std::to_string(n); });
  }
  report.checks.push_back(main_theorem.result());

  Tally weak_count("weak-chromatic-counts");
  for (std::uint64_t n = 0; n <= 5; ++n) {
    weak_count.record(eval_binpoly(weak, BigInt(n)) == brute_weak(g, n, limits),
                      [&] { return "n=" + std::to_string(n); });
  }
  report.checks.push_back(weak_count.result());

  Tally b_special("b-polynomial-specializations");
  const auto b = b_polynomial(g, limits);
  const auto edges = static_cast<std::uint32_t>(g.edge_count());
  b_special.record(
      b.map([](const MPoly& c) { return c.substitute(Var::y, 1).substitute(Var::z, 0).coefficient({0, 0, 0}); }) == weak,
      [] { return std::string("B(n,1,0) != weak chromatic"); });
  b_special.record(
      b.map([&](const MPoly& c) {
         return c.substitute(Var::z, 1).coefficient_of(Var::y, edges).coefficient({0, 0, 0});
       }) == strict,
      [] { return std::string("[y^|E|] B(n,y,1) != strict chromatic"); });
  b_special.record(
      b_polynomial(reverse(g), limits) ==
          b.map([](const MPoly& c) { return c.swap_variables(Var::y, Var::z); }),
      [] { return std::string("reversal does not swap y and z"); });
  for (std::uint64_t n = 0; n <= 5; ++n) {
    const MPoly at_n = eval_binpoly(b, BigInt(n));
    const BigInt all = at_n.substitute(Var::y, 1).substitute(Var::z, 1).coefficient({0, 0, 0});
    b_special.record(all == boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(g.vertex_count())),
                     [&] { return "B(n,1,1) != n^|I| at n=" + std::to_string(n); });
  }
  report.checks.push_back(b_special.result());

  Tally antipode_basic("antipode-reciprocity-basic");
  Tally antipode_edge("antipode-reciprocity-edge");
  const auto chi_s = aa_poly_of_sum(s, basic_character(), limits);
  const auto psi_s = aa_poly_of_sum(s, edge_character(), limits);
  antipode_basic.record(eval_binpoly(chi, BigInt(-1)) ==
                            char_of_sum(s, basic_character()),
                        [] { return std::string("chi(-1) != zeta(S(g))"); });
  antipode_edge.record(eval_binpoly(psi, BigInt(-1)) ==
                           char_of_sum(s, edge_character()),
                       [] { return std::string("psi(-1) != eta(S(g))"); });
  for (std::uint64_t n = 0; n <= 4; ++n) {
    antipode_basic.record(
        eval_binpoly(chi, -BigInt(n)) == eval_binpoly(chi_s, BigInt(n)),
        [&] { return "n=" + std::to_string(n); });
    antipode_edge.record(
        eval_binpoly(psi, -BigInt(n)) == eval_binpoly(psi_s, BigInt(n)),
        [&] { return "n=" + std::to_string(n); });
  }
  report.checks.push_back(antipode_basic.result());
  report.checks.push_back(antipode_edge.result());

  Tally counting("generic-and-lattice-counts");
  for (std::uint64_t n = 1; n <= 4; ++n) {
    const BigInt strict_n = eval_binpoly(strict, BigInt(n));
    const BigInt weak_n = eval_binpoly(weak, BigInt(n));
    counting.record(generic_count(g, n, limits) == strict_n &&
                        ascent_lattice_count(g, n, true, limits) == strict_n &&
                        ascent_lattice_count(g, n, false, limits) == weak_n,
                    [&] { return "n=" + std::to_string(n); });
  }
  report.checks.push_back(counting.result());

  if (!is_acyclic(g)) {
    report.checks.push_back({"reciprocity-theorem", CheckStatus::skipped,
                             "hypothesis violated: graph not acyclic"});
  } else {
    Tally theorem("reciprocity-theorem");
    for (std::uint64_t n = 1; n <= 5; ++n) {
      const ReciprocityVerdict v = check_reciprocity(g, n, limits);
      theorem.record(v.holds, [&] {
        return "n=" + std::to_string(n) + ": " + v.aa_side.str() + " vs " +
               v.weak_side.str();
      });
      theorem.record(vertex_sum_count(g, n, limits) ==
                         sign * eval_binpoly(strict, -BigInt(n)),
                     [&] { return "vertex sum, n=" + std::to_string(n); });
    }
    report.checks.push_back(theorem.result());
  }

  Tally edge_recip("edge-reciprocity");
  for (std::uint64_t n = 0; n <= 4; ++n) {
    const EdgeReciprocityVerdict v = check_edge_reciprocity(g, n, limits);
    edge_recip.record(v.holds, [&] {
      return "n=" + std::to_string(n) + ": " + to_string(v.lhs) + " vs " +
             to_string(v.rhs);
    });
  }
  report.checks.push_back(edge_recip.result());
  return report;
}

std::vector<SuiteReport> run_suites(const Digraph& g, std::string_view suite,
                                    const VerifyOptions& opts) {
  std::vector<SuiteReport> out;
  const bool all = suite == "all";
  if (!all && suite != "hopf-axioms" && suite != "morphism" &&
      suite != "theorem1" && suite != "reciprocity") {
    throw PreconditionError("unknown suite '" + std::string(suite) + "'");
  }
  if (all || suite == "hopf-axioms") out.push_back(verify_hopf_axioms(g, opts));
  if (all || suite == "morphism") out.push_back(verify_morphism(g, opts));
  if (all || suite == "theorem1") out.push_back(verify_theorem1(g, opts));
  if (all || suite == "reciprocity") out.push_back(verify_reciprocity(g, opts));
  return out;
}

}  // namespace hopfdg
