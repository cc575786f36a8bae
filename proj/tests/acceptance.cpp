// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// criteria pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hopfdg/hopf.hpp"
#include "hopfdg/invariants.hpp"
#include "hopfdg/polytope.hpp"
#include "hopfdg/random.hpp"
#include "hopfdg/subfun.hpp"
#include "hopfdg/verify.hpp"

namespace {

using namespace hopfdg;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

MPoly y() { return MPoly::variable(Var::y); }
MPoly z() { return MPoly::variable(Var::z); }
MPoly q() { return MPoly::variable(Var::q); }

Digraph g3() {
  return Digraph(LabelSet({"0", "1", "2"}),
                 {{"0", "1"}, {"1", "2"}, {"0", "2"}});
}

// Every digraph on at most 4 vertices, then 500 seeded random 5-vertex ones.
const std::vector<Digraph>& small_suite() {
  static const std::vector<Digraph> suite = [] {
    std::vector<Digraph> out;
    for (std::size_t n = 0; n <= 4; ++n) {
      for (std::uint64_t i = 0; i < digraph_count(n); ++i) {
        out.push_back(nth_digraph(n, i));
      }
    }
    Random rng(20240501);
    for (int i = 0; i < 500; ++i) {
      out.push_back(random_digraph(5, static_cast<unsigned>(rng.between(10, 70)), rng));
    }
    return out;
  }();
  return suite;
}

std::string describe(const Digraph& g) {
  return "|I|=" + std::to_string(g.vertex_count()) + " E=" + edge_list_string(g);
}

Outcome ac1_golden() {
  Outcome r;
  const Digraph g = g3();
  const MPoly two(2);
  if (strict_chromatic(g) != BinPoly<BigInt>({0, 0, 0, 1})) {
    r.fail("strict = " + to_string(strict_chromatic(g)));
  }
  if (weak_chromatic(g) != BinPoly<BigInt>({0, 1, 2, 1})) {
    r.fail("weak = " + to_string(weak_chromatic(g)));
  }
  const BinPoly<MPoly> b({MPoly(0), MPoly(1),
                          two * y() * y() + two * z() * z() + two * y() * z(),
                          y() * y() * y() + z() * z() * z() +
                              two * y() * z() * (y() + z())});
  if (b_polynomial(g) != b) r.fail("bpoly = " + to_string(b_polynomial(g)));
  const BinPoly<MPoly> psi({MPoly(0), q() * q() * q(), two * q(), MPoly(1)});
  if (edge_invariant(g) != psi) r.fail("psi = " + to_string(edge_invariant(g)));
  // The engine must agree with the filtered-composition forms.
  if (aa_poly(g, basic_character()) != strict_chromatic(g)) {
    r.fail("aa_poly(basic) differs from strict");
  }
  if (r.ok) r.detail = "4 invariants exact";
  return r;
}

Outcome ac2_main_theorem() {
  Outcome r;
  std::size_t checks = 0;
  const auto zeta = basic_character();
  for (const Digraph& g : small_suite()) {
    const BinPoly<BigInt> p = aa_poly(g, zeta);
    for (std::uint64_t n = 0; n <= 5; ++n) {
      ++checks;
      const BigInt lhs = eval_binpoly(p, BigInt(n));
      const BigInt rhs = brute_strict(g, n);
      if (lhs != rhs) {
        r.fail(describe(g) + " n=" + std::to_string(n) + ": " + lhs.str() +
               " != " + rhs.str());
      }
    }
  }
  if (r.ok) {
    r.detail = std::to_string(small_suite().size()) + " graphs, " +
               std::to_string(checks) + " evaluations";
  }
  return r;
}

Outcome ac3_reciprocity() {
  Outcome r;
  std::size_t graphs = 0;
  for (const Digraph& g : small_suite()) {
    if (!is_acyclic(g)) continue;
    ++graphs;
    const BinPoly<BigInt> p = strict_chromatic(g);
    const BigInt sign = g.vertex_count() % 2 == 0 ? 1 : -1;
    for (std::int64_t n = 1; n <= 5; ++n) {
      const BigInt lhs = sign * eval_binpoly(p, BigInt(-n));
      const BigInt rhs = brute_weak(g, static_cast<std::uint64_t>(n));
      if (lhs != rhs) {
        r.fail(describe(g) + " n=" + std::to_string(n) + ": " + lhs.str() +
               " != " + rhs.str());
      }
    }
  }
  if (r.ok) r.detail = std::to_string(graphs) + " acyclic graphs, n=1..5";
  return r;
}

template <class Ring>
void antipode_reciprocity(const Digraph& g, const FormalSum& s,
                          const Character<Ring>& zeta, Outcome& r) {
  const BinPoly<Ring> direct = aa_poly(g, zeta);
  const BinPoly<Ring> via = aa_poly_of_sum(s, zeta);
  for (std::int64_t n = 0; n <= 4; ++n) {
    const Ring lhs = eval_binpoly(direct, BigInt(-n));
    const Ring rhs = eval_binpoly(via, BigInt(n));
    if (!(lhs == rhs)) {
      r.fail(zeta.name + " " + describe(g) + " n=" + std::to_string(n) +
             ": " + to_string(lhs) + " != " + to_string(rhs));
    }
  }
}

Outcome ac4_antipode_reciprocity() {
  Outcome r;
  const auto basic = basic_character();
  const auto edge = edge_character();
  for (const Digraph& g : small_suite()) {
    const FormalSum s = antipode(g);
    antipode_reciprocity(g, s, basic, r);
    antipode_reciprocity(g, s, edge, r);
  }
  if (r.ok) {
    r.detail = std::to_string(small_suite().size()) +
               " graphs, both characters, n=0..4";
  }
  return r;
}

struct FlowTotals {
  std::size_t flows = 0;
  std::size_t failures = 0;
};

Outcome ac5_theorem1(FlowTotals& totals) {
  Outcome r;
  Random rng(77);
  std::size_t samples = 0;
  std::size_t members = 0;
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + rng.below(6);
    const Digraph g = random_digraph(n, static_cast<unsigned>(rng.between(10, 60)), rng);
    const Theorem1Report rep = check_theorem1(g, 200, rng.next());
    samples += rep.samples;
    members += rep.members;
    totals.flows += rep.flows_certified + rep.flow_certificate_failures;
    totals.failures += rep.flow_certificate_failures;
    if (rep.mismatches != 0) {
      r.fail(describe(g) + " mismatch at x=" +
             (rep.counterexample ? to_string(*rep.counterexample) : "?"));
    }
    if (rep.witnesses_verified != rep.members) {
      r.fail(describe(g) + ": unverified witness");
    }
  }
  if (r.ok) {
    r.detail = "60 graphs, " + std::to_string(samples) + " samples, " +
               std::to_string(members) + " verified witnesses";
  }
  return r;
}

Outcome ac6_morphism() {
  Outcome r;
  std::size_t graphs = 0;
  std::size_t splits = 0;
  auto check = [&](const Digraph& g) {
    ++graphs;
    for (Subset s = 0; s <= g.vertices().full(); ++s) {
      ++splits;
      const MorphismVerdict v = check_low_morphism(g, s);
      if (!v.holds()) {
        r.fail(describe(g) + " S=" + std::to_string(s) +
               (v.restriction_holds ? "" : " restriction") +
               (v.contraction_holds ? "" : " contraction") +
               (v.product_holds ? "" : " product"));
      }
    }
  };
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::uint64_t i = 0; i < digraph_count(n); ++i) check(nth_digraph(n, i));
  }
  Random rng(606);
  for (int i = 0; i < 200; ++i) {
    check(random_digraph(5 + rng.below(2), static_cast<unsigned>(rng.between(10, 60)), rng));
  }
  if (r.ok) {
    r.detail = std::to_string(graphs) + " graphs, " + std::to_string(splits) +
               " splits";
  }
  return r;
}

Outcome ac7_ehrhart() {
  Outcome r;
  std::size_t graphs = 0;
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::uint64_t i = 0; i < digraph_count(m); ++i) {
      const Digraph g = nth_digraph(m, i);
      ++graphs;
      for (std::uint64_t n = 1; n <= 4; ++n) {
        const BigInt inner = ascent_lattice_count(g, n, true);
        const BigInt closed = ascent_lattice_count(g, n, false);
        if (inner != brute_strict(g, n)) {
          r.fail(describe(g) + " n=" + std::to_string(n) + " interior " +
                 inner.str() + " != " + brute_strict(g, n).str());
        }
        if (closed != brute_weak(g, n)) {
          r.fail(describe(g) + " n=" + std::to_string(n) + " closed " +
                 closed.str() + " != " + brute_weak(g, n).str());
        }
      }
    }
  }
  if (r.ok) r.detail = std::to_string(graphs) + " graphs, n=1..4";
  return r;
}

Outcome ac8_certificates(const FlowTotals& totals) {
  Outcome r;
  if (totals.flows == 0) r.fail("no max-flow calls were made");
  if (totals.failures != 0) {
    r.fail(std::to_string(totals.failures) + " of " +
           std::to_string(totals.flows) + " certificates failed");
  }
  if (r.ok) {
    r.detail = std::to_string(totals.flows) +
               " flows, cut capacity = flow value for all";
  }
  return r;
}

Outcome ac9_hopf_axioms() {
  Outcome r;
  Random rng(9000);
  VerifyOptions opts;
  opts.samples = 50;
  for (int i = 0; i < 1000; ++i) {
    const Digraph g = random_digraph(rng.below(7), static_cast<unsigned>(rng.between(10, 60)), rng);
    opts.seed = rng.next();
    const SuiteReport rep = verify_hopf_axioms(g, opts);
    for (const auto& c : rep.checks) {
      if (c.status == CheckStatus::fail) {
        r.fail(describe(g) + " " + c.name + ": " + c.detail);
      }
    }
  }
  if (r.ok) r.detail = "1000 instances, |I| <= 6";
  return r;
}

}  // namespace

int main() {
  bool all = true;
  auto run = [&](const std::string& name, double budget_seconds,
                 const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome r;
    try {
      r = body();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (budget_seconds > 0 && secs >= budget_seconds) {
      std::ostringstream why;
      why << "runtime " << secs << " s exceeds " << budget_seconds << " s";
      r.fail(why.str());
    }
    all = all && r.ok;
    std::ostringstream line;
    line.precision(3);
    line << (r.ok ? "PASS " : "FAIL ") << name << " [" << std::fixed << secs
         << " s] " << r.detail;
    std::cout << line.str() << std::endl;
  };

  FlowTotals totals;
  run("AC1 golden invariants of the 3-vertex tournament", 1.0, ac1_golden);
  run("AC2 character polynomial equals strict colorings", 120.0, ac2_main_theorem);
  run("AC3 strict/weak reciprocity on acyclic graphs", 0, ac3_reciprocity);
  run("AC4 antipode reciprocity, both characters", 0, ac4_antipode_reciprocity);
  run("AC5 base polytope of low equals graph cone", 60.0,
      [&] { return ac5_theorem1(totals); });
  run("AC6 low is a Hopf morphism", 0, ac6_morphism);
  run("AC7 ascent polytope lattice points", 0, ac7_ehrhart);
  run("AC8 min-cut certificates for every max flow", 0,
      [&] { return ac8_certificates(totals); });
  run("AC9 Hopf axioms on random instances", 0, ac9_hopf_axioms);
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return all ? 0 : 1;
}
