#pragma once

// Property suites run against a single graph: Hopf axioms, the morphism
// low, the cone/base-polytope equivalence and the reciprocity identities.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hopfdg/digraph.hpp"
#include "hopfdg/limits.hpp"

namespace hopfdg {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  /// Case count on success, counterexample on failure, reason when skipped.
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  Limits limits;
};

/// Coassociativity, compatibility, naturality, unitality, and the antipode
/// involution. Subset pairs are exhaustive up to 6 vertices, sampled above.
SuiteReport verify_hopf_axioms(const Digraph& g, const VerifyOptions& opts);

/// low(g) is submodular, its zero set is a lattice, and low commutes with
/// restriction, contraction and product for every split.
SuiteReport verify_morphism(const Digraph& g, const VerifyOptions& opts);

/// base_member(low(g), x) iff cone_member(g, x) on seeded samples, with a
/// min-cut certificate for every flow.
SuiteReport verify_theorem1(const Digraph& g, const VerifyOptions& opts);

/// Character-engine vs. coloring counts, antipode reciprocity for both
/// characters, and (acyclic graphs only) the chromatic reciprocity theorem.
SuiteReport verify_reciprocity(const Digraph& g, const VerifyOptions& opts);

/// suite is one of hopf-axioms, morphism, theorem1, reciprocity, all.
/// Throws PreconditionError for an unknown name.
std::vector<SuiteReport> run_suites(const Digraph& g, std::string_view suite,
                                    const VerifyOptions& opts);

}  // namespace hopfdg
