#pragma once

// Extended Boolean functions 2^I -> Q u {+inf}, their Hopf operations, and
// the map low : digraphs -> submodular functions.

#include <optional>
#include <string>
#include <vector>

#include "hopfdg/digraph.hpp"
#include "hopfdg/limits.hpp"
#include "hopfdg/ring.hpp"
#include "hopfdg/species.hpp"

namespace hopfdg {

/// A rational or +infinity. Addition absorbs infinity.
class ExtValue {
 public:
  ExtValue() = default;
  ExtValue(const Rational& v) : value_(v) {}  // NOLINT
  ExtValue(long long v) : value_(v) {}        // NOLINT
  static ExtValue infinity() {
    ExtValue e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  /// Finite value; throws PreconditionError on infinity.
  const Rational& value() const;

  friend ExtValue operator+(const ExtValue& a, const ExtValue& b);
  friend bool operator==(const ExtValue& a, const ExtValue& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

 private:
  bool infinite_ = false;
  Rational value_ = 0;
};

std::string to_string(const ExtValue& v);

/// Dense table indexed by subset bitmask over `ground`; z(empty) = 0.
class ExtBool {
 public:
  ExtBool() : values_{ExtValue(0)} {}
  /// Throws DomainError if the table size is not 2^|ground| or z(empty) != 0.
  ExtBool(LabelSet ground, std::vector<ExtValue> values);

  const LabelSet& ground() const noexcept { return ground_; }
  const ExtValue& operator()(Subset s) const { return values_.at(s); }
  const std::vector<ExtValue>& values() const noexcept { return values_; }

  friend bool operator==(const ExtBool&, const ExtBool&) = default;

 private:
  LabelSet ground_;
  std::vector<ExtValue> values_;
};

/// 0 on lower halves of g, +inf elsewhere.
ExtBool low(const Digraph& g, const Limits& limits = {});

/// (u.v)(E) = u(E n S) + v(E n T); grounds must be disjoint.
ExtBool bf_product(const ExtBool& u, const ExtBool& v,
                   const Limits& limits = {});

/// z|_S(E) = z(E) for E inside S.
ExtBool bf_restrict(const ExtBool& z, Subset s);

/// z/_S(E) = z(E u S) - z(S) on the complement of S; nullopt when z(S) = inf.
std::optional<ExtBool> bf_contract(const ExtBool& z, Subset s);

/// z(A u B) + z(A n B) <= z(A) + z(B) whenever z(A), z(B) are finite.
bool is_submodular(const ExtBool& z, const Limits& limits = {});

struct MorphismVerdict {
  bool restriction_holds = false;
  bool contraction_holds = false;
  bool product_holds = false;
  /// S is not a lower half: both sides are the zero object.
  bool both_zero = false;

  bool holds() const noexcept {
    return restriction_holds && contraction_holds && product_holds;
  }
};

/// Checks low(g)|_S = low(g|_S), low(g)/_S = low(g|_T) (or both zero), and
/// low(g|_S . g|_T) = low(g|_S) . low(g|_T) on the split I = S u T.
MorphismVerdict check_low_morphism(const Digraph& g, Subset s,
                                   const Limits& limits = {});

}  // namespace hopfdg
