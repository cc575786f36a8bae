#pragma once

// Polynomials in n written in the binomial basis: sum_k c_k * C(n,k).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hopfdg/ring.hpp"

namespace hopfdg {

/// C(n,k) for any integer n, including negative n, via the falling factorial
/// n(n-1)...(n-k+1)/k!.
BigInt binomial(const BigInt& n, std::size_t k);
BigInt factorial(std::size_t n);
/// Signed Stirling number of the first kind s(k,j).
BigInt stirling_first(std::size_t k, std::size_t j);
/// Stirling number of the second kind S(n,k).
BigInt stirling_second(std::size_t n, std::size_t k);

template <class Ring>
class BinPoly {
 public:
  using coefficient_type = Ring;

  BinPoly() = default;
  explicit BinPoly(std::vector<Ring> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  const std::vector<Ring>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree in n; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  Ring coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Ring(0);
  }

  BinPoly& operator+=(const BinPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) {
      coeffs_.resize(other.coeffs_.size(), Ring(0));
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
      coeffs_[k] += other.coeffs_[k];
    }
    trim();
    return *this;
  }

  BinPoly& operator-=(const BinPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) {
      coeffs_.resize(other.coeffs_.size(), Ring(0));
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
      coeffs_[k] -= other.coeffs_[k];
    }
    trim();
    return *this;
  }

  friend BinPoly operator+(BinPoly a, const BinPoly& b) { return a += b; }
  friend BinPoly operator-(BinPoly a, const BinPoly& b) { return a -= b; }
  friend BinPoly operator*(const Ring& s, const BinPoly& p) {
    std::vector<Ring> out;
    out.reserve(p.coeffs_.size());
    for (const auto& c : p.coeffs_) out.push_back(s * c);
    return BinPoly(std::move(out));
  }
  friend bool operator==(const BinPoly&, const BinPoly&) = default;

  /// Applies `f` to every coefficient.
  template <class F>
  auto map(F&& f) const -> BinPoly<decltype(f(std::declval<const Ring&>()))> {
    using Out = decltype(f(std::declval<const Ring&>()));
    std::vector<Out> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return BinPoly<Out>(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && ring_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Ring> coeffs_;
};

template <class Ring>
Ring eval_binpoly(const BinPoly<Ring>& p, const BigInt& n) {
  Ring sum(0);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (ring_is_zero(p.coeffs()[k])) continue;
    sum += Ring(binomial(n, k)) * p.coeffs()[k];
  }
  return sum;
}

/// Monomial-basis form numerators[j] * n^j / denominator, fully reduced.
template <class Ring>
struct MonomialForm {
  std::vector<Ring> numerators;
  BigInt denominator = 1;
};

template <class Ring>
MonomialForm<Ring> to_monomial(const BinPoly<Ring>& p) {
  MonomialForm<Ring> out;
  if (p.is_zero()) return out;
  const auto d = static_cast<std::size_t>(p.degree());
  const BigInt full = factorial(d);
  out.numerators.assign(d + 1, Ring(0));
  for (std::size_t k = 0; k <= d; ++k) {
    if (ring_is_zero(p.coeff(k))) continue;
    const BigInt scale = full / factorial(k);
    for (std::size_t j = 0; j <= k; ++j) {
      const BigInt s = stirling_first(k, j) * scale;
      if (!s.is_zero()) out.numerators[j] += Ring(s) * p.coeff(k);
    }
  }
  BigInt g = full;
  for (const auto& c : out.numerators) g = gcd(g, ring_content(c));
  if (g > 1) {
    for (auto& c : out.numerators) c = ring_divide_exact(c, g);
  }
  out.denominator = full / g;
  return out;
}

namespace detail {

inline bool ring_is_negative_term(const BigInt& x) { return x < 0; }
inline bool ring_is_negative_term(const MPoly& x) {
  return x.terms().size() == 1 && x.terms().begin()->second < 0;
}
inline bool ring_is_one(const BigInt& x) { return x == 1; }
inline bool ring_is_one(const MPoly& x) { return x == MPoly(1); }

/// Appends "+ c*basis" to out with sign folding; empty basis means constant.
template <class Ring>
void append_term(std::string& out, const Ring& c, const std::string& basis) {
  const bool negative = ring_is_negative_term(c);
  const Ring magnitude = negative ? Ring(0) - c : c;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (basis.empty()) {
    out += to_string(magnitude);
  } else if (ring_is_one(magnitude)) {
    out += basis;
  } else if (ring_is_compound(magnitude)) {
    out += "(" + to_string(magnitude) + ")*" + basis;
  } else {
    out += to_string(magnitude) + "*" + basis;
  }
}

}  // namespace detail

/// E.g. "C(n,1) + 2*C(n,2) + C(n,3)"; "0" for the zero polynomial.
template <class Ring>
std::string to_string(const BinPoly<Ring>& p) {
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (ring_is_zero(p.coeffs()[k])) continue;
    detail::append_term(out, p.coeffs()[k],
                        k == 0 ? std::string()
                               : "C(n," + std::to_string(k) + ")");
  }
  return out.empty() ? "0" : out;
}

/// E.g. "(n^3 - 3*n^2 + 2*n)/6".
template <class Ring>
std::string to_string(const MonomialForm<Ring>& m) {
  std::string body;
  for (std::size_t j = m.numerators.size(); j-- > 0;) {
    if (ring_is_zero(m.numerators[j])) continue;
    const std::string basis =
        j == 0 ? std::string() : (j == 1 ? "n" : "n^" + std::to_string(j));
    detail::append_term(body, m.numerators[j], basis);
  }
  if (body.empty()) return "0";
  if (m.denominator == 1) return body;
  return "(" + body + ")/" + m.denominator.str();
}

}  // namespace hopfdg
