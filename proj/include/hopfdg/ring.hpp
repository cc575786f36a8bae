#pragma once

// Exact coefficient rings: big integers, rationals, and sparse integer
// polynomials in the fixed variables y, z, q.

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hopfdg {

// Expression templates off: values are stored in containers, captured by
// auto and forwarded through std::tuple, all of which expect plain values.
using BigInt = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;

std::string to_string(const BigInt& value);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
/// Parses "3", "-2", "1/3", " -5/10 " (reduced on return).
Rational parse_rational(const std::string& text);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

enum class Var : std::uint8_t { y = 0, z = 1, q = 2 };

/// Sparse multivariate polynomial with integer coefficients over the
/// fixed variable list (y, z, q). Zero coefficients are never stored.
class MPoly {
 public:
  using Exponents = std::array<std::uint32_t, 3>;
  using Terms = std::map<Exponents, BigInt>;

  MPoly() = default;
  MPoly(long long constant);  // NOLINT(google-explicit-constructor)
  MPoly(const BigInt& constant);  // NOLINT(google-explicit-constructor)

  static MPoly variable(Var v, std::uint32_t power = 1);
  static MPoly monomial(const Exponents& exponents, const BigInt& coeff);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(const Exponents& exponents) const;
  std::uint32_t degree_in(Var v) const;

  /// Replaces v by the integer `value`.
  MPoly substitute(Var v, const BigInt& value) const;
  /// Collects the coefficient of v^power, as a polynomial free of v.
  MPoly coefficient_of(Var v, std::uint32_t power) const;
  /// Swaps the exponents of two variables.
  MPoly swap_variables(Var a, Var b) const;

  /// Gcd of all integer coefficients (0 for the zero polynomial).
  BigInt content() const;
  /// Divides every coefficient by `d`, which must divide each exactly.
  MPoly divide_exact(const BigInt& d) const;

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly operator-() const;

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    r *= b;
    return r;
  }
  friend bool operator==(const MPoly&, const MPoly&) = default;

 private:
  void add_term(const Exponents& e, const BigInt& c);
  Terms terms_;
};

/// Terms in graded-descending order, e.g. "2*y^2 + 2*y*z + 2*z^2".
std::string to_string(const MPoly& p);

// Uniform helpers so templates can treat BigInt and MPoly alike.
inline bool ring_is_zero(const BigInt& x) { return x.is_zero(); }
inline bool ring_is_zero(const MPoly& x) { return x.is_zero(); }
inline BigInt ring_content(const BigInt& x) { return abs(x); }
inline BigInt ring_content(const MPoly& x) { return x.content(); }
inline BigInt ring_divide_exact(const BigInt& x, const BigInt& d) {
  return x / d;
}
inline MPoly ring_divide_exact(const MPoly& x, const BigInt& d) {
  return x.divide_exact(d);
}
/// True when the printed form needs parentheses inside a product.
inline bool ring_is_compound(const BigInt&) { return false; }
inline bool ring_is_compound(const MPoly& x) { return x.terms().size() > 1; }

}  // namespace hopfdg
