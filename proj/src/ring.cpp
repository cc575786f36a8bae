#include "hopfdg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <vector>

#include "hopfdg/error.hpp"

namespace hopfdg {

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool parse_integer(const std::string& text, BigInt& out) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) return false;
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    value = value * 10 + (text[i] - '0');
  }
  out = negative ? BigInt(-value) : value;
  return true;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string body = trim(text);
  // Accept the Unicode minus sign U+2212 as well as '-'.
  const std::string unicode_minus = "\xE2\x88\x92";
  if (body.rfind(unicode_minus, 0) == 0) {
    body = "-" + body.substr(unicode_minus.size());
  }
  const auto slash = body.find('/');
  BigInt num;
  BigInt den = 1;
  if (slash == std::string::npos) {
    if (!parse_integer(body, num)) {
      throw PreconditionError("not a rational number: '" + text + "'");
    }
  } else {
    if (!parse_integer(trim(body.substr(0, slash)), num) ||
        !parse_integer(trim(body.substr(slash + 1)), den)) {
      throw PreconditionError("not a rational number: '" + text + "'");
    }
    if (den.is_zero()) {
      throw PreconditionError("zero denominator: '" + text + "'");
    }
  }
  return Rational(num, den);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  return abs(a / gcd(a, b) * b);
}

MPoly::MPoly(long long constant) : MPoly(BigInt(constant)) {}

MPoly::MPoly(const BigInt& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{0, 0, 0}, constant);
}

MPoly MPoly::variable(Var v, std::uint32_t power) {
  Exponents e{0, 0, 0};
  e[static_cast<std::size_t>(v)] = power;
  return monomial(e, 1);
}

MPoly MPoly::monomial(const Exponents& exponents, const BigInt& coeff) {
  MPoly p;
  p.add_term(exponents, coeff);
  return p;
}

BigInt MPoly::coefficient(const Exponents& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::uint32_t MPoly::degree_in(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, e[static_cast<std::size_t>(v)]);
  }
  return d;
}

MPoly MPoly::substitute(Var v, const BigInt& value) const {
  const auto idx = static_cast<std::size_t>(v);
  MPoly result;
  for (const auto& [e, c] : terms_) {
    Exponents reduced = e;
    reduced[idx] = 0;
    result.add_term(reduced, c * boost::multiprecision::pow(value, e[idx]));
  }
  return result;
}

MPoly MPoly::coefficient_of(Var v, std::uint32_t power) const {
  const auto idx = static_cast<std::size_t>(v);
  MPoly result;
  for (const auto& [e, c] : terms_) {
    if (e[idx] != power) continue;
    Exponents reduced = e;
    reduced[idx] = 0;
    result.add_term(reduced, c);
  }
  return result;
}

MPoly MPoly::swap_variables(Var a, Var b) const {
  MPoly result;
  for (const auto& [e, c] : terms_) {
    Exponents swapped = e;
    std::swap(swapped[static_cast<std::size_t>(a)],
              swapped[static_cast<std::size_t>(b)]);
    result.add_term(swapped, c);
  }
  return result;
}

BigInt MPoly::content() const {
  BigInt g = 0;
  for (const auto& [e, c] : terms_) g = gcd(g, c);
  return abs(g);
}

MPoly MPoly::divide_exact(const BigInt& d) const {
  MPoly result;
  for (const auto& [e, c] : terms_) {
    if (c % d != 0) throw PreconditionError("MPoly::divide_exact: inexact");
    result.terms_.emplace(e, c / d);
  }
  return result;
}

void MPoly::add_term(const Exponents& e, const BigInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& other) {
  MPoly product;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      product.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  static constexpr const char* kNames[] = {"y", "z", "q"};
  std::vector<std::pair<MPoly::Exponents, BigInt>> terms(p.terms().begin(),
                                                         p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const auto da = a.first[0] + a.first[1] + a.first[2];
    const auto db = b.first[0] + b.first[1] + b.first[2];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool constant = e[0] == 0 && e[1] == 0 && e[2] == 0;
    BigInt magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kNames[v];
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (constant) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace hopfdg
