#include "doctest.h"
#include "hopfdg/binpoly.hpp"
#include "hopfdg/error.hpp"
#include "hopfdg/random.hpp"
#include "hopfdg/ring.hpp"

using namespace hopfdg;

namespace {

MPoly random_mpoly(Random& rng) {
  MPoly p;
  const auto terms = rng.below(4);
  for (std::uint64_t i = 0; i < terms; ++i) {
    p += MPoly::monomial({static_cast<std::uint32_t>(rng.below(3)),
                          static_cast<std::uint32_t>(rng.below(3)),
                          static_cast<std::uint32_t>(rng.below(3))},
                         rng.between(-5, 5));
  }
  return p;
}

}  // namespace

TEST_CASE("MPoly satisfies commutative ring laws on random samples") {
  Random rng(7);
  for (int i = 0; i < 200; ++i) {
    const MPoly a = random_mpoly(rng);
    const MPoly b = random_mpoly(rng);
    const MPoly c = random_mpoly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + MPoly(0) == a);
    CHECK(a * MPoly(1) == a);
    CHECK(a - a == MPoly(0));
  }
}

TEST_CASE("MPoly printing and substitution") {
  const MPoly y = MPoly::variable(Var::y);
  const MPoly z = MPoly::variable(Var::z);
  const MPoly p = MPoly(2) * y * y + MPoly(2) * z * z + MPoly(2) * y * z;
  CHECK(to_string(p) == "2*y^2 + 2*y*z + 2*z^2");
  CHECK(to_string(MPoly(0)) == "0");
  CHECK(to_string(MPoly(-3) + y) == "y - 3");
  CHECK(p.substitute(Var::y, 1).substitute(Var::z, 1) == MPoly(6));
  CHECK(p.coefficient_of(Var::y, 2) == MPoly(2));
  CHECK(p.swap_variables(Var::y, Var::z) == p);
  CHECK(p.content() == 2);
  CHECK(p.divide_exact(2) == y * y + z * z + y * z);
  CHECK_THROWS_AS(p.divide_exact(4), PreconditionError);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational(" -2 ") == Rational(-2));
  CHECK(parse_rational("\xE2\x88\x92" "2") == Rational(-2));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(to_string(Rational(-4, 6)) == "-2/3");
  CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("abc"), PreconditionError);
  CHECK_THROWS_AS(parse_rational(""), PreconditionError);
}

TEST_CASE("binomial coefficients at negative arguments") {
  CHECK(binomial(3, 3) == 1);
  CHECK(binomial(-3, 3) == -10);  // (-1)^3 C(5,3)
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(-1, 0) == 1);
  for (int n = 0; n <= 6; ++n) {
    for (std::size_t k = 0; k <= 5; ++k) {
      const BigInt sign = k % 2 == 0 ? 1 : -1;
      CHECK(binomial(-n, k) == sign * binomial(n + static_cast<int>(k) - 1, k));
    }
  }
}

TEST_CASE("eval_binpoly") {
  const BinPoly<BigInt> c3({0, 0, 0, 1});
  CHECK(eval_binpoly(c3, 3) == 1);
  CHECK(eval_binpoly(c3, -3) == -10);
  CHECK(eval_binpoly(BinPoly<BigInt>({0, 1, 2, 1}), 3) == 10);
  CHECK(eval_binpoly(BinPoly<BigInt>(), 5) == 0);
}

TEST_CASE("BinPoly trims trailing zeros and renders both bases") {
  const BinPoly<BigInt> p({0, 1, 2, 0, 0});
  CHECK(p.degree() == 2);
  CHECK(to_string(p) == "C(n,1) + 2*C(n,2)");
  // C(n,1) + 2 C(n,2) = n^2
  CHECK(to_string(to_monomial(p)) == "n^2");
  CHECK(to_string(to_monomial(BinPoly<BigInt>({0, 0, 0, 1}))) ==
        "(n^3 - 3*n^2 + 2*n)/6");
  CHECK(to_string(BinPoly<BigInt>({1})) == "1");
  CHECK(to_string(BinPoly<BigInt>()) == "0");
  CHECK(to_string(BinPoly<BigInt>({0, -1, 0, 2})) == "-C(n,1) + 2*C(n,3)");
}

TEST_CASE("monomial form agrees with the binomial form at sample points") {
  Random rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BigInt> coeffs;
    for (int k = 0; k < 6; ++k) coeffs.push_back(rng.between(-4, 4));
    const BinPoly<BigInt> p(coeffs);
    const auto m = to_monomial(p);
    for (int n = -4; n <= 6; ++n) {
      BigInt numer = 0;
      BigInt power = 1;
      for (const auto& c : m.numerators) {
        numer += c * power;
        power *= n;
      }
      CHECK(numer % m.denominator == 0);
      CHECK(numer / m.denominator == eval_binpoly(p, n));
    }
  }
}

TEST_CASE("Stirling numbers") {
  CHECK(stirling_second(3, 2) == 3);
  CHECK(stirling_second(5, 3) == 25);
  CHECK(stirling_first(3, 1) == 2);
  CHECK(stirling_first(3, 2) == -3);
  CHECK(stirling_first(4, 4) == 1);
}
