#include "hopfdg/binpoly.hpp"

#include <vector>

namespace hopfdg {

BigInt binomial(const BigInt& n, std::size_t k) {
  BigInt num = 1;
  for (std::size_t i = 0; i < k; ++i) num *= n - i;
  return num / factorial(k);
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt stirling_first(std::size_t k, std::size_t j) {
  // s(k+1, j) = s(k, j-1) - k * s(k, j)
  std::vector<BigInt> row{1};
  for (std::size_t m = 0; m < k; ++m) {
    std::vector<BigInt> next(row.size() + 1, 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      next[i + 1] += row[i];
      next[i] -= row[i] * m;
    }
    row = std::move(next);
  }
  return j < row.size() ? row[j] : BigInt(0);
}

BigInt stirling_second(std::size_t n, std::size_t k) {
  // S(m+1, i) = i * S(m, i) + S(m, i-1)
  std::vector<BigInt> row{1};
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<BigInt> next(row.size() + 1, 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      next[i] += row[i] * i;
      next[i + 1] += row[i];
    }
    row = std::move(next);
  }
  return k < row.size() ? row[k] : BigInt(0);
}

}  // namespace hopfdg
