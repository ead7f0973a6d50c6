#pragma once

#include "lsa/superalgebra.hpp"

#include <random>

namespace lsa::testing {

inline Rational random_rational(std::mt19937_64& rng, int span = 4) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(num(rng), den(rng));
}

// Arbitrary law with the right tensor shapes; sparse small-rational entries.
// Not Leibniz in general.
inline SuperAlgebra random_law(std::size_t n, std::size_t m, std::uint64_t seed,
                               int productCount = 6) {
  std::mt19937_64 rng(seed);
  SuperAlgebra alg(n, m);
  std::vector<BasisIndex> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back({0, i});
  for (std::size_t j = 0; j < m; ++j) basis.push_back({1, j});
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int t = 0; t < productCount; ++t) {
    const BasisIndex a = basis[pick(rng)], b = basis[pick(rng)];
    GradedVector value = GradedVector::zero(n, m);
    const int degree = (a.degree + b.degree) % 2;
    if (degree == 0 && n > 0) {
      std::uniform_int_distribution<std::size_t> slot(0, n - 1);
      value.even[slot(rng)] = random_rational(rng);
    } else if (degree == 1 && m > 0) {
      std::uniform_int_distribution<std::size_t> slot(0, m - 1);
      value.odd[slot(rng)] = random_rational(rng);
    }
    alg.set_product(a, b, value);
  }
  return alg;
}

// Invertible graded map: unit lower-triangular times unit upper-triangular
// blocks, so the determinant is 1 by construction.
inline GradedMap random_invertible_map(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto block = [&](std::size_t d) {
    Matrix lower = Matrix::identity(d), upper = Matrix::identity(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < i; ++j) lower.at(i, j) = random_rational(rng);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) upper.at(i, j) = random_rational(rng);
    return lower * upper;
  };
  return GradedMap{block(n), block(m)};
}

}  // namespace lsa::testing
