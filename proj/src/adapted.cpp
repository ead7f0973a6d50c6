#include "lsa/adapted.hpp"

#include "lsa/subspace.hpp"

#include <random>
#include <stdexcept>

namespace lsa {

bool satisfies_zf_relations(const SuperAlgebra& a) {
  const std::size_t n = a.even_dim(), m = a.odd_dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational expected = (j == 0 && i + 1 == k && i + 1 <= n - 1) ? 1 : 0;
        if (a.c(i, j, k) != expected) return false;
      }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Rational expected = (j == 0 && i + 1 == k && i + 1 <= m - 1) ? 1 : 0;
        if (a.e(i, j, k) != expected) return false;
      }
  return true;
}

namespace {

std::vector<std::vector<Rational>> generator_candidates(std::size_t dim, std::uint64_t seed,
                                                        int randomCount) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Rational> v(dim);
    v[i] = 1;
    out.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      std::vector<Rational> v(dim);
      v[i] = 1;
      v[j] = 1;
      out.push_back(std::move(v));
    }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  for (int s = 0; s < randomCount; ++s) {
    std::vector<Rational> v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = Rational(num(rng), den(rng));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

GradedMap adapted_basis_zf(const SuperAlgebra& a, std::uint64_t seed) {
  const std::size_t n = a.even_dim(), m = a.odd_dim();
  if (n == 0) throw std::invalid_argument("adapted_basis_zf requires an even part");
  if (classify_shape(a) != Shape::ZeroFiliform)
    throw std::invalid_argument("adapted_basis_zf requires a zero-filiform law");

  const GradedSubspace evenWhole{Matrix::identity(n), Matrix(0, m)};
  const GradedSubspace derived = product_subspace(a, evenWhole, evenWhole);

  auto chain_from = [&](const GradedVector& start, const GradedVector& generator,
                        std::size_t length) -> std::optional<std::vector<GradedVector>> {
    std::vector<GradedVector> chain{start};
    for (std::size_t t = 1; t < length; ++t) chain.push_back(a.bracket(chain.back(), generator));
    // Independence check; nilpotency of R_generator makes the next bracket
    // vanish automatically once these are independent.
    Matrix stack(length, start.even.size() + start.odd.size());
    for (std::size_t t = 0; t < length; ++t) {
      std::vector<Rational> row;
      row.insert(row.end(), chain[t].even.begin(), chain[t].even.end());
      row.insert(row.end(), chain[t].odd.begin(), chain[t].odd.end());
      stack.set_row(t, row);
    }
    if (rank(stack) != length) return std::nullopt;
    return chain;
  };

  for (const auto& xCoords : generator_candidates(n, seed, 64)) {
    const GradedVector x{xCoords, std::vector<Rational>(m)};
    if (x.is_zero() || derived.contains(x)) continue;
    const auto evenChain = chain_from(x, x, n);
    if (!evenChain) continue;

    std::optional<std::vector<GradedVector>> oddChain;
    if (m == 0) {
      oddChain = std::vector<GradedVector>{};
    } else {
      for (const auto& yCoords : generator_candidates(m, seed ^ 0x9e3779b97f4a7c15ull, 64)) {
        const GradedVector y{std::vector<Rational>(n), yCoords};
        if (y.is_zero()) continue;
        oddChain = chain_from(y, x, m);
        if (oddChain) break;
      }
    }
    if (!oddChain) continue;

    GradedMap g{Matrix(n, n), Matrix(m, m)};
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t row = 0; row < n; ++row) g.evenBlock.at(row, col) = (*evenChain)[col].even[row];
    for (std::size_t col = 0; col < m; ++col)
      for (std::size_t row = 0; row < m; ++row) g.oddBlock.at(row, col) = (*oddChain)[col].odd[row];

    const SuperAlgebra transformed = apply_basis_change(a, g);
    if (satisfies_zf_relations(transformed)) return g;
  }
  throw std::runtime_error("adapted_basis_zf: no chain generator found");
}

}  // namespace lsa
