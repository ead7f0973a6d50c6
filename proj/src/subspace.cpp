#include "lsa/subspace.hpp"

#include <stdexcept>

namespace lsa {

GradedSubspace GradedSubspace::zero(std::size_t n, std::size_t m) {
  return GradedSubspace{Matrix(0, n), Matrix(0, m)};
}

GradedSubspace GradedSubspace::full(std::size_t n, std::size_t m) {
  return GradedSubspace{Matrix::identity(n), Matrix::identity(m)};
}

GradedSubspace GradedSubspace::span(std::size_t n, std::size_t m,
                                    const std::vector<GradedVector>& generators) {
  std::vector<std::vector<Rational>> evenRows, oddRows;
  for (const auto& g : generators) {
    if (g.even.size() != n || g.odd.size() != m)
      throw std::invalid_argument("span: generator sized for a different ambient");
    if (!g.is_homogeneous())
      throw std::invalid_argument("span: generator is not homogeneous");
    if (g.is_zero()) continue;
    if (g.degree() == 0)
      evenRows.push_back(g.even);
    else
      oddRows.push_back(g.odd);
  }
  Matrix evenStack(evenRows.size(), n), oddStack(oddRows.size(), m);
  for (std::size_t i = 0; i < evenRows.size(); ++i) evenStack.set_row(i, evenRows[i]);
  for (std::size_t i = 0; i < oddRows.size(); ++i) oddStack.set_row(i, oddRows[i]);
  return GradedSubspace{row_space(evenStack), row_space(oddStack)};
}

bool GradedSubspace::contains(const GradedVector& v) const {
  return in_row_span(evenBasis, v.even) && in_row_span(oddBasis, v.odd);
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
  for (std::size_t i = 0; i < other.evenBasis.rows(); ++i)
    if (!in_row_span(evenBasis, other.evenBasis.row(i))) return false;
  for (std::size_t i = 0; i < other.oddBasis.rows(); ++i)
    if (!in_row_span(oddBasis, other.oddBasis.row(i))) return false;
  return true;
}

std::vector<GradedVector> GradedSubspace::basis_vectors() const {
  std::vector<GradedVector> out;
  const std::size_t n = ambient_even(), m = ambient_odd();
  for (std::size_t i = 0; i < evenBasis.rows(); ++i)
    out.push_back(GradedVector{evenBasis.row(i), std::vector<Rational>(m)});
  for (std::size_t i = 0; i < oddBasis.rows(); ++i)
    out.push_back(GradedVector{std::vector<Rational>(n), oddBasis.row(i)});
  return out;
}

bool member(const GradedSubspace& s, const GradedVector& v) {
  if (s.ambient_even() != v.even.size() || s.ambient_odd() != v.odd.size())
    throw std::invalid_argument("member: sizes do not match");
  return s.contains(v);
}

GradedSubspace product_subspace(const SuperAlgebra& a, const GradedSubspace& u,
                                const GradedSubspace& w) {
  if (u.ambient_even() != a.even_dim() || u.ambient_odd() != a.odd_dim() ||
      w.ambient_even() != a.even_dim() || w.ambient_odd() != a.odd_dim())
    throw std::invalid_argument("product_subspace: subspace sized for a different algebra");
  std::vector<GradedVector> products;
  for (const auto& x : u.basis_vectors())
    for (const auto& y : w.basis_vectors()) {
      GradedVector p = a.bracket(x, y);
      if (!p.is_zero()) products.push_back(std::move(p));
    }
  return GradedSubspace::span(a.even_dim(), a.odd_dim(), products);
}

}  // namespace lsa
