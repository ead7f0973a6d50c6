#pragma once

#include "lsa/matrix.hpp"
#include "lsa/superalgebra.hpp"

#include <vector>

namespace lsa {

// Graded subspace in canonical form: RREF row bases over the even and odd
// coordinates. Equal subspaces have identical representations.
struct GradedSubspace {
  Matrix evenBasis;  // rows in Q^n
  Matrix oddBasis;   // rows in Q^m

  static GradedSubspace zero(std::size_t n, std::size_t m);
  static GradedSubspace full(std::size_t n, std::size_t m);
  // Span of homogeneous vectors; throws on a non-homogeneous generator.
  static GradedSubspace span(std::size_t n, std::size_t m,
                             const std::vector<GradedVector>& generators);

  std::size_t ambient_even() const { return evenBasis.cols(); }
  std::size_t ambient_odd() const { return oddBasis.cols(); }
  int dim() const { return static_cast<int>(evenBasis.rows() + oddBasis.rows()); }
  int even_dim() const { return static_cast<int>(evenBasis.rows()); }
  int odd_dim() const { return static_cast<int>(oddBasis.rows()); }

  bool operator==(const GradedSubspace& other) const = default;

  bool contains(const GradedVector& v) const;
  bool contains(const GradedSubspace& other) const;

  std::vector<GradedVector> basis_vectors() const;
};

// Exact membership test (rank-free: reduction against the RREF bases).
bool member(const GradedSubspace& s, const GradedVector& v);

// Span of [u,w] over all basis pairs of U and W, in canonical form.
GradedSubspace product_subspace(const SuperAlgebra& a, const GradedSubspace& u,
                                const GradedSubspace& w);

}  // namespace lsa
