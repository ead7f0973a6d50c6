#pragma once

#include "lsa/matrix.hpp"
#include "lsa/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lsa {

// Element of the Z2-graded space: n even coordinates and m odd ones.
struct GradedVector {
  std::vector<Rational> even;
  std::vector<Rational> odd;

  static GradedVector zero(std::size_t n, std::size_t m) {
    return GradedVector{std::vector<Rational>(n), std::vector<Rational>(m)};
  }

  bool is_zero() const;
  bool is_homogeneous() const;  // even part or odd part vanishes
  // Degree of a homogeneous vector: 0 (even) or 1 (odd); zero counts as even.
  int degree() const;

  GradedVector& operator+=(const GradedVector& other);
  GradedVector& operator-=(const GradedVector& other);
  GradedVector operator+(const GradedVector& other) const;
  GradedVector operator-(const GradedVector& other) const;
  GradedVector operator*(const Rational& scalar) const;
  bool operator==(const GradedVector& other) const = default;
};

// Position of a homogeneous basis vector: degree 0 with index < n, or
// degree 1 with index < m.
struct BasisIndex {
  int degree = 0;
  std::size_t index = 0;
  bool operator==(const BasisIndex& other) const = default;
};

// A Z2-graded algebra given by structure constants on a homogeneous basis.
// The four tensors enforce the grading structurally:
//   even*even -> even (C), even*odd -> odd (D),
//   odd*even  -> odd (E), odd*odd  -> even (F).
class SuperAlgebra {
 public:
  SuperAlgebra(std::size_t n, std::size_t m,
               std::vector<std::string> labelsEven = {},
               std::vector<std::string> labelsOdd = {});

  std::size_t even_dim() const { return n_; }
  std::size_t odd_dim() const { return m_; }
  std::size_t total_dim() const { return n_ + m_; }

  const std::vector<std::string>& even_labels() const { return labelsEven_; }
  const std::vector<std::string>& odd_labels() const { return labelsOdd_; }
  const std::string& label(BasisIndex b) const;
  std::optional<BasisIndex> find_label(const std::string& name) const;

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return C_[(i * n_ + j) * n_ + k]; }
  const Rational& d(std::size_t i, std::size_t j, std::size_t k) const { return D_[(i * m_ + j) * m_ + k]; }
  const Rational& e(std::size_t i, std::size_t j, std::size_t k) const { return E_[(i * n_ + j) * m_ + k]; }
  const Rational& f(std::size_t i, std::size_t j, std::size_t k) const { return F_[(i * m_ + j) * n_ + k]; }

  // Defines [a,b] = value. The value's grading must match deg(a)+deg(b).
  void set_product(BasisIndex a, BasisIndex b, const GradedVector& value);

  GradedVector basis_vector(BasisIndex b) const;
  GradedVector bracket_basis(BasisIndex a, BasisIndex b) const;
  GradedVector bracket(const GradedVector& u, const GradedVector& v) const;

  // Matrix of R_x : v -> [v,x] on the concatenated basis (even block first).
  // x must be homogeneous.
  Matrix right_mul_matrix(const GradedVector& x) const;

  // R_x restricted to the even (resp. odd) part, for homogeneous even x.
  Matrix right_mul_even_block(const std::vector<Rational>& xEven) const;
  Matrix right_mul_odd_block(const std::vector<Rational>& xEven) const;

 private:
  std::size_t n_, m_;
  std::vector<std::string> labelsEven_, labelsOdd_;
  std::vector<Rational> C_, D_, E_, F_;

  Rational& cc(std::size_t i, std::size_t j, std::size_t k) { return C_[(i * n_ + j) * n_ + k]; }
  Rational& dd(std::size_t i, std::size_t j, std::size_t k) { return D_[(i * m_ + j) * m_ + k]; }
  Rational& ee(std::size_t i, std::size_t j, std::size_t k) { return E_[(i * n_ + j) * m_ + k]; }
  Rational& ff(std::size_t i, std::size_t j, std::size_t k) { return F_[(i * m_ + j) * n_ + k]; }
};

// Structural equality of laws: dimensions and tensors (labels ignored).
bool tensors_equal(const SuperAlgebra& a, const SuperAlgebra& b);

struct LeibnizDefect {
  BasisIndex x, y, z;
  GradedVector value;
};

// Nonzero values of [x,[y,z]] - [[x,y],z] + (-1)^{deg y * deg z}[[x,z],y]
// over all ordered basis triples. Empty exactly when the law is a Leibniz
// superalgebra (basis triples suffice by multilinearity).
std::vector<LeibnizDefect> leibniz_defects(const SuperAlgebra& a);

struct OperatorDefect {
  BasisIndex x, y;
  Matrix difference;
};

// Nonzero values of R_{[x,y]} - (R_y R_x - (-1)^{deg x * deg y} R_x R_y)
// over all basis pairs; the operator form of the same identity.
std::vector<OperatorDefect> operator_identity_defects(const SuperAlgebra& a);

// Graded antisymmetry [x,y] = -(-1)^{deg x * deg y}[y,x] on all basis pairs.
bool is_lie(const SuperAlgebra& a);

// Invertible graded basis change; evenBlock is n x n, oddBlock is m x m.
// Columns hold the new basis vectors in old coordinates.
struct GradedMap {
  Matrix evenBlock;
  Matrix oddBlock;
};

// The transformed law: new[x,y] = g^{-1}(old[g(x), g(y)]).
// Throws std::invalid_argument if a block is singular or mis-sized.
SuperAlgebra apply_basis_change(const SuperAlgebra& a, const GradedMap& g);

// Block sum of laws; all cross products vanish. Duplicate labels from the
// right summand get a prime appended.
SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b);

// One-parameter diagonal scaling t^e on each basis vector; exponents are
// exact rationals (half-integers occur).
struct ScalingFamily {
  std::vector<Rational> evenExponents;
  std::vector<Rational> oddExponents;
};

struct DivergenceWitness {
  BasisIndex left, right, result;
  Rational constant;
  Rational exponent;  // negative
};

struct DegenerationResult {
  std::optional<SuperAlgebra> limit;
  std::optional<DivergenceWitness> divergence;
  bool diverged() const { return divergence.has_value(); }
};

// Structure constant gamma^k_{ij} picks up the factor t^{e_i+e_j-e_k}.
// The t->0 limit keeps exponent 0, drops exponent > 0 and diverges on a
// negative exponent at a nonzero constant. Exact exponent arithmetic only.
DegenerationResult degeneration_limit(const SuperAlgebra& a, const ScalingFamily& s);

}  // namespace lsa
