#include "lsa/superalgebra.hpp"

#include <set>
#include <stdexcept>

namespace lsa {

namespace {

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

bool GradedVector::is_zero() const { return all_zero(even) && all_zero(odd); }

bool GradedVector::is_homogeneous() const { return all_zero(even) || all_zero(odd); }

int GradedVector::degree() const {
  if (!is_homogeneous()) throw std::invalid_argument("degree of a non-homogeneous vector");
  return all_zero(odd) ? 0 : 1;
}

GradedVector& GradedVector::operator+=(const GradedVector& other) {
  if (even.size() != other.even.size() || odd.size() != other.odd.size())
    throw std::invalid_argument("graded vector size mismatch");
  for (std::size_t i = 0; i < even.size(); ++i) even[i] += other.even[i];
  for (std::size_t i = 0; i < odd.size(); ++i) odd[i] += other.odd[i];
  return *this;
}

GradedVector& GradedVector::operator-=(const GradedVector& other) {
  if (even.size() != other.even.size() || odd.size() != other.odd.size())
    throw std::invalid_argument("graded vector size mismatch");
  for (std::size_t i = 0; i < even.size(); ++i) even[i] -= other.even[i];
  for (std::size_t i = 0; i < odd.size(); ++i) odd[i] -= other.odd[i];
  return *this;
}

GradedVector GradedVector::operator+(const GradedVector& other) const {
  GradedVector out = *this;
  out += other;
  return out;
}

GradedVector GradedVector::operator-(const GradedVector& other) const {
  GradedVector out = *this;
  out -= other;
  return out;
}

GradedVector GradedVector::operator*(const Rational& scalar) const {
  GradedVector out = *this;
  for (auto& x : out.even) x *= scalar;
  for (auto& x : out.odd) x *= scalar;
  return out;
}

SuperAlgebra::SuperAlgebra(std::size_t n, std::size_t m,
                           std::vector<std::string> labelsEven,
                           std::vector<std::string> labelsOdd)
    : n_(n), m_(m), labelsEven_(std::move(labelsEven)), labelsOdd_(std::move(labelsOdd)),
      C_(n * n * n), D_(n * m * m), E_(m * n * m), F_(m * m * n) {
  if (labelsEven_.empty())
    for (std::size_t i = 0; i < n_; ++i) labelsEven_.push_back("X" + std::to_string(i));
  if (labelsOdd_.empty())
    for (std::size_t j = 0; j < m_; ++j) labelsOdd_.push_back("Y" + std::to_string(j + 1));
  if (labelsEven_.size() != n_ || labelsOdd_.size() != m_)
    throw std::invalid_argument("label list sizes must match dimensions");
  std::set<std::string> seen;
  for (const auto& l : labelsEven_)
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate label: " + l);
  for (const auto& l : labelsOdd_)
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate label: " + l);
}

const std::string& SuperAlgebra::label(BasisIndex b) const {
  return b.degree == 0 ? labelsEven_.at(b.index) : labelsOdd_.at(b.index);
}

std::optional<BasisIndex> SuperAlgebra::find_label(const std::string& name) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (labelsEven_[i] == name) return BasisIndex{0, i};
  for (std::size_t j = 0; j < m_; ++j)
    if (labelsOdd_[j] == name) return BasisIndex{1, j};
  return std::nullopt;
}

void SuperAlgebra::set_product(BasisIndex a, BasisIndex b, const GradedVector& value) {
  if ((a.degree == 0 && a.index >= n_) || (a.degree == 1 && a.index >= m_) ||
      (b.degree == 0 && b.index >= n_) || (b.degree == 1 && b.index >= m_))
    throw std::invalid_argument("basis index out of range");
  if (value.even.size() != n_ || value.odd.size() != m_)
    throw std::invalid_argument("product value size mismatch");
  const int resultDegree = (a.degree + b.degree) % 2;
  if ((resultDegree == 0 && !all_zero(value.odd)) || (resultDegree == 1 && !all_zero(value.even)))
    throw std::invalid_argument("grading violation in product [" + label(a) + "," + label(b) + "]");
  if (a.degree == 0 && b.degree == 0)
    for (std::size_t k = 0; k < n_; ++k) cc(a.index, b.index, k) = value.even[k];
  else if (a.degree == 0 && b.degree == 1)
    for (std::size_t k = 0; k < m_; ++k) dd(a.index, b.index, k) = value.odd[k];
  else if (a.degree == 1 && b.degree == 0)
    for (std::size_t k = 0; k < m_; ++k) ee(a.index, b.index, k) = value.odd[k];
  else
    for (std::size_t k = 0; k < n_; ++k) ff(a.index, b.index, k) = value.even[k];
}

GradedVector SuperAlgebra::basis_vector(BasisIndex b) const {
  GradedVector v = GradedVector::zero(n_, m_);
  if (b.degree == 0)
    v.even.at(b.index) = 1;
  else
    v.odd.at(b.index) = 1;
  return v;
}

GradedVector SuperAlgebra::bracket_basis(BasisIndex a, BasisIndex b) const {
  GradedVector out = GradedVector::zero(n_, m_);
  if (a.degree == 0 && b.degree == 0)
    for (std::size_t k = 0; k < n_; ++k) out.even[k] = c(a.index, b.index, k);
  else if (a.degree == 0 && b.degree == 1)
    for (std::size_t k = 0; k < m_; ++k) out.odd[k] = d(a.index, b.index, k);
  else if (a.degree == 1 && b.degree == 0)
    for (std::size_t k = 0; k < m_; ++k) out.odd[k] = e(a.index, b.index, k);
  else
    for (std::size_t k = 0; k < n_; ++k) out.even[k] = f(a.index, b.index, k);
  return out;
}

GradedVector SuperAlgebra::bracket(const GradedVector& u, const GradedVector& v) const {
  if (u.even.size() != n_ || u.odd.size() != m_ || v.even.size() != n_ || v.odd.size() != m_)
    throw std::invalid_argument("bracket: vector sized for a different algebra");
  GradedVector out = GradedVector::zero(n_, m_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (u.even[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (v.even[j] == 0) continue;
      const Rational s = u.even[i] * v.even[j];
      for (std::size_t k = 0; k < n_; ++k)
        if (c(i, j, k) != 0) out.even[k] += s * c(i, j, k);
    }
    for (std::size_t j = 0; j < m_; ++j) {
      if (v.odd[j] == 0) continue;
      const Rational s = u.even[i] * v.odd[j];
      for (std::size_t k = 0; k < m_; ++k)
        if (d(i, j, k) != 0) out.odd[k] += s * d(i, j, k);
    }
  }
  for (std::size_t i = 0; i < m_; ++i) {
    if (u.odd[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (v.even[j] == 0) continue;
      const Rational s = u.odd[i] * v.even[j];
      for (std::size_t k = 0; k < m_; ++k)
        if (e(i, j, k) != 0) out.odd[k] += s * e(i, j, k);
    }
    for (std::size_t j = 0; j < m_; ++j) {
      if (v.odd[j] == 0) continue;
      const Rational s = u.odd[i] * v.odd[j];
      for (std::size_t k = 0; k < n_; ++k)
        if (f(i, j, k) != 0) out.even[k] += s * f(i, j, k);
    }
  }
  return out;
}

Matrix SuperAlgebra::right_mul_even_block(const std::vector<Rational>& xEven) const {
  Matrix block(n_, n_);
  for (std::size_t j = 0; j < n_; ++j) {
    if (xEven[j] == 0) continue;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k)
        if (c(i, j, k) != 0) block.at(k, i) += c(i, j, k) * xEven[j];
  }
  return block;
}

Matrix SuperAlgebra::right_mul_odd_block(const std::vector<Rational>& xEven) const {
  Matrix block(m_, m_);
  for (std::size_t j = 0; j < n_; ++j) {
    if (xEven[j] == 0) continue;
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t k = 0; k < m_; ++k)
        if (e(i, j, k) != 0) block.at(k, i) += e(i, j, k) * xEven[j];
  }
  return block;
}

Matrix SuperAlgebra::right_mul_matrix(const GradedVector& x) const {
  if (x.even.size() != n_ || x.odd.size() != m_)
    throw std::invalid_argument("right_mul_matrix: vector sized for a different algebra");
  if (!x.is_homogeneous())
    throw std::invalid_argument("right_mul_matrix requires a homogeneous vector");
  Matrix out(n_ + m_, n_ + m_);
  if (all_zero(x.odd)) {
    const Matrix evenBlock = right_mul_even_block(x.even);
    const Matrix oddBlock = right_mul_odd_block(x.even);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) out.at(k, i) = evenBlock.at(k, i);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t k = 0; k < m_; ++k) out.at(n_ + k, n_ + i) = oddBlock.at(k, i);
  } else {
    for (std::size_t j = 0; j < m_; ++j) {
      if (x.odd[j] == 0) continue;
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < m_; ++k)
          if (d(i, j, k) != 0) out.at(n_ + k, i) += d(i, j, k) * x.odd[j];
      for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t k = 0; k < n_; ++k)
          if (f(i, j, k) != 0) out.at(k, n_ + i) += f(i, j, k) * x.odd[j];
    }
  }
  return out;
}

bool tensors_equal(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (a.even_dim() != b.even_dim() || a.odd_dim() != b.odd_dim()) return false;
  const std::size_t n = a.even_dim(), m = a.odd_dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.c(i, j, k) != b.c(i, j, k)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (a.d(i, j, k) != b.d(i, j, k)) return false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (a.e(i, j, k) != b.e(i, j, k)) return false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.f(i, j, k) != b.f(i, j, k)) return false;
  return true;
}

namespace {

std::vector<BasisIndex> all_basis(const SuperAlgebra& a) {
  std::vector<BasisIndex> out;
  for (std::size_t i = 0; i < a.even_dim(); ++i) out.push_back({0, i});
  for (std::size_t j = 0; j < a.odd_dim(); ++j) out.push_back({1, j});
  return out;
}

}  // namespace

std::vector<LeibnizDefect> leibniz_defects(const SuperAlgebra& a) {
  std::vector<LeibnizDefect> out;
  const auto basis = all_basis(a);
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis) {
        const int sign = (y.degree * z.degree) % 2 == 0 ? 1 : -1;
        GradedVector defect = a.bracket(a.basis_vector(x), a.bracket_basis(y, z));
        defect -= a.bracket(a.bracket_basis(x, y), a.basis_vector(z));
        const GradedVector last = a.bracket(a.bracket_basis(x, z), a.basis_vector(y));
        defect += sign == 1 ? last : last * Rational(-1);
        if (!defect.is_zero()) out.push_back({x, y, z, defect});
      }
  return out;
}

std::vector<OperatorDefect> operator_identity_defects(const SuperAlgebra& a) {
  std::vector<OperatorDefect> out;
  const auto basis = all_basis(a);
  std::vector<Matrix> rightMul;
  rightMul.reserve(basis.size());
  for (const auto& b : basis) rightMul.push_back(a.right_mul_matrix(a.basis_vector(b)));

  for (std::size_t xi = 0; xi < basis.size(); ++xi)
    for (std::size_t yi = 0; yi < basis.size(); ++yi) {
      const BasisIndex x = basis[xi], y = basis[yi];
      const GradedVector xy = a.bracket_basis(x, y);
      const Matrix lhs = a.right_mul_matrix(xy);
      Matrix rhs = rightMul[yi] * rightMul[xi];
      const Matrix second = rightMul[xi] * rightMul[yi];
      if ((x.degree * y.degree) % 2 == 0)
        rhs = rhs - second;
      else
        rhs = rhs + second;
      const Matrix diff = lhs - rhs;
      if (!diff.is_zero()) out.push_back({x, y, diff});
    }
  return out;
}

bool is_lie(const SuperAlgebra& a) {
  const auto basis = all_basis(a);
  for (const auto& x : basis)
    for (const auto& y : basis) {
      const GradedVector xy = a.bracket_basis(x, y);
      const GradedVector yx = a.bracket_basis(y, x);
      const int sign = (x.degree * y.degree) % 2 == 0 ? -1 : 1;
      if (xy != yx * Rational(sign)) return false;
    }
  return true;
}

SuperAlgebra apply_basis_change(const SuperAlgebra& a, const GradedMap& g) {
  const std::size_t n = a.even_dim(), m = a.odd_dim();
  if (g.evenBlock.rows() != n || g.evenBlock.cols() != n ||
      g.oddBlock.rows() != m || g.oddBlock.cols() != m)
    throw std::invalid_argument("basis change blocks sized for a different algebra");
  const auto evenInv = inverse(g.evenBlock);
  const auto oddInv = inverse(g.oddBlock);
  if (!evenInv || !oddInv) throw std::invalid_argument("basis change block is singular");

  auto column = [](const Matrix& block, std::size_t j) {
    std::vector<Rational> col(block.rows());
    for (std::size_t i = 0; i < block.rows(); ++i) col[i] = block.at(i, j);
    return col;
  };

  std::vector<GradedVector> newBasis;
  for (std::size_t i = 0; i < n; ++i)
    newBasis.push_back(GradedVector{column(g.evenBlock, i), std::vector<Rational>(m)});
  for (std::size_t j = 0; j < m; ++j)
    newBasis.push_back(GradedVector{std::vector<Rational>(n), column(g.oddBlock, j)});

  SuperAlgebra out(n, m, a.even_labels(), a.odd_labels());
  const auto basis = all_basis(a);
  for (std::size_t ai = 0; ai < basis.size(); ++ai)
    for (std::size_t bi = 0; bi < basis.size(); ++bi) {
      const GradedVector w = a.bracket(newBasis[ai], newBasis[bi]);
      GradedVector coords = GradedVector::zero(n, m);
      coords.even = evenInv->apply(w.even);
      coords.odd = oddInv->apply(w.odd);
      if (!coords.is_zero()) out.set_product(basis[ai], basis[bi], coords);
    }
  return out;
}

SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b) {
  const std::size_t n = a.even_dim() + b.even_dim();
  const std::size_t m = a.odd_dim() + b.odd_dim();

  std::vector<std::string> evenLabels = a.even_labels();
  std::vector<std::string> oddLabels = a.odd_labels();
  std::set<std::string> used(evenLabels.begin(), evenLabels.end());
  used.insert(oddLabels.begin(), oddLabels.end());
  auto fresh = [&](std::string candidate) {
    while (used.count(candidate)) candidate += "'";
    used.insert(candidate);
    return candidate;
  };
  for (const auto& l : b.even_labels()) evenLabels.push_back(fresh(l));
  for (const auto& l : b.odd_labels()) oddLabels.push_back(fresh(l));

  SuperAlgebra out(n, m, evenLabels, oddLabels);
  auto lift = [&](const SuperAlgebra& source, const GradedVector& v, bool second) {
    GradedVector w = GradedVector::zero(n, m);
    const std::size_t evenOff = second ? a.even_dim() : 0;
    const std::size_t oddOff = second ? a.odd_dim() : 0;
    for (std::size_t i = 0; i < source.even_dim(); ++i) w.even[evenOff + i] = v.even[i];
    for (std::size_t j = 0; j < source.odd_dim(); ++j) w.odd[oddOff + j] = v.odd[j];
    return w;
  };
  auto install = [&](const SuperAlgebra& source, bool second) {
    const std::size_t evenOff = second ? a.even_dim() : 0;
    const std::size_t oddOff = second ? a.odd_dim() : 0;
    for (std::size_t i = 0; i < source.even_dim(); ++i)
      for (std::size_t j = 0; j < source.even_dim(); ++j)
        out.set_product({0, evenOff + i}, {0, evenOff + j},
                        lift(source, source.bracket_basis({0, i}, {0, j}), second));
    for (std::size_t i = 0; i < source.even_dim(); ++i)
      for (std::size_t j = 0; j < source.odd_dim(); ++j)
        out.set_product({0, evenOff + i}, {1, oddOff + j},
                        lift(source, source.bracket_basis({0, i}, {1, j}), second));
    for (std::size_t i = 0; i < source.odd_dim(); ++i)
      for (std::size_t j = 0; j < source.even_dim(); ++j)
        out.set_product({1, oddOff + i}, {0, evenOff + j},
                        lift(source, source.bracket_basis({1, i}, {0, j}), second));
    for (std::size_t i = 0; i < source.odd_dim(); ++i)
      for (std::size_t j = 0; j < source.odd_dim(); ++j)
        out.set_product({1, oddOff + i}, {1, oddOff + j},
                        lift(source, source.bracket_basis({1, i}, {1, j}), second));
  };
  install(a, false);
  install(b, true);
  return out;
}

DegenerationResult degeneration_limit(const SuperAlgebra& a, const ScalingFamily& s) {
  const std::size_t n = a.even_dim(), m = a.odd_dim();
  if (s.evenExponents.size() != n || s.oddExponents.size() != m)
    throw std::invalid_argument("scaling family sized for a different algebra");

  SuperAlgebra out(n, m, a.even_labels(), a.odd_labels());
  std::optional<DivergenceWitness> divergence;

  auto exponent_of = [&](BasisIndex b) {
    return b.degree == 0 ? s.evenExponents[b.index] : s.oddExponents[b.index];
  };
  auto visit = [&](BasisIndex left, BasisIndex right) {
    if (divergence) return;
    const GradedVector value = a.bracket_basis(left, right);
    GradedVector kept = GradedVector::zero(n, m);
    bool any = false;
    auto handle = [&](BasisIndex result, const Rational& constant, Rational& slot) {
      if (constant == 0 || divergence) return;
      const Rational expo = exponent_of(left) + exponent_of(right) - exponent_of(result);
      if (expo == 0) {
        slot = constant;
        any = true;
      } else if (expo < 0) {
        divergence = DivergenceWitness{left, right, result, constant, expo};
      }
    };
    for (std::size_t k = 0; k < n; ++k) handle({0, k}, value.even[k], kept.even[k]);
    for (std::size_t k = 0; k < m; ++k) handle({1, k}, value.odd[k], kept.odd[k]);
    if (any && !divergence) out.set_product(left, right, kept);
  };

  const auto basis = all_basis(a);
  for (const auto& x : basis)
    for (const auto& y : basis) visit(x, y);

  if (divergence) return {std::nullopt, divergence};
  return {std::move(out), std::nullopt};
}

}  // namespace lsa
