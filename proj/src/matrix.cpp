#include "lsa/matrix.hpp"

#include <stdexcept>

namespace lsa {

Matrix Matrix::identity(std::size_t size) {
  Matrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Rational& b = other.at(k, j);
        if (b != 0) out.at(i, j) += a * b;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
  std::vector<Rational> out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
  return out;
}

void Matrix::set_row(std::size_t i, const std::vector<Rational>& values) {
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = values[j];
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: vector length mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& a = at(i, j);
      if (a != 0 && v[j] != 0) out[i] += a * v[j];
    }
  return out;
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
  Matrix a = m;
  if (pivots) pivots->clear();
  std::size_t pivotRow = 0;
  for (std::size_t col = 0; col < a.cols() && pivotRow < a.rows(); ++col) {
    std::size_t sel = pivotRow;
    while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivotRow)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(pivotRow, j));
    const Rational inv = Rational(1) / a.at(pivotRow, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(pivotRow, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pivotRow) continue;
      const Rational factor = a.at(i, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= factor * a.at(pivotRow, j);
    }
    if (pivots) pivots->push_back(col);
    ++pivotRow;
  }
  return a;
}

Matrix row_space(const Matrix& m) {
  std::vector<std::size_t> pivots;
  Matrix r = rref(m, &pivots);
  Matrix out(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = r.at(i, j);
  return out;
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

Matrix kernel(const Matrix& m) {
  std::vector<std::size_t> pivots;
  Matrix r = rref(m, &pivots);
  std::vector<bool> isPivot(m.cols(), false);
  for (std::size_t p : pivots) isPivot[p] = true;

  std::vector<std::size_t> freeCols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!isPivot[j]) freeCols.push_back(j);

  Matrix out(freeCols.size(), m.cols());
  for (std::size_t t = 0; t < freeCols.size(); ++t) {
    const std::size_t f = freeCols[t];
    out.at(t, f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) out.at(t, pivots[i]) = -r.at(i, f);
  }
  return row_space(out);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t d = m.rows();
  Matrix aug(d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, d + i) = 1;
  }
  Matrix r = rref(aug);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (r.at(i, j) != Rational(i == j ? 1 : 0)) return std::nullopt;
  Matrix out(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out.at(i, j) = r.at(i, d + j);
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack width mismatch");
  Matrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out.at(i, j) = top.at(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out.at(top.rows() + i, j) = bottom.at(i, j);
  return out;
}

std::vector<Rational> reduce_by_row_span(const Matrix& rows, std::vector<Rational> v) {
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    std::size_t pivot = 0;
    while (pivot < rows.cols() && rows.at(i, pivot) == 0) ++pivot;
    if (pivot == rows.cols()) continue;
    const Rational factor = v[pivot];
    if (factor == 0) continue;
    for (std::size_t j = pivot; j < rows.cols(); ++j) v[j] -= factor * rows.at(i, j);
  }
  return v;
}

bool in_row_span(const Matrix& rows, const std::vector<Rational>& v) {
  const auto residue = reduce_by_row_span(rows, v);
  for (const auto& x : residue)
    if (x != 0) return false;
  return true;
}

std::vector<int> nilpotent_jordan_partition(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("jordan partition needs a square matrix");
  const std::size_t d = m.rows();
  std::vector<std::size_t> ranks{d};
  Matrix power = m;
  while (ranks.back() > 0) {
    const std::size_t r = rank(power);
    ranks.push_back(r);
    if (r == 0) break;
    if (ranks.size() > d + 1) throw std::domain_error("matrix is not nilpotent");
    power = power * m;
  }
  // blocks of size >= k: ranks[k-1] - ranks[k]
  std::vector<int> atLeast;
  for (std::size_t k = 1; k < ranks.size(); ++k)
    atLeast.push_back(static_cast<int>(ranks[k - 1]) - static_cast<int>(ranks[k]));
  std::vector<int> partition;
  for (std::size_t k = atLeast.size(); k >= 1; --k) {
    const int exactly = atLeast[k - 1] - (k < atLeast.size() ? atLeast[k] : 0);
    for (int c = 0; c < exactly; ++c) partition.push_back(static_cast<int>(k));
  }
  return partition;
}

}  // namespace lsa
