#pragma once

#include "lsa/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lsa {

// Dense matrix over the exact rationals. Small dimensions throughout the
// library (basis sizes), so no sparsity structure beyond zero-skipping in
// the product.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t size);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const Matrix& other) const = default;

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;

  std::vector<Rational> row(std::size_t i) const;
  void set_row(std::size_t i, const std::vector<Rational>& values);

  // Matrix acting on a column coordinate vector.
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form (leading 1s, zeros above and below each pivot).
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

// Canonical basis of the row space: RREF with zero rows dropped. Two equal
// row spaces always get identical representations.
Matrix row_space(const Matrix& m);

std::size_t rank(const Matrix& m);

// Canonical basis (as rows) of {x : m * x = 0}.
Matrix kernel(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

Matrix vstack(const Matrix& top, const Matrix& bottom);

// `rows` must be in RREF form (as produced by row_space). Reduction against
// such rows is a linear map; the residual is zero exactly on the row span.
std::vector<Rational> reduce_by_row_span(const Matrix& rows, std::vector<Rational> v);
bool in_row_span(const Matrix& rows, const std::vector<Rational>& v);

// Jordan block sizes of a nilpotent matrix, weakly decreasing, from the rank
// sequence of its powers. Throws std::domain_error if m is not nilpotent.
std::vector<int> nilpotent_jordan_partition(const Matrix& m);

}  // namespace lsa
