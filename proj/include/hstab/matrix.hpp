#pragma once

#include <cstddef>
#include <vector>

#include "hstab/rational.hpp"

namespace hstab {

/// Dense matrix over Rational. Row-major storage, value semantics.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  Matrix operator*(const Matrix& o) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  Matrix transpose() const;

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

struct RrefResult {
  int rank = 0;
  Matrix echelon;
  std::vector<int> pivots;  // pivot column per echelon row, ascending
};

/// Reduced row echelon form with leftmost-column pivots; the echelon matrix
/// is the canonical representative of the row space.
RrefResult rref(const Matrix& m);

/// Determinant of a square matrix.
Rational det(const Matrix& m);

/// Inverse; throws std::domain_error on singular input.
Matrix inverse(const Matrix& m);

/// Basis of the right kernel, one vector per non-pivot column, each in
/// canonical rref-complement form.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);

/// All k-element column subsets (ascending, in lexicographic order) whose
/// k x k minor is nonzero, where k = m.rows(). Throws std::invalid_argument
/// if rank(m) < k: a rank-deficient matrix has no nonzero maximal minor.
std::vector<std::vector<int>> minor_support(const Matrix& m);

}  // namespace hstab
