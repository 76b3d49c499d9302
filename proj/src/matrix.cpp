#include "hstab/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace hstab {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  data_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_)
      throw std::invalid_argument("Matrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
  Matrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("Matrix: dimension mismatch");
  std::vector<Rational> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.echelon = m;
  Matrix& a = res.echelon;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < a.rows(); ++r)
      if (!a.at(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(row, j));
    Rational inv = Rational(1) / a.at(row, col);
    for (int j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      Rational f = a.at(r, col);
      for (int j = col; j < a.cols(); ++j) a.at(r, j) -= f * a.at(row, j);
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

Rational det(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square matrix");
  Matrix a = m;
  int n = a.rows();
  Rational d(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      d = -d;
    }
    d *= a.at(col, col);
    Rational inv = Rational(1) / a.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (a.at(r, col).is_zero()) continue;
      Rational f = a.at(r, col) * inv;
      for (int j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
    }
  }
  return d;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rational(1);
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1)
    throw std::domain_error("inverse: singular matrix");
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = r.echelon.at(i, n + j);
  return out;
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = Rational(1);
    for (int row = 0; row < r.rank; ++row)
      v[r.pivots[row]] = -r.echelon.at(row, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Nonzero test for a k x k integer minor via Bareiss fraction-free
// elimination; exact and allocation-light for the k <= 4 hot path.
bool integer_minor_nonzero(const std::vector<std::vector<mpz_class>>& m,
                           const std::vector<int>& cols) {
  int k = static_cast<int>(cols.size());
  std::vector<mpz_class> a(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[i * k + j] = m[i][cols[j]];
  mpz_class prev(1);
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int r = col; r < k; ++r)
      if (a[r * k + col] != 0) { pivot = r; break; }
    if (pivot < 0) return false;
    if (pivot != col)
      for (int j = 0; j < k; ++j) std::swap(a[pivot * k + j], a[col * k + j]);
    for (int r = col + 1; r < k; ++r) {
      for (int j = col + 1; j < k; ++j) {
        a[r * k + j] = a[col * k + col] * a[r * k + j] - a[r * k + col] * a[col * k + j];
        mpz_divexact(a[r * k + j].get_mpz_t(), a[r * k + j].get_mpz_t(),
                     prev.get_mpz_t());
      }
      a[r * k + col] = 0;
    }
    prev = a[col * k + col];
  }
  return a[(k - 1) * k + (k - 1)] != 0;
}

}  // namespace

std::vector<std::vector<int>> minor_support(const Matrix& m) {
  int k = m.rows(), n = m.cols();
  if (k <= 0 || k > n) throw std::invalid_argument("minor_support: bad shape");
  if (rref(m).rank < k)
    throw std::invalid_argument("minor_support: rank-deficient input");

  // Row scaling by the denominator lcm leaves minor nonzero-ness unchanged,
  // so the enumeration can run over integers.
  std::vector<std::vector<mpz_class>> zi(k, std::vector<mpz_class>(n));
  for (int i = 0; i < k; ++i) {
    mpz_class l(1);
    for (int j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
    for (int j = 0; j < n; ++j) {
      mpz_class scale;
      mpz_divexact(scale.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
      zi[i][j] = m.at(i, j).num() * scale;
    }
  }

  std::vector<std::vector<int>> support;
  std::vector<int> cols(k);
  for (int i = 0; i < k; ++i) cols[i] = i;
  while (true) {
    if (integer_minor_nonzero(zi, cols)) support.push_back(cols);
    int i = k - 1;
    while (i >= 0 && cols[i] == n - k + i) --i;
    if (i < 0) break;
    ++cols[i];
    for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return support;
}

}  // namespace hstab
