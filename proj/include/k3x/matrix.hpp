#ifndef K3X_MATRIX_HPP
#define K3X_MATRIX_HPP

#include <vector>

#include "k3x/rational.hpp"

namespace k3x {

template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, const T& fill = T(0))
      : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * cols, fill) {}
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw value_error("matrix dimension mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }
  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw value_error("matrix dimension mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }
  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

 private:
  int rows_, cols_;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using QMatrix = Matrix<Rat>;

QMatrix to_rational(const IntMatrix& m);
// entries must all be integers
IntMatrix to_integer(const QMatrix& m);

Int det(const IntMatrix& m);          // Bareiss, fraction-free
Rat det(const QMatrix& m);            // Gaussian
int rank(const QMatrix& m);
QMatrix inverse(const QMatrix& m);    // throws if singular
// basis of the right kernel, as columns
QMatrix kernel(const QMatrix& m);
// solve m x = b; empty optional when inconsistent
bool solve(const QMatrix& m, const std::vector<Rat>& b, std::vector<Rat>& x);

struct SmithForm {
  IntMatrix d, u, v;  // u * input * v = d, diagonal, d_i | d_{i+1}
};
SmithForm smith_normal_form(const IntMatrix& m);

// row-style Hermite normal form of the row span (rows may start rational
// after scaling by a common denominator elsewhere); returns the canonical
// row basis with zero rows dropped
IntMatrix hnf_rows(const IntMatrix& m);

}  // namespace k3x

#endif
