#include "k3x/matrix.hpp"

#include <algorithm>

namespace k3x {

QMatrix to_rational(const IntMatrix& m) {
  QMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

IntMatrix to_integer(const QMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw value_error("non-integer matrix entry");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

Int det(const IntMatrix& m0) {
  if (m0.rows() != m0.cols()) throw value_error("determinant of non-square");
  int n = m0.rows();
  if (n == 0) return 1;
  IntMatrix m = m0;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (m(r, k) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(piv, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = t / prev;  // exact by Bareiss
      }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

Rat det(const QMatrix& m0) {
  if (m0.rows() != m0.cols()) throw value_error("determinant of non-square");
  QMatrix m = m0;
  int n = m.rows();
  Rat d(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(m(piv, c), m(col, c));
      d = -d;
    }
    d *= m(col, col);
    Rat inv = 1 / m(col, col);
    for (int r = col + 1; r < n; ++r) {
      Rat f = m(r, col) * inv;
      if (f == 0) continue;
      for (int c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return d;
}

namespace {

// row echelon with column pivots recorded; returns pivot columns
std::vector<int> echelon(QMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    Rat inv = 1 / m(r, c);
    for (int j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(const QMatrix& m0) {
  QMatrix m = m0;
  return static_cast<int>(echelon(m).size());
}

QMatrix inverse(const QMatrix& m0) {
  if (m0.rows() != m0.cols()) throw value_error("inverse of non-square");
  int n = m0.rows();
  QMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m0(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> piv = echelon(aug);
  if (static_cast<int>(piv.size()) != n || piv.back() >= n)
    throw value_error("singular matrix");
  QMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

QMatrix kernel(const QMatrix& m0) {
  QMatrix m = m0;
  std::vector<int> piv = echelon(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int c : piv) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
  QMatrix k(m.cols(), static_cast<int>(free_cols.size()));
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    int fc = free_cols[fi];
    k(fc, static_cast<int>(fi)) = 1;
    for (size_t pi = 0; pi < piv.size(); ++pi)
      k(piv[pi], static_cast<int>(fi)) = -m(static_cast<int>(pi), fc);
  }
  return k;
}

bool solve(const QMatrix& m, const std::vector<Rat>& b, std::vector<Rat>& x) {
  if (static_cast<int>(b.size()) != m.rows())
    throw value_error("solve dimension mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[static_cast<size_t>(i)];
  }
  std::vector<int> piv = echelon(aug);
  if (!piv.empty() && piv.back() == m.cols()) return false;  // inconsistent
  x.assign(static_cast<size_t>(m.cols()), Rat(0));
  for (size_t pi = 0; pi < piv.size(); ++pi)
    x[static_cast<size_t>(piv[pi])] = aug(static_cast<int>(pi), m.cols());
  return true;
}

SmithForm smith_normal_form(const IntMatrix& m0) {
  int rows = m0.rows(), cols = m0.cols();
  SmithForm f{m0, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  IntMatrix& d = f.d;
  IntMatrix& u = f.u;
  IntMatrix& v = f.v;

  auto swap_rows = [&](int a, int b) {
    for (int c = 0; c < cols; ++c) std::swap(d(a, c), d(b, c));
    for (int c = 0; c < rows; ++c) std::swap(u(a, c), u(b, c));
  };
  auto swap_cols = [&](int a, int b) {
    for (int r = 0; r < rows; ++r) std::swap(d(r, a), d(r, b));
    for (int r = 0; r < cols; ++r) std::swap(v(r, a), v(r, b));
  };
  auto add_row = [&](int dst, int src, const Int& k) {
    for (int c = 0; c < cols; ++c) d(dst, c) += k * d(src, c);
    for (int c = 0; c < rows; ++c) u(dst, c) += k * u(src, c);
  };
  auto add_col = [&](int dst, int src, const Int& k) {
    for (int r = 0; r < rows; ++r) d(r, dst) += k * d(r, src);
    for (int r = 0; r < cols; ++r) v(r, dst) += k * v(r, src);
  };
  auto negate_row = [&](int a) {
    for (int c = 0; c < cols; ++c) d(a, c) = -d(a, c);
    for (int c = 0; c < rows; ++c) u(a, c) = -u(a, c);
  };

  int t = std::min(rows, cols);
  for (int k = 0; k < t; ++k) {
    // find smallest nonzero entry in the remaining block as pivot
    for (;;) {
      int pr = -1, pc = -1;
      Int best = 0;
      for (int i = k; i < rows; ++i)
        for (int j = k; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          Int a = abs(d(i, j));
          if (pr < 0 || a < best) {
            best = a;
            pr = i;
            pc = j;
          }
        }
      if (pr < 0) break;  // block is zero
      if (pr != k) swap_rows(pr, k);
      if (pc != k) swap_cols(pc, k);
      bool reduced = true;
      for (int i = k + 1; i < rows; ++i) {
        if (d(i, k) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, k).get_mpz_t(), d(k, k).get_mpz_t());
        add_row(i, k, -q);
        if (d(i, k) != 0) reduced = false;
      }
      for (int j = k + 1; j < cols; ++j) {
        if (d(k, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d(k, j).get_mpz_t(), d(k, k).get_mpz_t());
        add_col(j, k, -q);
        if (d(k, j) != 0) reduced = false;
      }
      if (!reduced) continue;
      // pivot must divide the rest of the block for the invariant chain
      bool divides = true;
      for (int i = k + 1; i < rows && divides; ++i)
        for (int j = k + 1; j < cols && divides; ++j)
          if (d(i, j) % d(k, k) != 0) {
            add_row(k, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (d(k, k) < 0) negate_row(k);
  }
  return f;
}

IntMatrix hnf_rows(const IntMatrix& m0) {
  IntMatrix m = m0;
  int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // reduce column c below row r by gcd steps
    for (;;) {
      int piv = -1;
      Int best = 0;
      for (int i = r; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        Int a = abs(m(i, c));
        if (piv < 0 || a < best) {
          best = a;
          piv = i;
        }
      }
      if (piv < 0) break;
      if (piv != r)
        for (int j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
      bool clean = true;
      for (int i = r + 1; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
        for (int j = 0; j < cols; ++j) m(i, j) -= q * m(r, j);
        if (m(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < rows && m(r, c) != 0) {
      if (m(r, c) < 0)
        for (int j = 0; j < cols; ++j) m(r, j) = -m(r, j);
      // reduce entries above the pivot into canonical range [0, pivot)
      for (int i = 0; i < r; ++i) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
        if (q != 0)
          for (int j = 0; j < cols; ++j) m(i, j) -= q * m(r, j);
      }
      ++r;
    }
  }
  IntMatrix out(r, cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace k3x
