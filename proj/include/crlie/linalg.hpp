#pragma once

#include <optional>
#include <vector>

#include "crlie/gauss.hpp"

namespace crlie {

template <class K>
using Vec = std::vector<K>;

/// Dense row-major matrix over an exact scalar.
template <class K>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<K> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, K(0)) {}

  K& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const K& operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = K(1);
    return m;
  }

  Vec<K> row(int r) const {
    Vec<K> v(cols);
    for (int c = 0; c < cols; ++c) v[c] = (*this)(r, c);
    return v;
  }
  Vec<K> col(int c) const {
    Vec<K> v(rows);
    for (int r = 0; r < rows; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_row(int r, const Vec<K>& v) {
    for (int c = 0; c < cols; ++c) (*this)(r, c) = v[c];
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
};

template <class K>
Mat<K> operator+(const Mat<K>& x, const Mat<K>& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw Error("Mat: shape mismatch in +");
  Mat<K> z = x;
  for (size_t k = 0; k < z.a.size(); ++k) z.a[k] = z.a[k] + y.a[k];
  return z;
}

template <class K>
Mat<K> operator-(const Mat<K>& x, const Mat<K>& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw Error("Mat: shape mismatch in -");
  Mat<K> z = x;
  for (size_t k = 0; k < z.a.size(); ++k) z.a[k] = z.a[k] - y.a[k];
  return z;
}

template <class K>
Mat<K> operator*(const Mat<K>& x, const Mat<K>& y) {
  if (x.cols != y.rows) throw Error("Mat: shape mismatch in *");
  Mat<K> z(x.rows, y.cols);
  for (int r = 0; r < x.rows; ++r)
    for (int k = 0; k < x.cols; ++k) {
      const K& xr = x(r, k);
      if (xr == K(0)) continue;
      for (int c = 0; c < y.cols; ++c) z(r, c) = z(r, c) + xr * y(k, c);
    }
  return z;
}

template <class K>
Mat<K> scale(const Mat<K>& x, const K& s) {
  Mat<K> z = x;
  for (auto& v : z.a) v = v * s;
  return z;
}

template <class K>
Vec<K> mat_vec(const Mat<K>& m, const Vec<K>& v) {
  if (m.cols != static_cast<int>(v.size())) throw Error("Mat: shape mismatch in mat_vec");
  Vec<K> out(m.rows, K(0));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (!(m(r, c) == K(0))) out[r] = out[r] + m(r, c) * v[c];
  return out;
}

template <class K>
Vec<K> vec_add(const Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) throw Error("Vec: size mismatch");
  Vec<K> out(a);
  for (size_t k = 0; k < out.size(); ++k) out[k] = out[k] + b[k];
  return out;
}

template <class K>
Vec<K> vec_sub(const Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) throw Error("Vec: size mismatch");
  Vec<K> out(a);
  for (size_t k = 0; k < out.size(); ++k) out[k] = out[k] - b[k];
  return out;
}

template <class K>
Vec<K> vec_scale(const Vec<K>& a, const K& s) {
  Vec<K> out(a);
  for (auto& v : out) v = v * s;
  return out;
}

template <class K>
bool vec_is_zero(const Vec<K>& a) {
  for (const auto& v : a)
    if (!(v == K(0))) return false;
  return true;
}

/// In-place reduction to row echelon form; returns pivot column indices.
/// Requires K to be a field (uses inverses of pivots).
template <class K>
std::vector<int> echelonize(Mat<K>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pr = -1;
    for (int r = row; r < m.rows; ++r) {
      if (!(m(r, col) == K(0))) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m(pr, c), m(row, c));
    K inv = K(1) / m(row, col);
    for (int c = col; c < m.cols; ++c) m(row, c) = m(row, c) * inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m(r, col) == K(0)) continue;
      K f = m(r, col);
      for (int c = col; c < m.cols; ++c) m(r, c) = m(r, c) - f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class K>
int rank(Mat<K> m) {
  return static_cast<int>(echelonize(m).size());
}

/// Solves A x = b; empty when inconsistent. With free columns the particular
/// solution sets them to zero.
template <class K>
std::optional<Vec<K>> solve(const Mat<K>& A, const Vec<K>& b) {
  if (A.rows != static_cast<int>(b.size())) throw Error("solve: shape mismatch");
  Mat<K> aug(A.rows, A.cols + 1);
  for (int r = 0; r < A.rows; ++r) {
    for (int c = 0; c < A.cols; ++c) aug(r, c) = A(r, c);
    aug(r, A.cols) = b[r];
  }
  std::vector<int> pivots = echelonize(aug);
  for (int p : pivots)
    if (p == A.cols) return std::nullopt;  // pivot in the rhs column
  Vec<K> x(A.cols, K(0));
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(static_cast<int>(k), A.cols);
  return x;
}

/// Basis of the null space of A, one vector per row of the result.
template <class K>
Mat<K> nullspace(const Mat<K>& A) {
  Mat<K> m = A;
  std::vector<int> pivots = echelonize(m);
  std::vector<bool> is_pivot(A.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < A.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat<K> basis(static_cast<int>(free_cols.size()), A.cols);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis(static_cast<int>(k), fc) = K(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      basis(static_cast<int>(k), pivots[r]) = K(0) - m(static_cast<int>(r), fc);
  }
  return basis;
}

template <class K>
std::optional<Mat<K>> inverse(const Mat<K>& A) {
  if (A.rows != A.cols) throw Error("inverse: matrix not square");
  int n = A.rows;
  Mat<K> aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = A(r, c);
    aug(r, n + r) = K(1);
  }
  std::vector<int> pivots = echelonize(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
  Mat<K> inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

template <class K>
Mat<K> transpose(const Mat<K>& A) {
  Mat<K> t(A.cols, A.rows);
  for (int r = 0; r < A.rows; ++r)
    for (int c = 0; c < A.cols; ++c) t(c, r) = A(r, c);
  return t;
}

Mat<GaussRational> conj_transpose(const Mat<GaussRational>& A);

/// Commutator XY - YX.
template <class K>
Mat<K> commutator(const Mat<K>& X, const Mat<K>& Y) {
  return X * Y - Y * X;
}

template <class K>
K trace(const Mat<K>& A) {
  if (A.rows != A.cols) throw Error("trace: matrix not square");
  K t(0);
  for (int k = 0; k < A.rows; ++k) t = t + A(k, k);
  return t;
}

/// Signature (pos, neg, zero) of a Hermitian matrix over the Gaussian
/// rationals (real symmetric included), by exact congruence diagonalization.
struct Signature {
  int pos = 0, neg = 0, zero = 0;
  friend bool operator==(const Signature& a, const Signature& b) {
    return a.pos == b.pos && a.neg == b.neg && a.zero == b.zero;
  }
};
Signature hermitian_signature(Mat<GaussRational> h);

}  // namespace crlie
