#pragma once

// Dense exact linear algebra over a field K (plain-fraction Gauss-Jordan,
// no Bareiss). Deterministic pivoting: for each column, the first row from
// the top with a nonzero entry. solve() returns the solution with all free
// variables set to zero; kernel_basis() follows the standard free-column
// construction, ordered by increasing free column index.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "psrank/scalars.hpp"

namespace psrank {

template <class K>
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<K> a;  // row-major

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, K(0)) {
    if (r < 0 || c < 0) throw std::invalid_argument("Matrix: negative dimension");
  }

  K& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const K& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  Matrix transposed() const {
    Matrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

struct RrefInfo {
  int rank = 0;
  std::vector<int> pivot_cols;
};

template <class K>
RrefInfo rref_in_place(Matrix<K>& m) {
  RrefInfo info;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int r = row; r < m.rows; ++r) {
      if (!is_zero(m.at(r, col))) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
    K inv = K(1) / m.at(row, col);
    for (int c = col; c < m.cols; ++c) m.at(row, c) = K(m.at(row, c) * inv);
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || is_zero(m.at(r, col))) continue;
      K f = m.at(r, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) = K(m.at(r, c) - f * m.at(row, c));
    }
    info.pivot_cols.push_back(col);
    ++row;
  }
  info.rank = row;
  return info;
}

template <class K>
std::pair<Matrix<K>, RrefInfo> rref(Matrix<K> m) {
  RrefInfo info = rref_in_place(m);
  return {std::move(m), info};
}

template <class K>
int rank(const Matrix<K>& m) {
  Matrix<K> c = m;
  return rref_in_place(c).rank;
}

// Least structured solution of A x = b: free variables are zero.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& A, const std::vector<K>& b) {
  if (static_cast<int>(b.size()) != A.rows)
    throw std::invalid_argument("solve: dimension mismatch");
  Matrix<K> aug(A.rows, A.cols + 1);
  for (int r = 0; r < A.rows; ++r) {
    for (int c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
    aug.at(r, A.cols) = b[r];
  }
  RrefInfo info = rref_in_place(aug);
  for (int p : info.pivot_cols)
    if (p == A.cols) return std::nullopt;  // inconsistent
  std::vector<K> x(A.cols, K(0));
  for (size_t i = 0; i < info.pivot_cols.size(); ++i)
    x[info.pivot_cols[i]] = aug.at(static_cast<int>(i), A.cols);
  return x;
}

template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& A) {
  Matrix<K> m = A;
  RrefInfo info = rref_in_place(m);
  std::vector<bool> is_pivot(A.cols, false);
  for (int p : info.pivot_cols) is_pivot[p] = true;
  std::vector<std::vector<K>> basis;
  for (int j = 0; j < A.cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<K> v(A.cols, K(0));
    v[j] = K(1);
    for (size_t i = 0; i < info.pivot_cols.size(); ++i)
      v[info.pivot_cols[i]] = K(-m.at(static_cast<int>(i), j));
    basis.push_back(std::move(v));
  }
  return basis;
}

// vectors are rows here; target is in their span iff appending it does not
// raise the rank.
template <class K>
bool in_span(const std::vector<std::vector<K>>& vectors, const std::vector<K>& target) {
  if (vectors.empty()) {
    for (const K& t : target)
      if (!is_zero(t)) return false;
    return true;
  }
  size_t n = target.size();
  for (const auto& v : vectors)
    if (v.size() != n) throw std::invalid_argument("in_span: dimension mismatch");
  Matrix<K> m(static_cast<int>(vectors.size()), static_cast<int>(n));
  for (size_t r = 0; r < vectors.size(); ++r)
    for (size_t c = 0; c < n; ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = vectors[r][c];
  int r1 = rank(m);
  Matrix<K> m2(m.rows + 1, m.cols);
  m2.a.assign(m.a.begin(), m.a.end());
  m2.a.insert(m2.a.end(), target.begin(), target.end());
  return rank(m2) == r1;
}

}  // namespace psrank
