// Dense exact linear algebra over Eigen matrices of exact scalars.

#ifndef QSYM_LINALG_HPP_
#define QSYM_LINALG_HPP_

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qsym/scalar.hpp"

namespace qsym {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
using RowVector = Eigen::Matrix<S, 1, Eigen::Dynamic>;

using Index = Eigen::Index;

struct SingularMatrix : std::domain_error {
  using std::domain_error::domain_error;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class S>
struct Rref {
  Matrix<S> rows;               // nonzero rows only
  std::vector<Index> pivots;    // strictly increasing
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

// Gauss-Jordan elimination; returns only the nonzero rows.
template <class S>
Rref<S> rref(Matrix<S> m) {
  const Index rows = m.rows(), cols = m.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index sel = -1;
    for (Index i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r) m.row(sel).swap(m.row(r));
    const S inv = m(r, c).inverse();
    for (Index j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const S f = m(i, c);
      for (Index j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix<S> out = m.topRows(r);
  return {std::move(out), std::move(pivots)};
}

template <class S>
Index rank(const Matrix<S>& m) {
  return rref<S>(m).rank();
}

template <class S>
Matrix<S> identity(Index n) {
  return Matrix<S>::Identity(n, n);
}

template <class S>
Matrix<S> invert(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("invert: matrix not square");
  const Index n = m.rows();
  Matrix<S> aug(n, 2 * n);
  aug << m, identity<S>(n);
  Rref<S> red = rref<S>(std::move(aug));
  if (red.rank() < n || red.pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  return red.rows.rightCols(n);
}

// Right kernel basis, one vector per row.
template <class S>
Matrix<S> kernel(const Matrix<S>& m) {
  Rref<S> red = rref<S>(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : red.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free;
  for (Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  Matrix<S> out = Matrix<S>::Zero(static_cast<Index>(free.size()), cols);
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Index f = free[k];
    out(static_cast<Index>(k), f) = S(1);
    for (Index i = 0; i < red.rank(); ++i)
      out(static_cast<Index>(k), red.pivots[static_cast<std::size_t>(i)]) = -red.rows(i, f);
  }
  return out;
}

template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// n-fold Kronecker power in the lexicographic multi-index basis.
template <class S>
Matrix<S> kron_power(const Matrix<S>& m, int n) {
  if (m.rows() != m.cols()) throw DimensionMismatch("kron_power: matrix not square");
  if (n < 1) throw std::invalid_argument("kron_power: n must be positive");
  Matrix<S> out = m;
  for (int k = 1; k < n; ++k) out = kron<S>(out, m);
  return out;
}

template <class S>
S trace(const Matrix<S>& m) {
  S t(0);
  for (Index i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

template <class S>
bool is_zero(const Matrix<S>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

template <class S>
Matrix<S> diagonal(const std::vector<S>& d) {
  const Index n = static_cast<Index>(d.size());
  Matrix<S> out = Matrix<S>::Zero(n, n);
  for (Index i = 0; i < n; ++i) out(i, i) = d[static_cast<std::size_t>(i)];
  return out;
}

template <class T, class S>
Matrix<T> matrix_cast(const Matrix<S>& m) {
  Matrix<T> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = scalar_from<T>(m(i, j));
  return out;
}

}  // namespace qsym

#endif  // QSYM_LINALG_HPP_
