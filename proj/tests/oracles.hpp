// Independent reference computations and random instance generators shared
// by the unit and acceptance tests.  Nothing here calls the code under test
// except for constructing inputs.

#ifndef QSYM_TESTS_ORACLES_HPP_
#define QSYM_TESTS_ORACLES_HPP_

#include <random>
#include <vector>

#include "qsym/linalg.hpp"
#include "qsym/tensor.hpp"

namespace oracle {

using qsym::Index;
using qsym::Matrix;
using qsym::Rational;
using qsym::Tensor;

inline Rational rnd(std::mt19937& rng, int lo, int hi) {
  return Rational(std::uniform_int_distribution<int>(lo, hi)(rng));
}

// Determinant by cofactor expansion; only used for n <= 4.
inline Rational det(const Matrix<Rational>& m) {
  const Index n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational total(0);
  for (Index c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Matrix<Rational> minor(n - 1, n - 1);
    for (Index i = 1; i < n; ++i)
      for (Index j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    const Rational term = m(0, c) * det(minor);
    total += c % 2 == 0 ? term : -term;
  }
  return total;
}

inline Matrix<Rational> random_matrix(std::mt19937& rng, Index n, int lo, int hi) {
  Matrix<Rational> m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = rnd(rng, lo, hi);
  return m;
}

inline Matrix<Rational> random_invertible(std::mt19937& rng, Index n, int lo, int hi) {
  for (;;) {
    Matrix<Rational> m = random_matrix(rng, n, lo, hi);
    if (!det(m).is_zero()) return m;
  }
}

// Inverse of a 2x2 matrix from the adjugate formula.
inline Matrix<Rational> inverse2(const Matrix<Rational>& m) {
  const Rational d = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Matrix<Rational> out(2, 2);
  out << m(1, 1) / d, -m(0, 1) / d, -m(1, 0) / d, m(0, 0) / d;
  return out;
}

// Inverse by cofactors, n <= 4.
inline Matrix<Rational> inverse(const Matrix<Rational>& m) {
  const Index n = m.rows();
  const Rational d = det(m);
  Matrix<Rational> out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Matrix<Rational> minor(n - 1, n - 1);
      for (Index r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (Index c = 0, cc = 0; c < n; ++c)
          if (c != i) minor(rr, cc++) = m(r, c);
        ++rr;
      }
      const Rational cof = (i + j) % 2 == 0 ? det(minor) : -det(minor);
      out(i, j) = cof / d;
    }
  return out;
}

inline Rational trace(const Matrix<Rational>& m) {
  Rational t(0);
  for (Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// tr(E^{-1} E^T) by cofactor inversion.
inline Rational m2_invariant(const Matrix<Rational>& e) {
  return trace(Matrix<Rational>(inverse(e) * e.transpose()));
}

inline Tensor<Rational> random_tensor(std::mt19937& rng, int arity, int dim, int lo = -3, int hi = 3) {
  Tensor<Rational> t(arity, dim);
  const Index n = qsym::ipow(dim, arity);
  for (Index k = 0; k < n; ++k) t.add(qsym::unflatten(k, dim, arity), rnd(rng, lo, hi));
  return t;
}

// Binomial(n + 2, 2): dimension of degree-n polynomials in 3 variables.
inline std::uint64_t poly3_dim(int n) { return static_cast<std::uint64_t>((n + 1) * (n + 2) / 2); }

}  // namespace oracle

#endif  // QSYM_TESTS_ORACLES_HPP_
