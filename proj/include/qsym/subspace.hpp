// Subspaces of V^{(x)n} held as reduced row echelon bases.

#ifndef QSYM_SUBSPACE_HPP_
#define QSYM_SUBSPACE_HPP_

#include <stdexcept>
#include <utility>
#include <vector>

#include "qsym/linalg.hpp"
#include "qsym/tensor.hpp"

namespace qsym {

struct AmbientMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SizeLimit : std::length_error {
  using std::length_error::length_error;
};

inline constexpr Index kDefaultAmbientLimit = Index{1} << 20;

template <class S>
class Subspace {
 public:
  // Row span of `rows` inside V^{(x)degree}, dim V = dim.
  Subspace(int dim, int degree, const Matrix<S>& rows) : dim_(dim), degree_(degree) {
    if (rows.cols() != ipow(dim, degree)) throw AmbientMismatch("subspace rows have wrong length");
    Rref<S> red = rref<S>(rows);
    basis_ = std::move(red.rows);
    pivots_ = std::move(red.pivots);
  }

  static Subspace zero(int dim, int degree) {
    return Subspace(dim, degree, Matrix<S>(0, ipow(dim, degree)));
  }
  static Subspace full(int dim, int degree) {
    return Subspace(dim, degree, identity<S>(ipow(dim, degree)));
  }
  static Subspace span(const std::vector<Tensor<S>>& ts, int dim, int degree) {
    Matrix<S> rows(static_cast<Index>(ts.size()), ipow(dim, degree));
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (ts[i].arity() != degree || ts[i].dim() != dim) throw AmbientMismatch("span: tensor shape mismatch");
      rows.row(static_cast<Index>(i)) = ts[i].to_vector();
    }
    return Subspace(dim, degree, rows);
  }
  static Subspace span(const Tensor<S>& t) { return span({t}, t.dim(), t.arity()); }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  Index ambient_dim() const { return ipow(dim_, degree_); }
  Index rank() const { return basis_.rows(); }
  const Matrix<S>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  Tensor<S> basis_tensor(Index i) const {
    return Tensor<S>::from_vector(degree_, dim_, basis_.row(i));
  }

  // Coordinates of v in the RREF basis, or false if v is outside the span.
  bool coordinates(const RowVector<S>& v, RowVector<S>& coords) const {
    coords = RowVector<S>::Zero(rank());
    RowVector<S> rest = v;
    for (Index i = 0; i < rank(); ++i) {
      const S c = rest(pivots_[static_cast<std::size_t>(i)]);
      if (c.is_zero()) continue;
      coords(i) = c;
      rest -= c * basis_.row(i);
    }
    for (Index j = 0; j < rest.size(); ++j)
      if (!rest(j).is_zero()) return false;
    return true;
  }

  bool contains(const RowVector<S>& v) const {
    RowVector<S> coords;
    return coordinates(v, coords);
  }

  bool contains(const Subspace& o) const {
    same_ambient(o);
    for (Index i = 0; i < o.rank(); ++i)
      if (!contains(RowVector<S>(o.basis_.row(i)))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.basis_ == b.basis_;
  }

  void same_ambient(const Subspace& o) const {
    if (o.dim_ != dim_ || o.degree_ != degree_) throw AmbientMismatch("subspaces live in different ambients");
  }

 private:
  int dim_;
  int degree_;
  Matrix<S> basis_;
  std::vector<Index> pivots_;
};

// A cap B through the left kernel of the stacked bases.
template <class S>
Subspace<S> subspace_intersect(const Subspace<S>& a, const Subspace<S>& b) {
  a.same_ambient(b);
  if (a.rank() == 0 || b.rank() == 0) return Subspace<S>::zero(a.dim(), a.degree());
  Matrix<S> stacked(a.rank() + b.rank(), a.ambient_dim());
  stacked << a.basis(), b.basis();
  Matrix<S> left = kernel<S>(Matrix<S>(stacked.transpose()));
  Matrix<S> vectors = left.leftCols(a.rank()) * a.basis();
  return Subspace<S>(a.dim(), a.degree(), vectors);
}

template <class S>
Subspace<S> subspace_sum(const Subspace<S>& a, const Subspace<S>& b) {
  a.same_ambient(b);
  Matrix<S> stacked(a.rank() + b.rank(), a.ambient_dim());
  stacked << a.basis(), b.basis();
  return Subspace<S>(a.dim(), a.degree(), stacked);
}

// Span of contract_first(w, i) over basis vectors w and dual indices i.
template <class S>
Subspace<S> derivative_space(const Subspace<S>& w) {
  if (w.degree() < 2) throw std::invalid_argument("derivative_space: degree must be at least 2");
  const Index block = ipow(w.dim(), w.degree() - 1);
  Matrix<S> rows(w.rank() * w.dim(), block);
  // Row-major reading of a coordinate vector in V^{(x)n} splits it into
  // q consecutive blocks, one per value of the first index.
  for (Index r = 0; r < w.rank(); ++r)
    for (int i = 0; i < w.dim(); ++i) rows.row(r * w.dim() + i) = w.basis().row(r).segment(i * block, block);
  return Subspace<S>(w.dim(), w.degree() - 1, rows);
}

// V^{(x)left} (x) W (x) V^{(x)right}.
template <class S>
Subspace<S> embed_padded(const Subspace<S>& w, int left, int right, Index limit = kDefaultAmbientLimit) {
  const int degree = left + w.degree() + right;
  if (ipow(w.dim(), degree) > limit) throw SizeLimit("embed_padded: ambient dimension exceeds limit");
  Matrix<S> rows = w.basis();
  if (left > 0) rows = kron<S>(identity<S>(ipow(w.dim(), left)), rows);
  if (right > 0) rows = kron<S>(rows, identity<S>(ipow(w.dim(), right)));
  return Subspace<S>(w.dim(), degree, rows);
}

}  // namespace qsym

#endif  // QSYM_SUBSPACE_HPP_
