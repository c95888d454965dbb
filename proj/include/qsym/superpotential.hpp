// Twisted superpotentials s in V^{(x)m}: nondegeneracy, twist recovery,
// derivative relation spaces, traceability and quantum dimensions.

#ifndef QSYM_SUPERPOTENTIAL_HPP_
#define QSYM_SUPERPOTENTIAL_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsym/linalg.hpp"
#include "qsym/subspace.hpp"
#include "qsym/tensor.hpp"

namespace qsym {

struct Degenerate : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotTwisted : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotStable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class S>
struct TwistedSuperpotential {
  Tensor<S> tensor;
  Matrix<S> twist;  // P with (P (x) id) phi(s) = s
  bool nondegenerate = false;

  int arity() const { return tensor.arity(); }
  int dim() const { return tensor.dim(); }
};

// Only the first slot is checked unless `strict`, which checks every
// flattening (the cyclic shifts of s).
template <class S>
bool is_nondegenerate(const Tensor<S>& s, bool strict = false) {
  if (rank<S>(flatten_first(s)) != s.dim()) return false;
  if (!strict) return true;
  Tensor<S> t = s;
  for (int k = 1; k < s.arity(); ++k) {
    t = cyclic_shift(t);
    if (rank<S>(flatten_first(t)) != s.dim()) return false;
  }
  return true;
}

// Solves P * flatten_first(phi(s)) = flatten_first(s).  A solution is unique
// and invertible because flatten_first(s) has full row rank.
template <class S>
std::optional<Matrix<S>> find_twist(const Tensor<S>& s) {
  if (!is_nondegenerate(s)) throw Degenerate("find_twist: superpotential is degenerate");
  const Tensor<S> shifted = cyclic_shift(s);
  const Matrix<S> x = flatten_first(shifted);
  const Matrix<S> y = flatten_first(s);
  const Index q = s.dim();
  // x^T P^T = y^T
  Matrix<S> aug(x.cols(), 2 * q);
  aug << x.transpose(), y.transpose();
  Rref<S> red = rref<S>(aug);
  if (red.rank() != q || red.pivots.back() >= q) return std::nullopt;
  Matrix<S> pt = red.rows.rightCols(q);
  Matrix<S> p = pt.transpose();
  if (!(apply_on_factor(shifted, p, 1) == s)) return std::nullopt;
  if (rank<S>(p) != q) return std::nullopt;
  return p;
}

template <class S>
TwistedSuperpotential<S> make_superpotential(const Tensor<S>& s) {
  auto p = find_twist(s);
  if (!p) throw NotTwisted("no twist P with (P (x) id) phi(s) = s");
  return {s, *p, true};
}

// Nondegenerate superpotential of arity 2 with coefficient matrix e; the twist
// is e e^{-T}.
template <class S>
TwistedSuperpotential<S> m2_pack(const Matrix<S>& e) {
  if (e.rows() != e.cols()) throw DimensionMismatch("m2_pack: matrix not square");
  Matrix<S> inv_t = invert<S>(e).transpose();
  Tensor<S> t(2, static_cast<int>(e.rows()));
  for (Index i = 0; i < e.rows(); ++i)
    for (Index j = 0; j < e.cols(); ++j) t.add({static_cast<int>(i), static_cast<int>(j)}, e(i, j));
  return {std::move(t), e * inv_t, true};
}

template <class S>
Matrix<S> m2_unpack(const TwistedSuperpotential<S>& sp) {
  if (sp.arity() != 2) throw std::invalid_argument("m2_unpack: arity must be 2");
  return flatten_first(sp.tensor);
}

// d^{m-N}(k s) inside V^{(x)N}.
template <class S>
Subspace<S> relations(const TwistedSuperpotential<S>& sp, int n) {
  if (n < 2 || n > sp.arity()) throw std::invalid_argument("relations: need 2 <= N <= m");
  Subspace<S> w = Subspace<S>::span(sp.tensor);
  for (int k = 0; k < sp.arity() - n; ++k) w = derivative_space(w);
  return w;
}

// span{s} == intersection over i+j = m-L of V^i (x) d^{m-L}(k s) (x) V^j.
template <class S>
bool is_L_traceable(const TwistedSuperpotential<S>& sp, int l) {
  if (l < 2 || l > sp.arity()) throw std::invalid_argument("is_L_traceable: need 2 <= L <= m");
  const Subspace<S> r = relations(sp, l);
  const int pad = sp.arity() - l;
  Subspace<S> cap = embed_padded(r, 0, pad);
  for (int i = 1; i <= pad; ++i) cap = subspace_intersect(cap, embed_padded(r, i, pad - i));
  return cap == Subspace<S>::span(sp.tensor);
}

// phi(s) == (-1)^{d+1} s.
template <class S>
bool is_cy_shape(const Tensor<S>& s, int d) {
  Tensor<S> target = s;
  if (d % 2 == 0) target *= S(-1);
  return cyclic_shift(s) == target;
}

template <class S>
bool is_cy_shape(const TwistedSuperpotential<S>& sp, int d) {
  return is_cy_shape(sp.tensor, d);
}

// Degree-one action of the Nakayama automorphism: (-1)^{d+1} P^{-T}.
template <class S>
Matrix<S> nakayama_matrix(const TwistedSuperpotential<S>& sp, int d) {
  Matrix<S> out = invert<S>(sp.twist).transpose();
  if (d % 2 == 0) out *= S(-1);
  return out;
}

// Trace of (P^{-T})^{(x)n}, acting on coordinate rows, restricted to W.
template <class S>
S qdim_subspace(const Subspace<S>& w, const Matrix<S>& twist) {
  if (twist.rows() != w.dim() || twist.cols() != w.dim()) throw DimensionMismatch("qdim_subspace: twist size");
  if (w.degree() == 0) return w.rank() == 0 ? S(0) : S(1);
  const Matrix<S> pit = invert<S>(twist).transpose();
  // Acts on coordinate rows: w -> w * (P^{-T})^{(x)n}.
  const Matrix<S> op_t = kron_power<S>(pit, w.degree());
  S tr(0);
  RowVector<S> coords;
  for (Index i = 0; i < w.rank(); ++i) {
    RowVector<S> image = w.basis().row(i) * op_t;
    if (!w.coordinates(image, coords)) throw NotStable("qdim_subspace: W is not stable under the twist action");
    tr += coords(i);
  }
  return tr;
}

// Quantum dimension of V from the character alone: tr(P^{-1}).
template <class S>
S qdim_trace(const Matrix<S>& twist) {
  return trace<S>(invert<S>(twist));
}

// tr(E^{-1} E^T), the invariant separating m = 2 components.
template <class S>
S m2_trace_invariant(const Matrix<S>& e) {
  return trace<S>(Matrix<S>(invert<S>(e) * e.transpose()));
}

template <class S>
struct AlgebraData {
  TwistedSuperpotential<S> superpotential;
  int n;                   // relation degree
  Subspace<S> relations;   // d^{m-N}(k s)
};

template <class S>
AlgebraData<S> make_algebra(const TwistedSuperpotential<S>& sp, int n) {
  return {sp, n, relations(sp, n)};
}

// W_i = V^i for i < N, otherwise the intersection of all paddings of R.
template <class S>
std::vector<Subspace<S>> w_sequence(const AlgebraData<S>& alg, int bound, Index limit = kDefaultAmbientLimit) {
  const int q = alg.superpotential.dim();
  std::vector<Subspace<S>> out;
  for (int i = 0; i <= bound; ++i) {
    if (ipow(q, i) > limit) throw SizeLimit("w_sequence: ambient dimension exceeds limit");
    if (i < alg.n) {
      out.push_back(Subspace<S>::full(q, i));
      continue;
    }
    const int pad = i - alg.n;
    Subspace<S> cap = embed_padded(alg.relations, 0, pad, limit);
    for (int s = 1; s <= pad && cap.rank() > 0; ++s) cap = subspace_intersect(cap, embed_padded(alg.relations, s, pad - s, limit));
    out.push_back(std::move(cap));
  }
  return out;
}

inline int rho(int i, int n) { return i % 2 == 0 ? (i / 2) * n : (i / 2) * n + 1; }

template <class S>
struct QSeries {
  std::vector<S> coeffs;  // degrees 0..trunc
  int trunc = 0;
};

// Expansion of 1 / sum_{0<=i<=d} (-1)^i d_e(W_rho(i)) t^rho(i).  Only the
// Hilbert series of the algebra when A(e,N) is N-Koszul AS-regular of
// dimension d; computed regardless.
template <class S>
QSeries<S> quantum_hilbert_series(const AlgebraData<S>& alg, int d, int trunc,
                                  Index limit = kDefaultAmbientLimit) {
  const int top = rho(d, alg.n);
  const std::vector<Subspace<S>> w = w_sequence(alg, top, limit);
  std::vector<S> denom(static_cast<std::size_t>(std::max(top, trunc)) + 1, S(0));
  for (int i = 0; i <= d; ++i) {
    const int deg = rho(i, alg.n);
    S qd = qdim_subspace(w[static_cast<std::size_t>(deg)], alg.superpotential.twist);
    if (i % 2 == 1) qd = -qd;
    denom[static_cast<std::size_t>(deg)] += qd;
  }
  if (!denom[0].is_one()) throw std::logic_error("quantum_hilbert_series: constant term is not 1");
  QSeries<S> out;
  out.trunc = trunc;
  out.coeffs.assign(static_cast<std::size_t>(trunc) + 1, S(0));
  out.coeffs[0] = S(1);
  for (int k = 1; k <= trunc; ++k) {
    S c(0);
    for (int j = 1; j <= k && j < static_cast<int>(denom.size()); ++j)
      c -= denom[static_cast<std::size_t>(j)] * out.coeffs[static_cast<std::size_t>(k - j)];
    out.coeffs[static_cast<std::size_t>(k)] = c;
  }
  return out;
}

}  // namespace qsym

#endif  // QSYM_SUPERPOTENTIAL_HPP_
