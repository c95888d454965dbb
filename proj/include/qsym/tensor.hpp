// Sparse elements of V^{(x)m} and the multilinear operations on them.
//
// Coordinates on V^{(x)n} are ordered lexicographically by multi-index:
// (i_1,...,i_n) sits at position sum_k i_k q^{n-k} (indices 0-based here,
// 1-based in files).

#ifndef QSYM_TENSOR_HPP_
#define QSYM_TENSOR_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "qsym/linalg.hpp"

namespace qsym {

using MultiIndex = std::vector<int>;

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

inline Index ipow(Index base, int exp) {
  Index r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Lexicographic position of a multi-index.
inline Index flat_index(const MultiIndex& idx, int dim) {
  Index pos = 0;
  for (int i : idx) pos = pos * dim + i;
  return pos;
}

inline MultiIndex unflatten(Index pos, int dim, int arity) {
  MultiIndex idx(static_cast<std::size_t>(arity));
  for (int k = arity - 1; k >= 0; --k) {
    idx[static_cast<std::size_t>(k)] = static_cast<int>(pos % dim);
    pos /= dim;
  }
  return idx;
}

template <class S>
class Tensor {
 public:
  Tensor(int arity, int dim) : arity_(arity), dim_(dim) {
    if (arity < 1 || dim < 1) throw std::invalid_argument("tensor arity and dim must be positive");
  }

  static Tensor basis(int dim, const MultiIndex& idx) {
    Tensor t(static_cast<int>(idx.size()), dim);
    t.add(idx, S(1));
    return t;
  }

  // Coefficient vector in lexicographic coordinates.
  static Tensor from_vector(int arity, int dim, const RowVector<S>& v) {
    if (v.size() != ipow(dim, arity)) throw DimensionMismatch("from_vector: wrong length");
    Tensor t(arity, dim);
    for (Index k = 0; k < v.size(); ++k)
      if (!v(k).is_zero()) t.coeffs_.emplace(unflatten(k, dim, arity), v(k));
    return t;
  }

  int arity() const { return arity_; }
  int dim() const { return dim_; }
  const std::map<MultiIndex, S>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t nnz() const { return coeffs_.size(); }

  S coeff(const MultiIndex& idx) const {
    check(idx);
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? S(0) : it->second;
  }

  void add(const MultiIndex& idx, const S& c) {
    check(idx);
    if (c.is_zero()) return;
    auto [it, fresh] = coeffs_.try_emplace(idx, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  RowVector<S> to_vector() const {
    RowVector<S> v = RowVector<S>::Zero(ipow(dim_, arity_));
    for (const auto& [idx, c] : coeffs_) v(flat_index(idx, dim_)) = c;
    return v;
  }

  Tensor& operator+=(const Tensor& o) {
    same_shape(o);
    for (const auto& [idx, c] : o.coeffs_) add(idx, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    same_shape(o);
    for (const auto& [idx, c] : o.coeffs_) add(idx, -c);
    return *this;
  }
  Tensor& operator*=(const S& c) {
    if (c.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& kv : coeffs_) kv.second *= c;
    return *this;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const S& c, Tensor t) { return t *= c; }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.arity_ == b.arity_ && a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check(const MultiIndex& idx) const {
    if (static_cast<int>(idx.size()) != arity_) throw IndexOutOfRange("multi-index has wrong length");
    for (int i : idx)
      if (i < 0 || i >= dim_) throw IndexOutOfRange("multi-index entry out of range");
  }
  void same_shape(const Tensor& o) const {
    if (o.arity_ != arity_ || o.dim_ != dim_) throw DimensionMismatch("tensor shapes differ");
  }

  int arity_;
  int dim_;
  std::map<MultiIndex, S> coeffs_;
};

// phi: v_1 (x) ... (x) v_m  ->  v_m (x) v_1 (x) ... (x) v_{m-1}.
template <class S>
Tensor<S> cyclic_shift(const Tensor<S>& t) {
  if (t.arity() < 2) throw std::invalid_argument("cyclic_shift: arity must be at least 2");
  Tensor<S> out(t.arity(), t.dim());
  for (const auto& [idx, c] : t.coeffs()) {
    MultiIndex moved(idx.size());
    moved[0] = idx.back();
    std::copy(idx.begin(), idx.end() - 1, moved.begin() + 1);
    out.add(moved, c);
  }
  return out;
}

// Applies m to tensor factor `slot` (1-based).
template <class S>
Tensor<S> apply_on_factor(const Tensor<S>& t, const Matrix<S>& m, int slot) {
  if (m.rows() != t.dim() || m.cols() != t.dim())
    throw DimensionMismatch("apply_on_factor: matrix size does not match tensor dimension");
  if (slot < 1 || slot > t.arity()) throw IndexOutOfRange("apply_on_factor: slot out of range");
  const auto k = static_cast<std::size_t>(slot - 1);
  Tensor<S> out(t.arity(), t.dim());
  for (const auto& [idx, c] : t.coeffs()) {
    MultiIndex img = idx;
    const int col = idx[k];
    for (int row = 0; row < t.dim(); ++row) {
      const S& entry = m(row, col);
      if (entry.is_zero()) continue;
      img[k] = row;
      out.add(img, entry * c);
    }
  }
  return out;
}

// Applies m to every factor: m^{(x)arity}.
template <class S>
Tensor<S> apply_on_all(const Tensor<S>& t, const Matrix<S>& m) {
  Tensor<S> out = t;
  for (int slot = 1; slot <= t.arity(); ++slot) out = apply_on_factor(out, m, slot);
  return out;
}

// q x q^{m-1} matrix with entry (i, (i_2..i_m)) = coeff(i, i_2, ..., i_m).
template <class S>
Matrix<S> flatten_first(const Tensor<S>& t) {
  if (t.arity() < 2) throw std::invalid_argument("flatten_first: arity must be at least 2");
  Matrix<S> out = Matrix<S>::Zero(t.dim(), ipow(t.dim(), t.arity() - 1));
  for (const auto& [idx, c] : t.coeffs()) {
    MultiIndex rest(idx.begin() + 1, idx.end());
    out(idx[0], flat_index(rest, t.dim())) = c;
  }
  return out;
}

// Pairs the first slot with the dual basis vector v^{dual_index} (0-based).
template <class S>
Tensor<S> contract_first(const Tensor<S>& t, int dual_index) {
  if (t.arity() < 2) throw std::invalid_argument("contract_first: arity must be at least 2");
  if (dual_index < 0 || dual_index >= t.dim()) throw IndexOutOfRange("contract_first: dual index out of range");
  Tensor<S> out(t.arity() - 1, t.dim());
  for (const auto& [idx, c] : t.coeffs())
    if (idx[0] == dual_index) out.add(MultiIndex(idx.begin() + 1, idx.end()), c);
  return out;
}

// Permutes tensor slots: output slot k carries input slot perm[k].
template <class S>
Tensor<S> permute_slots(const Tensor<S>& t, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != t.arity()) throw DimensionMismatch("permute_slots: bad permutation size");
  Tensor<S> out(t.arity(), t.dim());
  for (const auto& [idx, c] : t.coeffs()) {
    MultiIndex img(idx.size());
    for (std::size_t k = 0; k < perm.size(); ++k) img[k] = idx[static_cast<std::size_t>(perm[k])];
    out.add(img, c);
  }
  return out;
}

template <class T, class S>
Tensor<T> tensor_cast(const Tensor<S>& t) {
  Tensor<T> out(t.arity(), t.dim());
  for (const auto& [idx, c] : t.coeffs()) out.add(idx, scalar_from<T>(c));
  return out;
}

}  // namespace qsym

#endif  // QSYM_TENSOR_HPP_
