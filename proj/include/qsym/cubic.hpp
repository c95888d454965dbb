// Symmetric-group idempotents on V^{(x)3}, the alternating tensors w^(ijk),
// cubic forms and their symmetrization.

#ifndef QSYM_CUBIC_HPP_
#define QSYM_CUBIC_HPP_

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsym/superpotential.hpp"
#include "qsym/tensor.hpp"

namespace qsym {

struct BadCharacteristic : std::domain_error {
  using std::domain_error::domain_error;
};

struct RepeatedIndex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Throws BadCharacteristic when 2 or 3 is not invertible in S.
template <class S>
void require_char_not_2_3() {
  if constexpr (std::is_same_v<S, Zp>) {
    if (Zp::modulus() == 2 || Zp::modulus() == 3) throw BadCharacteristic("characteristic 2 or 3");
  }
}

enum class Idempotent { C, S, CMinusS, OneMinusC };

// Group-algebra element applied to an arity-3 tensor:
// c = (1 + (123) + (321)) / 3, s = c (1 + (12)) / 2, the symmetrizer.
template <class S>
Tensor<S> idempotent_apply(Idempotent which, const Tensor<S>& t) {
  require_char_not_2_3<S>();
  if (t.arity() != 3) throw std::invalid_argument("idempotent_apply: arity must be 3");
  auto c = [](const Tensor<S>& x) {
    Tensor<S> out = x + cyclic_shift(x) + cyclic_shift(cyclic_shift(x));
    out *= S(1) / S(3);
    return out;
  };
  auto s = [&](const Tensor<S>& x) {
    Tensor<S> out = c(x + permute_slots(x, {1, 0, 2}));
    out *= S(1) / S(2);
    return out;
  };
  switch (which) {
    case Idempotent::C: return c(t);
    case Idempotent::S: return s(t);
    case Idempotent::CMinusS: return c(t) - s(t);
    case Idempotent::OneMinusC: return t - c(t);
  }
  return t;
}

// (x_i x_j x_k + x_k x_i x_j + x_j x_k x_i)/3 - (x_k x_j x_i + x_i x_k x_j + x_j x_i x_k)/3
template <class S>
Tensor<S> w_ijk(int i, int j, int k, int dim = 4) {
  if (i == j || j == k || i == k) throw RepeatedIndex("w_ijk: indices must be distinct");
  const S third = S(1) / S(3);
  Tensor<S> t(3, dim);
  for (const MultiIndex& idx : {MultiIndex{i, j, k}, MultiIndex{k, i, j}, MultiIndex{j, k, i}}) t.add(idx, third);
  for (const MultiIndex& idx : {MultiIndex{k, j, i}, MultiIndex{i, k, j}, MultiIndex{j, i, k}}) t.add(idx, -third);
  return t;
}

// a0 w^(012) + a1 w^(023) + a2 w^(013) + a3 w^(123)
template <class S>
Tensor<S> w0(const S& a0, const S& a1, const S& a2, const S& a3) {
  Tensor<S> t(3, 4);
  t += a0 * w_ijk<S>(0, 1, 2);
  t += a1 * w_ijk<S>(0, 2, 3);
  t += a2 * w_ijk<S>(0, 1, 3);
  t += a3 * w_ijk<S>(1, 2, 3);
  return t;
}

// Homogeneous cubic in x_0..x_{dim-1}; monomials keyed by sorted index triples.
template <class S>
struct CubicForm {
  int dim = 4;
  std::map<std::array<int, 3>, S> coeffs;

  void add(std::array<int, 3> mono, const S& c) {
    std::sort(mono.begin(), mono.end());
    auto [it, fresh] = coeffs.try_emplace(mono, c);
    if (!fresh) it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
  friend bool operator==(const CubicForm&, const CubicForm&) = default;
};

// The symmetric tensor (1/6) sum_sigma of the monomials of F.
template <class S>
Tensor<S> symmetrize(const CubicForm<S>& f) {
  require_char_not_2_3<S>();
  Tensor<S> t(3, f.dim);
  for (const auto& [mono, c] : f.coeffs) {
    std::array<int, 3> perm = mono;
    std::vector<std::array<int, 3>> distinct;
    do {
      distinct.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const S share = c / S(static_cast<long>(distinct.size()));
    for (const auto& p : distinct) t.add({p[0], p[1], p[2]}, share);
  }
  return t;
}

// Image of an arity-3 tensor in the symmetric algebra.
template <class S>
CubicForm<S> overline(const Tensor<S>& t) {
  if (t.arity() != 3) throw std::invalid_argument("overline: arity must be 3");
  CubicForm<S> f;
  f.dim = t.dim();
  for (const auto& [idx, c] : t.coeffs()) f.add({idx[0], idx[1], idx[2]}, c);
  return f;
}

// sum_sigma sgn(sigma) x_sigma(1) (x) x_sigma(2) (x) x_sigma(3): the
// superpotential of k[x_1, x_2, x_3].
template <class S>
TwistedSuperpotential<S> poly_superpotential(int n = 3) {
  if (n != 3) throw std::invalid_argument("poly_superpotential: only n = 3 is supported");
  Tensor<S> t(3, 3);
  std::array<int, 3> perm{0, 1, 2};
  do {
    int inversions = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
    t.add({perm[0], perm[1], perm[2]}, inversions % 2 == 0 ? S(1) : S(-1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return make_superpotential(t);
}

}  // namespace qsym

#endif  // QSYM_CUBIC_HPP_
