// Presentations of GL_m(e,f), SL_m(e,f), the reduced SL_2 form and the
// superpotential algebras A(s,N), plus generator-level structure maps.

#ifndef QSYM_PRESENTATION_HPP_
#define QSYM_PRESENTATION_HPP_

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsym/linalg.hpp"
#include "qsym/presentation_types.hpp"
#include "qsym/superpotential.hpp"

namespace qsym {

struct ArityMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotDiagonal : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Generator layout of GL_m(e,f) / SL_m(e,f): a (p x q) row-major, then
// b (q x p) row-major, then D and Dinv for GL.
struct GLLayout {
  int p = 0, q = 0;
  bool with_d = true;

  int a(int i, int j) const { return i * q + j; }
  int b(int i, int j) const { return p * q + i * p + j; }
  int d() const { return 2 * p * q; }
  int dinv() const { return 2 * p * q + 1; }
  int ngens() const { return 2 * p * q + (with_d ? 2 : 0); }
};

std::string matrix_gen_name(char letter, int i, int j, int rows, int cols);
std::vector<std::string> gl_generator_names(const GLLayout& layout);

// Default precedence: the a block, then b, then D, then Dinv, each matrix
// block in reverse row-major order (a_pq largest).  Reversing within blocks
// leaves the block structure intact and keeps bound-8 completions for q = 4
// within seconds rather than hours.
MonomialOrder gl_default_order(const GLLayout& layout);

// "default" or a comma-separated list of all generator names, largest first.
MonomialOrder parse_order(const std::string& text, const std::vector<std::string>& gens,
                          const MonomialOrder& fallback);

namespace detail {

// All multi-indices in [0,n)^m, lexicographic.
inline std::vector<MultiIndex> all_indices(int n, int m) {
  std::vector<MultiIndex> out;
  const Index total = ipow(n, m);
  out.reserve(static_cast<std::size_t>(total));
  for (Index k = 0; k < total; ++k) out.push_back(unflatten(k, n, m));
  return out;
}

template <class S>
Presentation<S> build_gl_like(const Tensor<S>& e, const Tensor<S>& f, bool with_d) {
  if (e.arity() != f.arity()) throw ArityMismatch("e and f have different arity");
  const int m = e.arity();
  const GLLayout lay{e.dim(), f.dim(), with_d};
  Presentation<S> pres;
  pres.gens = gl_generator_names(lay);
  pres.order = gl_default_order(lay);
  // Sum_i f_i a_{j1 i1} ... a_{jm im} - e_j Dinv
  for (const MultiIndex& j : all_indices(lay.p, m)) {
    PolyBuilder<S> b;
    for (const auto& [i, c] : f.coeffs()) {
      GenWord w(static_cast<std::size_t>(m));
      for (int k = 0; k < m; ++k) w[static_cast<std::size_t>(k)] = lay.a(j[static_cast<std::size_t>(k)], i[static_cast<std::size_t>(k)]);
      b.add(w, c);
    }
    const S ej = e.coeff(j);
    b.add(with_d ? GenWord{lay.dinv()} : GenWord{}, -ej);
    pres.relations.push_back(b.finish(pres.order));
  }
  // Sum_i e_i b_{jm im} ... b_{j1 i1} - f_j D
  for (const MultiIndex& j : all_indices(lay.q, m)) {
    PolyBuilder<S> b;
    for (const auto& [i, c] : e.coeffs()) {
      GenWord w(static_cast<std::size_t>(m));
      for (int k = 0; k < m; ++k)
        w[static_cast<std::size_t>(m - 1 - k)] = lay.b(j[static_cast<std::size_t>(k)], i[static_cast<std::size_t>(k)]);
      b.add(w, c);
    }
    b.add(with_d ? GenWord{lay.d()} : GenWord{}, -f.coeff(j));
    pres.relations.push_back(b.finish(pres.order));
  }
  if (with_d) {
    PolyBuilder<S> r1, r2;
    r1.add(GenWord{lay.d(), lay.dinv()}, S(1));
    r1.add(GenWord{}, S(-1));
    r2.add(GenWord{lay.dinv(), lay.d()}, S(1));
    r2.add(GenWord{}, S(-1));
    pres.relations.push_back(r1.finish(pres.order));
    pres.relations.push_back(r2.finish(pres.order));
  }
  // B A = I_q
  for (int i = 0; i < lay.q; ++i)
    for (int j = 0; j < lay.q; ++j) {
      PolyBuilder<S> b;
      for (int k = 0; k < lay.p; ++k) b.add(GenWord{lay.b(i, k), lay.a(k, j)}, S(1));
      if (i == j) b.add(GenWord{}, S(-1));
      pres.relations.push_back(b.finish(pres.order));
    }
  pres.meta["construction"] = with_d ? "GL" : "SL";
  pres.meta["m"] = std::to_string(m);
  pres.meta["p"] = std::to_string(lay.p);
  pres.meta["q"] = std::to_string(lay.q);
  pres.meta["diagonal"] = e == f ? "true" : "false";
  return pres;
}

}  // namespace detail

template <class S>
Presentation<S> build_GL(const TwistedSuperpotential<S>& e, const TwistedSuperpotential<S>& f) {
  return detail::build_gl_like(e.tensor, f.tensor, true);
}

// GL with every quantum determinant set to 1.
template <class S>
Presentation<S> build_SL(const TwistedSuperpotential<S>& e, const TwistedSuperpotential<S>& f) {
  return detail::build_gl_like(e.tensor, f.tensor, false);
}

// SL_2(e,f) on the generators A = (a_ij) alone: A F A^T E^{-1} = I and
// F A^T E^{-1} A = I.  Identical relations are listed once.
template <class S>
Presentation<S> build_SL2_reduced(const Matrix<S>& e, const Matrix<S>& f) {
  if (e.rows() != e.cols() || f.rows() != f.cols()) throw DimensionMismatch("E and F must be square");
  const Matrix<S> ei = invert<S>(e);
  (void)invert<S>(f);
  const int p = static_cast<int>(e.rows()), q = static_cast<int>(f.rows());
  auto a = [q](int i, int j) { return i * q + j; };
  Presentation<S> pres;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) pres.gens.push_back(matrix_gen_name('a', i, j, p, q));
  // Reverse row-major precedence, as for the A block of the GL default order.
  std::vector<int> prec;
  for (int k = p * q - 1; k >= 0; --k) prec.push_back(k);
  pres.order = MonomialOrder::from_precedence(prec);
  auto push_unique = [&pres](NcPoly<S> r) {
    for (const auto& old : pres.relations)
      if (old == r) return;
    pres.relations.push_back(std::move(r));
  };
  for (int i = 0; i < p; ++i)
    for (int l = 0; l < p; ++l) {
      PolyBuilder<S> b;
      for (int j = 0; j < q; ++j)
        for (int k = 0; k < q; ++k) {
          if (f(j, k).is_zero()) continue;
          for (int r = 0; r < p; ++r) {
            if (ei(r, l).is_zero()) continue;
            b.add(GenWord{a(i, j), a(r, k)}, f(j, k) * ei(r, l));
          }
        }
      if (i == l) b.add(GenWord{}, S(-1));
      push_unique(b.finish(pres.order));
    }
  for (int i = 0; i < q; ++i)
    for (int l = 0; l < q; ++l) {
      PolyBuilder<S> b;
      for (int j = 0; j < q; ++j) {
        if (f(i, j).is_zero()) continue;
        for (int k = 0; k < p; ++k)
          for (int r = 0; r < p; ++r) {
            if (ei(k, r).is_zero()) continue;
            b.add(GenWord{a(k, j), a(r, l)}, f(i, j) * ei(k, r));
          }
      }
      if (i == l) b.add(GenWord{}, S(-1));
      push_unique(b.finish(pres.order));
    }
  pres.meta["construction"] = "SL2_reduced";
  pres.meta["p"] = std::to_string(p);
  pres.meta["q"] = std::to_string(q);
  return pres;
}

// Generators x1..xq, one relation per RREF basis vector of the relation space.
template <class S>
Presentation<S> build_algebra(const AlgebraData<S>& alg) {
  const int q = alg.superpotential.dim();
  Presentation<S> pres;
  for (int i = 0; i < q; ++i) pres.gens.push_back("x" + std::to_string(i + 1));
  pres.order = MonomialOrder::natural(q);
  for (Index r = 0; r < alg.relations.rank(); ++r) {
    PolyBuilder<S> b;
    const auto row = alg.relations.basis().row(r);
    for (Index k = 0; k < row.size(); ++k)
      if (!row(k).is_zero()) b.add(unflatten(k, q, alg.n), row(k));
    pres.relations.push_back(b.finish(pres.order));
  }
  pres.meta["construction"] = "A(s,N)";
  pres.meta["N"] = std::to_string(alg.n);
  pres.meta["q"] = std::to_string(q);
  return pres;
}

// Evaluates a polynomial under a commutative assignment of scalars.
template <class S>
S evaluate(const NcPoly<S>& p, const std::vector<S>& values) {
  S total(0);
  for (const auto& t : p.terms()) {
    S prod = t.coeff;
    for (int g : t.word) prod *= values[static_cast<std::size_t>(g)];
    total += prod;
  }
  return total;
}

// Relations of GL_m(e,e) evaluated at a_ij, b_ij -> delta_ij, D^{+-1} -> 1.
template <class S>
std::vector<S> counit_residual(const Presentation<S>& pres) {
  auto get = [&](const char* key) {
    auto it = pres.meta.find(key);
    return it == pres.meta.end() ? std::string() : it->second;
  };
  if (get("diagonal") != "true" || (get("construction") != "GL" && get("construction") != "SL"))
    throw NotDiagonal("counit exists only on GL_m(e,e) / SL_m(e,e)");
  const GLLayout lay{std::stoi(get("p")), std::stoi(get("q")), get("construction") == "GL"};
  std::vector<S> values(static_cast<std::size_t>(lay.ngens()), S(0));
  for (int i = 0; i < lay.p; ++i) {
    values[static_cast<std::size_t>(lay.a(i, i))] = S(1);
    values[static_cast<std::size_t>(lay.b(i, i))] = S(1);
  }
  if (lay.with_d) {
    values[static_cast<std::size_t>(lay.d())] = S(1);
    values[static_cast<std::size_t>(lay.dinv())] = S(1);
  }
  std::vector<S> out;
  out.reserve(pres.relations.size());
  for (const auto& r : pres.relations) out.push_back(evaluate(r, values));
  return out;
}

// Images of the generators of GL_m(e,f) under the antipode, written in the
// generators of GL_m(f,e) (SL when `sl`): S(A) = B, S(B) = D^{-1} Q A P^{-1} D,
// S(D^{+-1}) = D^{-+1}, with P, Q the twists of e, f in the convention of
// find_twist.
template <class S>
std::vector<NcPoly<S>> antipode_images(const TwistedSuperpotential<S>& e, const TwistedSuperpotential<S>& f,
                                       bool sl = false) {
  const GLLayout src{e.dim(), f.dim(), !sl};
  const GLLayout dst{f.dim(), e.dim(), !sl};  // GL_m(f,e): A is q x p, B is p x q
  const MonomialOrder order = MonomialOrder::natural(dst.ngens());
  const Matrix<S>& ql = f.twist;
  const Matrix<S> pinv = invert<S>(e.twist);
  std::vector<NcPoly<S>> out(static_cast<std::size_t>(src.ngens()));
  for (int i = 0; i < src.p; ++i)
    for (int j = 0; j < src.q; ++j) {
      PolyBuilder<S> b;
      b.add(GenWord{dst.b(i, j)}, S(1));
      out[static_cast<std::size_t>(src.a(i, j))] = b.finish(order);
    }
  for (int i = 0; i < src.q; ++i)
    for (int j = 0; j < src.p; ++j) {
      PolyBuilder<S> b;
      for (int k = 0; k < src.q; ++k) {
        if (ql(i, k).is_zero()) continue;
        for (int l = 0; l < src.p; ++l) {
          if (pinv(l, j).is_zero()) continue;
          GenWord w = sl ? GenWord{dst.a(k, l)} : GenWord{dst.dinv(), dst.a(k, l), dst.d()};
          b.add(w, ql(i, k) * pinv(l, j));
        }
      }
      out[static_cast<std::size_t>(src.b(i, j))] = b.finish(order);
    }
  if (!sl) {
    PolyBuilder<S> d, dinv;
    d.add(GenWord{dst.dinv()}, S(1));
    dinv.add(GenWord{dst.d()}, S(1));
    out[static_cast<std::size_t>(src.d())] = d.finish(order);
    out[static_cast<std::size_t>(src.dinv())] = dinv.finish(order);
  }
  return out;
}

// Reduced SL_2 form: S(A^{e,f}) = B^{f,e} = E (A^{f,e})^T F^{-1}, written in
// the generators of build_SL2_reduced(F, E).
template <class S>
std::vector<NcPoly<S>> antipode_images_sl2(const Matrix<S>& e, const Matrix<S>& f) {
  const int p = static_cast<int>(e.rows()), q = static_cast<int>(f.rows());
  const Matrix<S> fi = invert<S>(f);
  const MonomialOrder order = MonomialOrder::natural(p * q);
  std::vector<NcPoly<S>> out;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      PolyBuilder<S> b;
      // A^{f,e} is q x p; its (l,k) entry is generator l * p + k.
      for (int k = 0; k < p; ++k) {
        if (e(i, k).is_zero()) continue;
        for (int l = 0; l < q; ++l)
          if (!fi(l, j).is_zero()) b.add(GenWord{l * p + k}, e(i, k) * fi(l, j));
      }
      out.push_back(b.finish(order));
    }
  return out;
}

// Substitutes polynomials for generators.
template <class S>
NcPoly<S> substitute(const NcPoly<S>& p, const std::vector<NcPoly<S>>& images, const MonomialOrder& order) {
  PolyBuilder<S> total;
  for (const auto& t : p.terms()) {
    std::map<GenWord, S> acc{{GenWord{}, t.coeff}};
    for (int g : t.word) {
      std::map<GenWord, S> next;
      for (const auto& [w, c] : acc)
        for (const auto& it : images[static_cast<std::size_t>(g)].terms()) {
          GenWord nw = w;
          nw.insert(nw.end(), it.word.begin(), it.word.end());
          auto [pos, fresh] = next.try_emplace(std::move(nw), c * it.coeff);
          if (!fresh) pos->second += c * it.coeff;
        }
      acc = std::move(next);
    }
    for (const auto& [w, c] : acc) total.add(w, c);
  }
  return total.finish(order);
}

template <class S>
struct BasisChange {
  TwistedSuperpotential<S> e2, f2;
  S alpha, beta;                       // phi^{(x)m}(e') = alpha e, psi^{(x)m}(f) = beta f'
  std::vector<NcPoly<S>> substitution;  // GL_m(e,f) generator -> poly in GL_m(e',f')
};

namespace detail {

template <class S>
S first_coeff(const Tensor<S>& t) {
  if (t.is_zero()) throw std::invalid_argument("zero superpotential");
  return t.coeffs().begin()->second;
}

// Scalar c with a = c b, verified on every coefficient.
template <class S>
S proportionality(const Tensor<S>& a, const Tensor<S>& b) {
  const auto& [idx, bc] = *b.coeffs().begin();
  const S c = a.coeff(idx) / bc;
  Tensor<S> scaled = b;
  scaled *= c;
  if (!(scaled == a) || c.is_zero()) throw std::invalid_argument("tensors are not proportional");
  return c;
}

}  // namespace detail

// Isomorphism GL_m(e,f) -> GL_m(e',f') induced by phi in GL(U), psi in GL(V):
// A -> phi A' psi, B -> psi^{-1} B' phi^{-1}, D^{+-1} -> (D'/(alpha beta))^{+-1},
// with e' proportional to (phi^{-1})^{(x)m}(e) and f' proportional to
// psi^{(x)m}(f), each rescaled to share the first nonzero coefficient of the
// original.
template <class S>
BasisChange<S> basis_change(const TwistedSuperpotential<S>& e, const TwistedSuperpotential<S>& f,
                            const Matrix<S>& phi, const Matrix<S>& psi, bool sl = false) {
  if (e.arity() != f.arity()) throw ArityMismatch("e and f have different arity");
  const Matrix<S> phi_inv = invert<S>(phi), psi_inv = invert<S>(psi);
  Tensor<S> e_raw = apply_on_all(e.tensor, phi_inv);
  Tensor<S> f_raw = apply_on_all(f.tensor, psi);
  e_raw *= detail::first_coeff(e.tensor) / detail::first_coeff(e_raw);
  f_raw *= detail::first_coeff(f.tensor) / detail::first_coeff(f_raw);
  BasisChange<S> out{make_superpotential(e_raw), make_superpotential(f_raw), S(1), S(1), {}};
  out.alpha = detail::proportionality(apply_on_all(out.e2.tensor, phi), e.tensor);
  out.beta = detail::proportionality(apply_on_all(f.tensor, psi), out.f2.tensor);
  const GLLayout lay{e.dim(), f.dim(), !sl};
  const MonomialOrder order = MonomialOrder::natural(lay.ngens());
  out.substitution.resize(static_cast<std::size_t>(lay.ngens()));
  for (int i = 0; i < lay.p; ++i)
    for (int j = 0; j < lay.q; ++j) {
      PolyBuilder<S> b;
      for (int k = 0; k < lay.p; ++k)
        for (int l = 0; l < lay.q; ++l) b.add(GenWord{lay.a(k, l)}, phi(i, k) * psi(l, j));
      out.substitution[static_cast<std::size_t>(lay.a(i, j))] = b.finish(order);
    }
  for (int i = 0; i < lay.q; ++i)
    for (int j = 0; j < lay.p; ++j) {
      PolyBuilder<S> b;
      for (int k = 0; k < lay.q; ++k)
        for (int l = 0; l < lay.p; ++l) b.add(GenWord{lay.b(k, l)}, psi_inv(i, k) * phi_inv(l, j));
      out.substitution[static_cast<std::size_t>(lay.b(i, j))] = b.finish(order);
    }
  if (!sl) {
    const S ab = out.alpha * out.beta;
    PolyBuilder<S> d, dinv;
    d.add(GenWord{lay.d()}, ab.inverse());
    dinv.add(GenWord{lay.dinv()}, ab);
    out.substitution[static_cast<std::size_t>(lay.d())] = d.finish(order);
    out.substitution[static_cast<std::size_t>(lay.dinv())] = dinv.finish(order);
  }
  return out;
}

}  // namespace qsym

#endif  // QSYM_PRESENTATION_HPP_
