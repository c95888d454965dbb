// Noncommutative polynomials in a free algebra on named generators.

#ifndef QSYM_NCPOLY_HPP_
#define QSYM_NCPOLY_HPP_

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsym/scalar.hpp"

namespace qsym {

// Generator indices; the empty word is the unit.
using GenWord = std::vector<int>;

// Degree-lexicographic order.  rank[g] is the precedence position of
// generator g; rank 0 is the largest letter.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<int> rank);

  static MonomialOrder natural(int ngens);
  // precedence[k] = generator at position k (largest first).
  static MonomialOrder from_precedence(const std::vector<int>& precedence);

  int ngens() const { return static_cast<int>(rank_.size()); }
  int rank(int g) const { return rank_[static_cast<std::size_t>(g)]; }
  const std::vector<int>& ranks() const { return rank_; }
  std::vector<int> precedence() const;

  // True when u is strictly larger than v.
  bool greater(const GenWord& u, const GenWord& v) const {
    if (u.size() != v.size()) return u.size() > v.size();
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] != v[i]) return rank(u[i]) < rank(v[i]);
    return false;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::vector<int> rank_;
};

template <class S>
struct Term {
  GenWord word;
  S coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// Terms sorted descending in some monomial order, no zero coefficients.
template <class S>
class NcPoly {
 public:
  NcPoly() = default;

  static NcPoly constant(const S& c) {
    NcPoly p;
    if (!c.is_zero()) p.terms_.push_back({{}, c});
    return p;
  }

  // Sums duplicate words, drops zeros and sorts by `order`.
  static NcPoly from_terms(std::vector<Term<S>> terms, const MonomialOrder& order) {
    std::map<GenWord, S> acc;
    for (auto& t : terms) {
      auto [it, fresh] = acc.try_emplace(std::move(t.word), t.coeff);
      if (!fresh) it->second += t.coeff;
    }
    NcPoly p;
    for (auto& [w, c] : acc)
      if (!c.is_zero()) p.terms_.push_back({w, c});
    p.sort(order);
    return p;
  }

  const std::vector<Term<S>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term<S>& leading() const { return terms_.front(); }
  bool is_constant() const { return terms_.size() == 1 && terms_.front().word.empty(); }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.word.size()));
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.word.size() != terms_.front().word.size()) return false;
    return true;
  }

  void sort(const MonomialOrder& order) {
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term<S>& a, const Term<S>& b) { return order.greater(a.word, b.word); });
  }

  NcPoly monic() const {
    if (is_zero()) return *this;
    NcPoly p = *this;
    const S inv = leading().coeff.inverse();
    for (auto& t : p.terms_) t.coeff *= inv;
    return p;
  }

  friend bool operator==(const NcPoly&, const NcPoly&) = default;

 private:
  std::vector<Term<S>> terms_;
};

// Accumulates terms; finish() canonicalizes.
template <class S>
class PolyBuilder {
 public:
  void add(const GenWord& w, const S& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = acc_.try_emplace(w, c);
    if (!fresh) it->second += c;
  }
  void add(const NcPoly<S>& p, const S& scale = S(1)) {
    for (const auto& t : p.terms()) add(t.word, scale * t.coeff);
  }
  NcPoly<S> finish(const MonomialOrder& order) const {
    std::vector<Term<S>> terms;
    terms.reserve(acc_.size());
    for (const auto& [w, c] : acc_) terms.push_back({w, c});
    return NcPoly<S>::from_terms(std::move(terms), order);
  }

 private:
  std::map<GenWord, S> acc_;
};

template <class T, class S>
NcPoly<T> poly_cast(const NcPoly<S>& p, const MonomialOrder& order) {
  std::vector<Term<T>> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.word, scalar_from<T>(t.coeff)});
  return NcPoly<T>::from_terms(std::move(terms), order);
}

}  // namespace qsym

#endif  // QSYM_NCPOLY_HPP_
