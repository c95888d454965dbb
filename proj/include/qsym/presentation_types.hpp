// Finitely presented algebras: named generators plus relations.

#ifndef QSYM_PRESENTATION_TYPES_HPP_
#define QSYM_PRESENTATION_TYPES_HPP_

#include <map>
#include <string>
#include <vector>

#include "qsym/ncpoly.hpp"

namespace qsym {

template <class S>
struct Presentation {
  std::vector<std::string> gens;
  std::vector<NcPoly<S>> relations;  // each relation is "LHS - RHS"
  MonomialOrder order;               // order the relations are sorted in
  std::map<std::string, std::string> meta;

  int ngens() const { return static_cast<int>(gens.size()); }
  int max_degree() const {
    int d = 0;
    for (const auto& r : relations) d = std::max(d, r.degree());
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& r : relations)
      if (!r.is_homogeneous()) return false;
    return true;
  }
  int gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == name) return static_cast<int>(i);
    return -1;
  }
};

template <class T, class S>
Presentation<T> presentation_cast(const Presentation<S>& p) {
  Presentation<T> out;
  out.gens = p.gens;
  out.order = p.order;
  out.meta = p.meta;
  for (const auto& r : p.relations) out.relations.push_back(poly_cast<T>(r, p.order));
  return out;
}

// Re-sorts every relation for a different monomial order.
template <class S>
Presentation<S> with_order(Presentation<S> p, const MonomialOrder& order) {
  p.order = order;
  for (auto& r : p.relations) r.sort(order);
  return p;
}

}  // namespace qsym

#endif  // QSYM_PRESENTATION_TYPES_HPP_
