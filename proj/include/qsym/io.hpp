// JSON serialization of tensors, matrices, presentations, Groebner states
// and verdicts, plus text emission of presentations.

#ifndef QSYM_IO_HPP_
#define QSYM_IO_HPP_

#include <string>

#include <json.hpp>

#include "qsym/ncgb.hpp"
#include "qsym/presentation_types.hpp"
#include "qsym/superpotential.hpp"
#include "qsym/tensor.hpp"

namespace qsym {

using Json = nlohmann::json;

// "a" or "a/b".
template <class S>
std::string scalar_text(const S& c) {
  const std::string den = scalar_den_str(c);
  return den == "1" ? scalar_num_str(c) : scalar_num_str(c) + "/" + den;
}

template <class S>
Json scalar_to_json(const S& c) {
  return Json{{"num", scalar_num_str(c)}, {"den", scalar_den_str(c)}};
}

template <class S>
S scalar_from_json(const Json& j) {
  try {
    if (j.is_string()) return scalar_from<S>(Rational::parse_fraction(j.get<std::string>()));
    if (j.is_number_integer()) return S(j.get<long>());
    return scalar_parse<S>(j.at("num").get<std::string>(), j.value("den", std::string("1")));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("scalar: ") + e.what());
  }
}

// {"m", "dim", "field", "entries": [{"idx": [1-based], "num", "den"}]}
template <class S>
Json tensor_to_json(const Tensor<S>& t, const FieldSpec& field) {
  Json entries = Json::array();
  for (const auto& [idx, c] : t.coeffs()) {
    Json e = scalar_to_json(c);
    Json one_based = Json::array();
    for (int i : idx) one_based.push_back(i + 1);
    e["idx"] = std::move(one_based);
    entries.push_back(std::move(e));
  }
  return Json{{"m", t.arity()}, {"dim", t.dim()}, {"field", field.str()}, {"entries", std::move(entries)}};
}

template <class S>
Tensor<S> tensor_from_json(const Json& j) {
  try {
    const int m = j.at("m").get<int>(), dim = j.at("dim").get<int>();
    if (m < 1 || dim < 1) throw ParseError("tensor: m and dim must be positive");
    Tensor<S> t(m, dim);
    for (const auto& e : j.at("entries")) {
      MultiIndex idx;
      for (const auto& i : e.at("idx")) idx.push_back(i.get<int>() - 1);
      if (static_cast<int>(idx.size()) != m) throw ParseError("tensor: index of wrong length");
      for (int i : idx)
        if (i < 0 || i >= dim) throw ParseError("tensor: index out of range");
      t.add(idx, scalar_from_json<S>(e));
    }
    return t;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("tensor: ") + e.what());
  }
}

// Rows of "a/b" strings.
template <class S>
Json matrix_to_json(const Matrix<S>& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(scalar_text(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class S>
Matrix<S> matrix_from_json(const Json& j) {
  try {
    const Index r = static_cast<Index>(j.size());
    const Index c = r == 0 ? 0 : static_cast<Index>(j.at(0).size());
    Matrix<S> m(r, c);
    for (Index i = 0; i < r; ++i) {
      if (static_cast<Index>(j.at(static_cast<std::size_t>(i)).size()) != c) throw ParseError("matrix: ragged rows");
      for (Index k = 0; k < c; ++k) m(i, k) = scalar_from_json<S>(j.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(k)));
    }
    return m;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
}

template <class S>
Json poly_to_json(const NcPoly<S>& p, const std::vector<std::string>& gens) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json w = Json::array();
    for (int g : t.word) w.push_back(gens[static_cast<std::size_t>(g)]);
    Json e = scalar_to_json(t.coeff);
    e["word"] = std::move(w);
    terms.push_back(std::move(e));
  }
  return terms;
}

template <class S>
NcPoly<S> poly_from_json(const Json& j, const std::vector<std::string>& gens, const MonomialOrder& order) {
  PolyBuilder<S> b;
  for (const auto& t : j) {
    GenWord w;
    for (const auto& g : t.at("word")) {
      const auto name = g.get<std::string>();
      auto it = std::find(gens.begin(), gens.end(), name);
      if (it == gens.end()) throw ParseError("unknown generator '" + name + "'");
      w.push_back(static_cast<int>(it - gens.begin()));
    }
    b.add(w, scalar_from_json<S>(t));
  }
  return b.finish(order);
}

// {"gens", "order" (precedence), "rels", "meta"}
template <class S>
Json presentation_to_json(const Presentation<S>& pres) {
  Json rels = Json::array();
  for (const auto& r : pres.relations) rels.push_back(poly_to_json(r, pres.gens));
  Json meta = Json::object();
  for (const auto& [k, v] : pres.meta) meta[k] = v;
  return Json{{"gens", pres.gens}, {"order", pres.order.precedence()}, {"rels", std::move(rels)}, {"meta", std::move(meta)}};
}

template <class S>
Presentation<S> presentation_from_json(const Json& j) {
  try {
    Presentation<S> pres;
    pres.gens = j.at("gens").get<std::vector<std::string>>();
    pres.order = j.contains("order") ? MonomialOrder::from_precedence(j.at("order").get<std::vector<int>>())
                                     : MonomialOrder::natural(pres.ngens());
    for (const auto& r : j.at("rels")) pres.relations.push_back(poly_from_json<S>(r, pres.gens, pres.order));
    if (j.contains("meta"))
      for (const auto& [k, v] : j.at("meta").items()) pres.meta[k] = v.template get<std::string>();
    return pres;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("presentation: ") + e.what());
  }
}

// "a11*a22 - 2/3*b12 + 1"
template <class S>
std::string format_poly(const NcPoly<S>& p, const std::vector<std::string>& gens) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    S c = t.coeff;
    bool negative = false;
    if constexpr (std::is_same_v<S, Rational>) {
      negative = c.sign() < 0;
      if (negative) c = -c;
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string word;
    for (std::size_t k = 0; k < t.word.size(); ++k) {
      if (k > 0) word += "*";
      word += gens[static_cast<std::size_t>(t.word[k])];
    }
    if (word.empty()) {
      out += scalar_text(c);
    } else if (c.is_one()) {
      out += word;
    } else {
      out += scalar_text(c) + "*" + word;
    }
  }
  return out;
}

enum class EmitFormat { CanonicalText, MagmaScript, Json };

EmitFormat emit_format_from_string(const std::string& s);

// Deterministic serialization.  The Magma script declares the free algebra
// and the relation ideal and asks for a truncated Groebner basis.
template <class S>
std::string emit(const Presentation<S>& pres, EmitFormat format, const FieldSpec& field = {}, int bound = 8) {
  if (format == EmitFormat::Json) return presentation_to_json(pres).dump(2) + "\n";
  std::string out;
  if (format == EmitFormat::CanonicalText) {
    out += "gens";
    for (const auto& g : pres.gens) out += " " + g;
    out += "\n";
    for (const auto& r : pres.relations) out += format_poly(r, pres.gens) + "\n";
    return out;
  }
  out += "// construction:";
  for (const auto& [k, v] : pres.meta) out += " " + k + "=" + v;
  out += "\n";
  out += field.is_prime_field() ? "K := GF(" + std::to_string(field.p) + ");\n" : "K := Rationals();\n";
  // Generators are declared in precedence order, largest first.
  std::string names;
  for (int g : pres.order.precedence()) names += (names.empty() ? "" : ",") + pres.gens[static_cast<std::size_t>(g)];
  out += "F<" + names + "> := FreeAlgebra(K, " + std::to_string(pres.ngens()) + ");\n";
  out += "R := [\n";
  for (std::size_t i = 0; i < pres.relations.size(); ++i)
    out += "  " + format_poly(pres.relations[i], pres.gens) + (i + 1 < pres.relations.size() ? ",\n" : "\n");
  out += "];\n";
  out += "I := ideal<F | R>;\n";
  out += "B := GroebnerBasis(I, " + std::to_string(bound) + ");\n";
  out += "print #B, 1 in I;\n";
  return out;
}

inline std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::Exhausted: return "exhausted";
    case StopReason::BoundReached: return "bound";
    case StopReason::ZeroFound: return "one";
    case StopReason::BudgetExceeded: return "budget";
  }
  return "bound";
}

StopReason stop_reason_from_string(const std::string& s);

Json stats_to_json(const GbStats& s, bool with_timing = true);
Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

// Checkpoint of a Groebner state; generator names come from `gens`.
template <class S>
Json gbstate_to_json(const GBState<S>& st, const std::vector<std::string>& gens) {
  Json basis = Json::array();
  for (const auto& p : st.basis) basis.push_back(poly_to_json(p, gens));
  return Json{{"gens", gens},
              {"order", st.order.precedence()},
              {"bound", st.bound},
              {"processed_degree", st.processed_degree},
              {"queue_empty", st.queue_empty},
              {"stop", to_string(st.stop)},
              {"witness_degree", st.witness_degree},
              {"witness_source", st.witness_source},
              {"homogeneous_input", st.homogeneous_input},
              {"stats", stats_to_json(st.stats)},
              {"basis", std::move(basis)}};
}

template <class S>
GBState<S> gbstate_from_json(const Json& j) {
  try {
    GBState<S> st;
    const auto gens = j.at("gens").get<std::vector<std::string>>();
    st.order = MonomialOrder::from_precedence(j.at("order").get<std::vector<int>>());
    st.bound = j.at("bound").get<int>();
    st.processed_degree = j.at("processed_degree").get<int>();
    st.queue_empty = j.at("queue_empty").get<bool>();
    st.stop = stop_reason_from_string(j.at("stop").get<std::string>());
    st.witness_degree = j.at("witness_degree").get<int>();
    st.witness_source = j.at("witness_source").get<std::string>();
    st.homogeneous_input = j.at("homogeneous_input").get<bool>();
    const Json& s = j.at("stats");
    st.stats.reduction_steps = s.value("reduction_steps", 0ull);
    st.stats.obstructions_processed = s.value("obstructions_processed", 0ull);
    st.stats.zero_reductions = s.value("zero_reductions", 0ull);
    st.stats.elements_added = s.value("elements_added", 0ull);
    st.stats.elements_removed = s.value("elements_removed", 0ull);
    st.stats.seconds = s.value("seconds", 0.0);
    for (const auto& p : j.at("basis")) st.basis.push_back(poly_from_json<S>(p, gens, st.order));
    return st;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("checkpoint: ") + e.what());
  }
}

template <class S>
Json qseries_to_json(const QSeries<S>& q) {
  Json coeffs = Json::array();
  for (const auto& c : q.coeffs) coeffs.push_back(scalar_text(c));
  return Json{{"coeffs", std::move(coeffs)}, {"trunc", q.trunc}};
}

// Lowercase hex SHA-256 of text.
std::string content_hash(const std::string& text);

// Whole-file helpers; throw ParseError on malformed JSON.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qsym

#endif  // QSYM_IO_HPP_
