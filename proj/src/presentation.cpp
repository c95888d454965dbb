#include "qsym/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "qsym/scalar.hpp"

namespace qsym {

std::string matrix_gen_name(char letter, int i, int j, int rows, int cols) {
  if (rows > 9 || cols > 9) return std::string(1, letter) + std::to_string(i + 1) + "_" + std::to_string(j + 1);
  return std::string(1, letter) + std::to_string(i + 1) + std::to_string(j + 1);
}

std::vector<std::string> gl_generator_names(const GLLayout& layout) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(layout.ngens()));
  for (int i = 0; i < layout.p; ++i)
    for (int j = 0; j < layout.q; ++j) out.push_back(matrix_gen_name('a', i, j, layout.p, layout.q));
  for (int i = 0; i < layout.q; ++i)
    for (int j = 0; j < layout.p; ++j) out.push_back(matrix_gen_name('b', i, j, layout.q, layout.p));
  if (layout.with_d) {
    out.push_back("D");
    out.push_back("Dinv");
  }
  return out;
}

MonomialOrder gl_default_order(const GLLayout& layout) {
  std::vector<int> prec;
  prec.reserve(static_cast<std::size_t>(layout.ngens()));
  for (int k = layout.p * layout.q - 1; k >= 0; --k) prec.push_back(k);
  for (int k = layout.p * layout.q - 1; k >= 0; --k) prec.push_back(layout.p * layout.q + k);
  if (layout.with_d) {
    prec.push_back(layout.d());
    prec.push_back(layout.dinv());
  }
  return MonomialOrder::from_precedence(prec);
}

MonomialOrder parse_order(const std::string& text, const std::vector<std::string>& gens,
                          const MonomialOrder& fallback) {
  if (text.empty() || text == "default") return fallback;
  std::vector<int> prec;
  std::stringstream in(text);
  std::string name;
  while (std::getline(in, name, ',')) {
    auto it = std::find(gens.begin(), gens.end(), name);
    if (it == gens.end()) throw ParseError("order: unknown generator '" + name + "'");
    prec.push_back(static_cast<int>(it - gens.begin()));
  }
  if (prec.size() != gens.size()) throw ParseError("order: must list every generator exactly once");
  try {
    return MonomialOrder::from_precedence(prec);
  } catch (const std::invalid_argument&) {
    throw ParseError("order: repeated generator");
  }
}

}  // namespace qsym
