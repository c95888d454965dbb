#include "qsym/families.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>

#include <json.hpp>

namespace qsym {

CommPoly CommPoly::constant(const Rational& c) {
  CommPoly p;
  if (!c.is_zero()) p.terms[{0, 0, 0, 0}] = c;
  return p;
}

CommPoly CommPoly::variable(int i) {
  CommPoly p;
  std::array<int, 4> e{};
  e[static_cast<std::size_t>(i)] = 1;
  p.terms[e] = Rational(1);
  return p;
}

int CommPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
  return d;
}

bool CommPoly::is_homogeneous(int d) const {
  return std::all_of(terms.begin(), terms.end(),
                     [d](const auto& t) { return t.first[0] + t.first[1] + t.first[2] + t.first[3] == d; });
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  for (const auto& [e, c] : o.terms) {
    auto [it, fresh] = terms.try_emplace(e, c);
    if (!fresh) it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  for (const auto& [e, c] : o.terms) {
    auto [it, fresh] = terms.try_emplace(e, -c);
    if (!fresh) it->second -= c;
    if (it->second.is_zero()) terms.erase(it);
  }
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  CommPoly out;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::array<int, 4> e{};
      for (std::size_t k = 0; k < 4; ++k) e[k] = ea[k] + eb[k];
      CommPoly t;
      t.terms[e] = ca * cb;
      out += t;
    }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const ParamMap& params) : s_(text), params_(params) {}

  CommPoly parse() {
    CommPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + s_ + "' at " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  CommPoly expr() {
    CommPoly p = term();
    for (;;) {
      if (eat('+')) {
        p += term();
      } else if (eat('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  CommPoly term() {
    CommPoly p = unary();
    for (;;) {
      if (eat('*')) {
        p = p * unary();
      } else if (eat('/')) {
        CommPoly d = unary();
        if (d.degree() != 0) fail("division by a non-constant");
        p = p * CommPoly::constant(d.terms.begin()->second.inverse());
      } else {
        return p;
      }
    }
  }

  CommPoly unary() {
    if (eat('-')) return CommPoly() - unary();
    if (eat('+')) return unary();
    return power();
  }

  CommPoly power() {
    CommPoly base = atom();
    if (!eat('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const int e = std::stoi(s_.substr(start, pos_ - start));
    CommPoly out = CommPoly::constant(Rational(1));
    for (int k = 0; k < e; ++k) out = out * base;
    return out;
  }

  CommPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      CommPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return CommPoly::constant(Rational::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (name.size() == 2 && name[0] == 'x' && name[1] >= '0' && name[1] <= '3') return CommPoly::variable(name[1] - '0');
      auto it = params_.find(name);
      if (it == params_.end()) fail("unknown symbol '" + name + "'");
      return CommPoly::constant(it->second);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  const ParamMap& params_;
  std::size_t pos_ = 0;
};

ParamMap merged(const SurfaceFamily& fam, const ParamMap& params) {
  ParamMap out = fam.defaults;
  for (const auto& [k, v] : params) out[k] = v;
  return out;
}

}  // namespace

CommPoly parse_comm_poly(const std::string& text, const ParamMap& params) { return Parser(text, params).parse(); }

CubicForm<Rational> to_cubic_form(const CommPoly& p) {
  if (!p.is_homogeneous(3)) throw std::invalid_argument("not a homogeneous cubic");
  CubicForm<Rational> f;
  f.dim = 4;
  for (const auto& [e, c] : p.terms) {
    std::array<int, 3> mono{};
    std::size_t k = 0;
    for (int v = 0; v < 4; ++v)
      for (int r = 0; r < e[static_cast<std::size_t>(v)]; ++r) mono[k++] = v;
    f.add(mono, c);
  }
  return f;
}

void check_constraints(const SurfaceFamily& fam, const ParamMap& params) {
  const ParamMap all = merged(fam, params);
  auto value = [&](const std::string& name) {
    auto it = all.find(name);
    if (it == all.end()) throw ConstraintViolated(fam.name + ": parameter '" + name + "' not set");
    return it->second;
  };
  for (const auto& c : fam.constraints) {
    if (c.kind == ParamConstraint::Kind::Distinct) {
      for (std::size_t i = 0; i < c.params.size(); ++i)
        for (std::size_t j = i + 1; j < c.params.size(); ++j)
          if (value(c.params[i]) == value(c.params[j]))
            throw ConstraintViolated(fam.name + ": " + c.params[i] + " and " + c.params[j] + " must be distinct");
    } else {
      for (const auto& name : c.params)
        for (const auto& x : c.excluded)
          if (value(name) == x) throw ConstraintViolated(fam.name + ": " + name + " must not equal " + x.str());
    }
  }
}

CubicForm<Rational> family_cubic(const SurfaceFamily& fam, const ParamMap& params) {
  const ParamMap all = merged(fam, params);
  const CommPoly f2 = parse_comm_poly(fam.f2, all);
  const CommPoly f3 = parse_comm_poly(fam.f3, all);
  if (!f2.is_zero() && !f2.is_homogeneous(2)) throw std::invalid_argument(fam.name + ": f2 is not a quadric");
  return to_cubic_form(CommPoly::variable(3) * f2 - f3);
}

FamilyInstance build_family_superpotential(const SurfaceFamily& fam, const ParamMap& params,
                                           const std::array<Rational, 4>& a, const Rational& lambda) {
  check_constraints(fam, params);
  FamilyInstance out;
  out.family = fam.name;
  out.params = merged(fam, params);
  out.a = a;
  out.lambda = lambda;
  out.tensor = w0(a[0], a[1], a[2], a[3]);
  out.tensor += lambda * symmetrize(family_cubic(fam, params));
  out.degenerate = !is_nondegenerate(out.tensor);
  if (!out.degenerate) out.superpotential = make_superpotential(out.tensor);
  return out;
}

std::vector<SurfaceFamily> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("catalog '" + path + "': " + e.what());
  }
  std::vector<SurfaceFamily> out;
  for (const auto& f : j.at("families")) {
    SurfaceFamily fam;
    fam.name = f.at("name").get<std::string>();
    fam.f2 = f.at("f2").get<std::string>();
    fam.f3 = f.at("f3").get<std::string>();
    fam.expected = f.value("expected", "");
    const nlohmann::json defaults = f.value("defaults", nlohmann::json::object());
    for (const auto& [k, v] : defaults.items()) fam.defaults[k] = Rational::parse_fraction(v.get<std::string>());
    const nlohmann::json constraints = f.value("constraints", nlohmann::json::array());
    for (const auto& c : constraints) {
      ParamConstraint pc;
      if (c.contains("distinct")) {
        pc.kind = ParamConstraint::Kind::Distinct;
        pc.params = c.at("distinct").get<std::vector<std::string>>();
      } else {
        pc.kind = ParamConstraint::Kind::NotIn;
        pc.params = {c.at("param").get<std::string>()};
        for (const auto& x : c.at("not_in")) pc.excluded.push_back(Rational::parse_fraction(x.get<std::string>()));
      }
      fam.constraints.push_back(std::move(pc));
    }
    out.push_back(std::move(fam));
  }
  return out;
}

const SurfaceFamily& find_family(const std::vector<SurfaceFamily>& catalog, const std::string& name) {
  for (const auto& f : catalog)
    if (f.name == name) return f;
  throw std::invalid_argument("unknown family '" + name + "'");
}

ParamMap sample_params(const SurfaceFamily& fam, unsigned seed) {
  if (seed == 0 || fam.defaults.empty()) return fam.defaults;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (;;) {
    ParamMap p;
    for (const auto& [k, v] : fam.defaults) p[k] = Rational(dist(rng));
    try {
      check_constraints(fam, p);
      return p;
    } catch (const ConstraintViolated&) {
    }
  }
}

}  // namespace qsym
