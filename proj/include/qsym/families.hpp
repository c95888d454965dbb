// Cubic surface families F = x3 f2 - f3 and their superpotentials
// e = w0(a) + lambda * symmetrize(F).

#ifndef QSYM_FAMILIES_HPP_
#define QSYM_FAMILIES_HPP_

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsym/cubic.hpp"
#include "qsym/scalar.hpp"
#include "qsym/superpotential.hpp"

namespace qsym {

struct ConstraintViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Commutative polynomial in x0..x3 with rational coefficients, keyed by
// exponent vectors.
struct CommPoly {
  std::map<std::array<int, 4>, Rational> terms;

  static CommPoly constant(const Rational& c);
  static CommPoly variable(int i);

  bool is_zero() const { return terms.empty(); }
  // -1 for the zero polynomial, otherwise the maximal total degree.
  int degree() const;
  bool is_homogeneous(int d) const;

  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  friend bool operator==(const CommPoly&, const CommPoly&) = default;
};

using ParamMap = std::map<std::string, Rational>;

// Parses "+ - * / ^ ( )", integers, x0..x3 and parameter names bound in
// `params`.  Division only by nonzero constants.
CommPoly parse_comm_poly(const std::string& text, const ParamMap& params);

CubicForm<Rational> to_cubic_form(const CommPoly& p);

struct ParamConstraint {
  enum class Kind { Distinct, NotIn };
  Kind kind = Kind::Distinct;
  std::vector<std::string> params;
  std::vector<Rational> excluded;  // NotIn only
};

struct SurfaceFamily {
  std::string name;
  std::string f2, f3;  // templates in x0, x1, x2 and the parameters
  ParamMap defaults;
  std::vector<ParamConstraint> constraints;
  std::string expected;  // Catalog component label: ASreg, B, C, D or degenerate
};

// Throws ConstraintViolated naming the first violated constraint.
void check_constraints(const SurfaceFamily& fam, const ParamMap& params);

// x3 f2 - f3 with the given parameters (missing ones take the defaults).
CubicForm<Rational> family_cubic(const SurfaceFamily& fam, const ParamMap& params);

struct FamilyInstance {
  std::string family;
  ParamMap params;
  std::array<Rational, 4> a{};
  Rational lambda = 1;
  Tensor<Rational> tensor{3, 4};
  bool degenerate = false;
  std::optional<TwistedSuperpotential<Rational>> superpotential;  // unset when degenerate
};

// e = w0(a) + lambda * symmetrize(x3 f2 - f3).  A degenerate tensor is a
// result, not an error.
FamilyInstance build_family_superpotential(const SurfaceFamily& fam, const ParamMap& params,
                                           const std::array<Rational, 4>& a, const Rational& lambda);

std::vector<SurfaceFamily> load_catalog(const std::string& path);
const SurfaceFamily& find_family(const std::vector<SurfaceFamily>& catalog, const std::string& name);

// Parameter values drawn from small integers satisfying every constraint;
// seed 0 returns the defaults.
ParamMap sample_params(const SurfaceFamily& fam, unsigned seed);

}  // namespace qsym

#endif  // QSYM_FAMILIES_HPP_
