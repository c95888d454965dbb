// Exact coefficient fields: arbitrary-precision rationals and prime fields.
//
// Both scalar types are plain value types usable as Eigen scalars.  Prime
// field elements follow the NTL convention of a per-thread current modulus:
// install one with a ZpScope before constructing or combining Zp values.

#ifndef QSYM_SCALAR_HPP_
#define QSYM_SCALAR_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

#include <Eigen/Core>

namespace qsym {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

class Rational {
 public:
  Rational() = default;
  Rational(int n) : v_(n) {}   // NOLINT: implicit literals are the point
  Rational(long n) : v_(n) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Decimal integer strings; den defaults to 1.
  static Rational parse(std::string_view num, std::string_view den = "1");
  // Accepts "a", "-a", "a/b".
  static Rational parse_fraction(std::string_view text);

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }
  std::string str() const;

  Rational inverse() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Residue class modulo the current thread's prime.
class Zp {
 public:
  Zp() = default;
  Zp(int n) : v_(reduce(n)) {}   // NOLINT
  Zp(long n) : v_(reduce(n)) {}  // NOLINT

  static Zp from_raw(std::uint32_t v) { Zp z; z.v_ = v; return z; }
  static std::uint32_t modulus() { return modulus_; }

  std::uint32_t raw() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Zp inverse() const;
  std::string str() const { return std::to_string(v_); }

  Zp& operator+=(Zp o) {
    v_ += o.v_;
    if (v_ >= modulus_) v_ -= modulus_;
    return *this;
  }
  Zp& operator-=(Zp o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + modulus_ - o.v_;
    return *this;
  }
  Zp& operator*=(Zp o) {
    v_ = static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % modulus_);
    return *this;
  }
  Zp& operator/=(Zp o) { return *this *= o.inverse(); }

  friend Zp operator+(Zp a, Zp b) { return a += b; }
  friend Zp operator-(Zp a, Zp b) { return a -= b; }
  friend Zp operator*(Zp a, Zp b) { return a *= b; }
  friend Zp operator/(Zp a, Zp b) { return a /= b; }
  friend Zp operator-(Zp a) { return Zp() - a; }
  friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }
  friend bool operator!=(Zp a, Zp b) { return a.v_ != b.v_; }

 private:
  friend class ZpScope;
  static std::uint32_t reduce(long n) {
    long r = n % static_cast<long>(modulus_);
    return static_cast<std::uint32_t>(r < 0 ? r + modulus_ : r);
  }

  std::uint32_t v_ = 0;
  static thread_local std::uint32_t modulus_;
};

std::ostream& operator<<(std::ostream& os, Zp z);

// Installs a prime modulus for the current thread; restores the previous one
// on destruction.
class ZpScope {
 public:
  explicit ZpScope(std::uint32_t p);
  ~ZpScope() { Zp::modulus_ = saved_; }
  ZpScope(const ZpScope&) = delete;
  ZpScope& operator=(const ZpScope&) = delete;

 private:
  std::uint32_t saved_;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint32_t n);

struct FieldSpec {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p);
  // "Q" or "Fp:<p>".
  static FieldSpec parse(std::string_view text);

  bool is_prime_field() const { return kind == Kind::Prime; }
  // 0 for the rationals.
  std::uint32_t characteristic() const { return is_prime_field() ? p : 0; }
  std::string str() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Image of a rational in the scalar type S.  Throws DivisionByZero when a
// denominator vanishes modulo the current prime.
template <class S>
S scalar_from(const Rational& r);

template <>
inline Rational scalar_from<Rational>(const Rational& r) {
  return r;
}

template <>
Zp scalar_from<Zp>(const Rational& r);

// Identity on Zp; the integer lift of the residue otherwise.
template <class S>
S scalar_from(Zp z) {
  if constexpr (std::is_same_v<S, Zp>) {
    return z;
  } else {
    return S(static_cast<long>(z.raw()));
  }
}

template <class S>
S scalar_parse(std::string_view num, std::string_view den) {
  return scalar_from<S>(Rational::parse(num, den));
}

inline std::string scalar_num_str(const Rational& r) { return r.num_str(); }
inline std::string scalar_den_str(const Rational& r) { return r.den_str(); }
inline std::string scalar_num_str(Zp z) { return z.str(); }
inline std::string scalar_den_str(Zp) { return "1"; }

template <class S>
struct scalar_tag {
  using type = S;
};

// Runs fn(scalar_tag<S>{}) with S = Rational or S = Zp (inside a ZpScope).
template <class Fn>
decltype(auto) with_field(const FieldSpec& field, Fn&& fn) {
  if (field.is_prime_field()) {
    ZpScope scope(field.p);
    return fn(scalar_tag<Zp>{});
  }
  return fn(scalar_tag<Rational>{});
}

}  // namespace qsym

namespace Eigen {

template <>
struct NumTraits<qsym::Rational> : GenericNumTraits<qsym::Rational> {
  using Real = qsym::Rational;
  using NonInteger = qsym::Rational;
  using Literal = qsym::Rational;
  using Nested = qsym::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 40
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<qsym::Zp> : GenericNumTraits<qsym::Zp> {
  using Real = qsym::Zp;
  using NonInteger = qsym::Zp;
  using Literal = qsym::Zp;
  using Nested = qsym::Zp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // QSYM_SCALAR_HPP_
