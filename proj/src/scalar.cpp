#include "qsym/scalar.hpp"

#include <charconv>
#include <ostream>

namespace qsym {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_decimal_integer(s))
    throw ParseError("not a decimal integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view num, std::string_view den) {
  mpz_class n = parse_integer(num);
  mpz_class d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::parse_fraction(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse(text);
  return parse(text.substr(0, slash), text.substr(slash + 1));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return num_str();
  return num_str() + "/" + den_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(std::move(r));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

thread_local std::uint32_t Zp::modulus_ = kDefaultPrime;

Zp Zp::inverse() const {
  if (v_ == 0) throw DivisionByZero("inverse of zero mod p");
  // Fermat: p is prime.
  std::uint64_t result = 1, base = v_, e = modulus_ - 2;
  while (e) {
    if (e & 1) result = result * base % modulus_;
    base = base * base % modulus_;
    e >>= 1;
  }
  return from_raw(static_cast<std::uint32_t>(result));
}

std::ostream& operator<<(std::ostream& os, Zp z) { return os << z.raw(); }

ZpScope::ZpScope(std::uint32_t p) : saved_(Zp::modulus_) {
  if (!is_prime(p) || p >= (1u << 31))
    throw std::invalid_argument("modulus must be a prime below 2^31: " + std::to_string(p));
  Zp::modulus_ = p;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw std::invalid_argument("not a usable prime: " + std::to_string(p));
  return {Kind::Prime, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.substr(0, 3) == "Fp:") {
    auto digits = text.substr(3);
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw ParseError("bad prime in field spec: '" + std::string(text) + "'");
    if (!is_prime(p) || p >= (1u << 31))
      throw ParseError("field characteristic is not a usable prime: " + std::string(digits));
    return {Kind::Prime, p};
  }
  throw ParseError("field must be 'Q' or 'Fp:<p>', got '" + std::string(text) + "'");
}

std::string FieldSpec::str() const {
  return is_prime_field() ? "Fp:" + std::to_string(p) : std::string("Q");
}

template <>
Zp scalar_from<Zp>(const Rational& r) {
  const std::uint32_t p = Zp::modulus();
  auto mod = [p](const mpz_class& z) {
    mpz_class m = z % p;
    if (m < 0) m += p;
    return Zp::from_raw(static_cast<std::uint32_t>(m.get_ui()));
  };
  Zp den = mod(r.value().get_den());
  if (den.is_zero())
    throw DivisionByZero("denominator " + r.den_str() + " vanishes mod " + std::to_string(p));
  return mod(r.value().get_num()) / den;
}

}  // namespace qsym
