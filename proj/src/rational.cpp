#include "legtors/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <ostream>

#include "legtors/config.hpp"

namespace legtors {

Rational::Rational(const Int& num, const Int& den) : q_() {
  if (sgn(den) == 0) throw DivisionByZeroError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::inv() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rational(r);
}

std::optional<Rational> Rational::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  size_t i = 0;
  auto read_int = [&](bool allow_sign) -> std::optional<std::string> {
    std::string out;
    if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) out += s[i++];
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out += s[i++];
    if (i == start) return std::nullopt;
    return out;
  };
  auto num = read_int(true);
  if (!num) return std::nullopt;
  Int n(*num);
  if (i == s.size()) return Rational(n);
  if (s[i] != '/') return std::nullopt;
  ++i;
  auto den = read_int(false);
  if (!den || i != s.size()) return std::nullopt;
  Int d(*den);
  if (sgn(d) == 0) return std::nullopt;
  return Rational(n, d);
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

const char* to_string(ReductionClass c) {
  switch (c) {
    case ReductionClass::Zero: return "0";
    case ReductionClass::One: return "1";
    case ReductionClass::Infinity: return "inf";
  }
  return "?";
}

long v2(const Int& n) { return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0)); }

Valuation v2(const Rational& x) {
  if (x.is_zero()) return Valuation::infinity();
  return Valuation::of(v2(x.num()) - v2(x.den()));
}

ReductionClass rho(const Rational& x) {
  Valuation v = v2(x);
  if (!v.infinite && v.value < 0) return ReductionClass::Infinity;
  if (v.infinite || v.value > 0) return ReductionClass::Zero;
  return ReductionClass::One;
}

int mod4_class(const Rational& x) {
  Valuation v = v2(x);
  if (!v.infinite && v.value < 0)
    throw NotTwoIntegralError("mod4_class: " + x.str() + " is not 2-integral");
  // num * den^{-1} mod 4; den is odd here.
  long n = mpz_fdiv_ui(x.num().get_mpz_t(), 4);
  long d = mpz_fdiv_ui(x.den().get_mpz_t(), 4);
  long dinv = (d == 1) ? 1 : 3;  // 1^-1 = 1, 3^-1 = 3 mod 4
  return static_cast<int>((n * dinv) % 4);
}

namespace {

double log_of_int(const Int& n) {
  if (sgn(n) == 0) return 0.0;
  mpfr_t t;
  mpfr_init2(t, config().height_precision_bits);
  mpfr_set_z(t, n.get_mpz_t(), MPFR_RNDN);
  mpfr_abs(t, t, MPFR_RNDN);
  mpfr_log(t, t, MPFR_RNDN);
  double out = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return out;
}

}  // namespace

double log_height(const Rational& x) {
  if (x.is_zero()) return 0.0;
  Int a = abs(x.num());
  const Int& b = x.den();
  return log_of_int(a >= b ? a : b);
}

double hbar(const Rational& x) {
  if (x.is_zero() || x == Rational(1))
    throw DomainError("hbar undefined for x in {0,1}");
  Rational one(1);
  return (log_height(x) + log_height(one - x) + log_height(one - x.inv())) / 3.0;
}

}  // namespace legtors
