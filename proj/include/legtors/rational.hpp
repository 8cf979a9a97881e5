#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "legtors/errors.hpp"

namespace legtors {

using Int = mpz_class;

/// Exact rational number in lowest terms with positive denominator.
/// Normalization happens on construction, so equality is structural.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design
  Rational(const Int& n) : q_(n) {}
  Rational(const Int& num, const Int& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "-9/16", "7", "+3/5". Whitespace is not consumed.
  static std::optional<Rational> parse(std::string_view s);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational inv() const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;
};

/// Value of the 2-adic valuation: an integer or +infinity (only for 0).
struct Valuation {
  bool infinite = false;
  long value = 0;

  static Valuation infinity() { return {true, 0}; }
  static Valuation of(long v) { return {false, v}; }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
};

Valuation min(const Valuation& a, const Valuation& b);

/// Image of a rational in P^1(F_2): residue mod 2, or Infinity when the
/// 2-adic valuation is negative.
enum class ReductionClass { Zero, One, Infinity };

const char* to_string(ReductionClass c);

long v2(const Int& n);  // requires n != 0
Valuation v2(const Rational& x);

ReductionClass rho(const Rational& x);

// Residue of a 2-integral rational mod 4. Throws NotTwoIntegralError.
int mod4_class(const Rational& x);

// log max(|num|, den), at the configured height working precision.
double log_height(const Rational& x);

// (h(x) + h(1-x) + h(1-1/x)) / 3; invariant under x -> 1-x and x -> 1/x.
// Throws DomainError for x in {0,1}.
double hbar(const Rational& x);

}  // namespace legtors
