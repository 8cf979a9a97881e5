#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "legtors/errors.hpp"
#include "legtors/rational.hpp"

namespace legtors {

// Coefficient-ring helpers, overloaded per ring type and found by ADL.
inline bool ring_is_zero(const Int& x) { return sgn(x) == 0; }
inline Int ring_zero(const Int&) { return Int(0); }
inline Int ring_one(const Int&) { return Int(1); }
inline Int ring_divexact(const Int& a, const Int& b) {
  if (sgn(b) == 0) throw DivisionByZeroError("integer division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw InexactDivisionError("inexact integer division");
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool ring_is_zero(const Rational& x) { return x.is_zero(); }
inline Rational ring_zero(const Rational&) { return Rational(0); }
inline Rational ring_one(const Rational&) { return Rational(1); }
inline Rational ring_divexact(const Rational& a, const Rational& b) { return a / b; }
inline Rational ring_invert(const Rational& x) { return x.inv(); }

// Embedding of a coefficient into the evaluation ring (identity by default;
// quotient rings and prime fields add their own overloads).
template <class T>
inline T ring_embed(const T&, const T& c) {
  return c;
}
inline Rational ring_embed(const Rational&, const Int& c) { return Rational(c); }

/// Dense univariate polynomial, coefficients lowest-degree first.
/// The trailing coefficient is nonzero; the zero polynomial is empty.
template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(R x) {
    Poly p;
    if (!ring_is_zero(x)) p.c_.push_back(std::move(x));
    return p;
  }
  static Poly monomial(R x, long k) {
    Poly p;
    if (!ring_is_zero(x)) {
      p.c_.resize(static_cast<size_t>(k));  // zeros need a sample below
      // The k leading zero slots must hold actual ring zeros.
      for (long i = 0; i < k; ++i) p.c_[static_cast<size_t>(i)] = ring_zero(x);
      p.c_.push_back(std::move(x));
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<R>& coeffs() const { return c_; }
  std::vector<R>& coeffs_mut() { return c_; }

  const R& operator[](long i) const {
    assert(i >= 0 && i <= degree());
    return c_[static_cast<size_t>(i)];
  }
  const R& lc() const {
    assert(!is_zero());
    return c_.back();
  }

  void trim() {
    while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    Poly out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const Poly& big = a.c_.size() >= b.c_.size() ? a : b;
    const Poly& small = a.c_.size() >= b.c_.size() ? b : a;
    Poly out = big;
    for (size_t i = 0; i < small.c_.size(); ++i) out.c_[i] = out.c_[i] + small.c_[i];
    out.trim();
    return out;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, ring_zero(a.c_[0]));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (ring_is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (ring_is_zero(b.c_[j])) continue;
        out.c_[i + j] = out.c_[i + j] + a.c_[i] * b.c_[j];
      }
    }
    out.trim();
    return out;
  }

  Poly scaled(const R& s) const {
    if (ring_is_zero(s)) return Poly();
    Poly out = *this;
    for (auto& x : out.c_) x = x * s;
    out.trim();
    return out;
  }

  // Multiply by x^k.
  Poly shifted(long k) const {
    if (is_zero() || k == 0) return *this;
    Poly out;
    out.c_.reserve(c_.size() + static_cast<size_t>(k));
    for (long i = 0; i < k; ++i) out.c_.push_back(ring_zero(c_[0]));
    for (const auto& x : c_) out.c_.push_back(x);
    return out;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    Poly out;
    out.c_.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
      R term = c_[i];
      for (size_t k = 1; k < i; ++k) term = term + c_[i];  // i * c_i without scalar embed
      out.c_.push_back(term);
    }
    out.trim();
    return out;
  }

  template <class S>
  S eval(const S& x) const {
    if (is_zero()) return x - x;  // zero of the evaluation ring
    S acc = convert_coeff<S>(c_.back(), x);
    for (long i = degree() - 1; i >= 0; --i)
      acc = acc * x + convert_coeff<S>(c_[static_cast<size_t>(i)], x);
    return acc;
  }

  Poly pow(long e) const {
    Poly out = Poly::constant(ring_one(c_.empty() ? R() : c_[0]));
    Poly base = *this;
    if (e == 0) return out;
    if (is_zero()) return Poly();
    while (e > 0) {
      if (e & 1) out = out * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return out;
  }

 private:
  template <class S>
  static S convert_coeff(const R& c, const S& sample) {
    if constexpr (std::is_same_v<S, R>) {
      (void)sample;
      return c;
    } else {
      return S(c) + (sample - sample);  // embed via converting ctor, tie to ring of sample
    }
  }

  std::vector<R> c_;
};

using QPoly = Poly<Rational>;
using ZPoly = Poly<Int>;
// Bivariate polynomials are nested univariates: outer variable first.
using QPoly2 = Poly<Poly<Rational>>;
using ZPoly2 = Poly<Poly<Int>>;

// Nested polynomials form a ring themselves.
template <class R>
bool ring_is_zero(const Poly<R>& p) {
  return p.is_zero();
}
template <class R>
Poly<R> ring_zero(const Poly<R>&) {
  return Poly<R>();
}
template <class R>
Poly<R> ring_one(const Poly<R>&) {
  return Poly<R>::constant(ring_one(R()));
}
template <class R>
Poly<R> ring_divexact(const Poly<R>& a, const Poly<R>& b);

// ---------------------------------------------------------------------------
// Division

/// Division with remainder over a field: P = Q*quot + rem, deg rem < deg Q.
template <class R>
std::pair<Poly<R>, Poly<R>> divrem_field(const Poly<R>& p, const Poly<R>& q) {
  if (q.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  if (p.is_zero() || p.degree() < q.degree()) return {Poly<R>(), p};
  R lcinv = ring_invert(q.lc());
  std::vector<R> rem(p.coeffs());
  long dq = q.degree();
  long dquot = p.degree() - dq;
  std::vector<R> quot(static_cast<size_t>(dquot) + 1, ring_zero(p.lc()));
  for (long i = dquot; i >= 0; --i) {
    R factor = rem[static_cast<size_t>(i + dq)] * lcinv;
    if (!ring_is_zero(factor)) {
      quot[static_cast<size_t>(i)] = factor;
      for (long j = 0; j <= dq; ++j)
        rem[static_cast<size_t>(i + j)] = rem[static_cast<size_t>(i + j)] - factor * q[j];
    }
  }
  rem.resize(static_cast<size_t>(dq));
  return {Poly<R>(std::move(quot)), Poly<R>(std::move(rem))};
}

/// Exact division over an integral domain (coefficient divisions must be
/// exact at every step). Throws InexactDivisionError otherwise.
template <class R>
Poly<R> divexact_poly(const Poly<R>& p, const Poly<R>& q) {
  if (q.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  if (p.is_zero()) return Poly<R>();
  if (p.degree() < q.degree()) throw InexactDivisionError("degree of divisor too large");
  std::vector<R> rem(p.coeffs());
  long dq = q.degree();
  long dquot = p.degree() - dq;
  std::vector<R> quot(static_cast<size_t>(dquot) + 1, ring_zero(p.lc()));
  for (long i = dquot; i >= 0; --i) {
    const R& top = rem[static_cast<size_t>(i + dq)];
    if (ring_is_zero(top)) continue;
    R factor = ring_divexact(top, q.lc());
    quot[static_cast<size_t>(i)] = factor;
    for (long j = 0; j <= dq; ++j)
      rem[static_cast<size_t>(i + j)] = rem[static_cast<size_t>(i + j)] - factor * q[j];
  }
  for (const auto& x : rem)
    if (!ring_is_zero(x)) throw InexactDivisionError("nonzero remainder in exact division");
  return Poly<R>(std::move(quot));
}

template <class R>
Poly<R> ring_divexact(const Poly<R>& a, const Poly<R>& b) {
  return divexact_poly(a, b);
}

/// Pseudo-remainder: rem(lc(q)^(deg p - deg q + 1) * p, q). No inversions.
template <class R>
Poly<R> prem(const Poly<R>& p, const Poly<R>& q) {
  if (q.is_zero()) throw DivisionByZeroError("pseudo-division by zero");
  if (p.is_zero() || p.degree() < q.degree()) return p;
  std::vector<R> rem(p.coeffs());
  long dq = q.degree();
  long steps = p.degree() - dq;
  for (long i = steps; i >= 0; --i) {
    // rem <- lc(q)*rem - rem[i+dq]*x^i*q, keeping degrees aligned
    R top = rem[static_cast<size_t>(i + dq)];
    for (long j = static_cast<long>(rem.size()) - 1; j >= 0; --j)
      rem[static_cast<size_t>(j)] = rem[static_cast<size_t>(j)] * q.lc();
    if (!ring_is_zero(top)) {
      for (long j = 0; j <= dq; ++j)
        rem[static_cast<size_t>(i + j)] = rem[static_cast<size_t>(i + j)] - top * q[j];
    }
    rem[static_cast<size_t>(i + dq)] = ring_zero(q.lc());
  }
  rem.resize(static_cast<size_t>(dq));
  return Poly<R>(std::move(rem));
}

// ---------------------------------------------------------------------------
// GCDs

/// Monic gcd over a field via the Euclidean algorithm. gcd(0,0) is an error;
/// gcd(P,0) = monic(P). Inversion failures (zero divisors in quotient rings)
/// propagate as exceptions from ring_invert.
template <class R>
Poly<R> gcd_monic(Poly<R> a, Poly<R> b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0,0) undefined");
  while (!b.is_zero()) {
    auto [q, r] = divrem_field(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  return a.scaled(ring_invert(a.lc()));
}

inline Int content(const ZPoly& p) {
  Int g(0);
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero()) return p;
  Int g = content(p);
  if (sgn(p.lc()) < 0) g = -g;
  std::vector<Int> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(ring_divexact(c, g));
  return ZPoly(std::move(out));
}

/// Clears denominators: returns (c, P') with p = c * P', P' primitive over Z
/// with positive leading coefficient.
std::pair<Rational, ZPoly> to_primitive_z(const QPoly& p);
QPoly from_z(const ZPoly& p);

/// Subresultant-PRS gcd over Z; result is primitive with positive lead.
ZPoly gcd_z(const ZPoly& a, const ZPoly& b);

/// Monic gcd over Q computed through the primitivized integer route.
QPoly gcd_q_subresultant(const QPoly& a, const QPoly& b);

// ---------------------------------------------------------------------------
// Resultants

/// Resultant by the subresultant PRS (Cohen, Algorithm 3.3.7). Works over any
/// integral domain with exact division.
template <class R>
R resultant_prs(Poly<R> a, Poly<R> b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("resultant of zero polynomial");
  const R one = ring_one(a.lc());
  int sign = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    R out = one;
    for (long i = 0; i < a.degree(); ++i) out = out * b.lc();
    return sign < 0 ? -out : out;
  }
  R g = one, h = one;
  while (true) {
    long delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    Poly<R> r = prem(a, b);
    a = std::move(b);
    // divide r by g*h^delta
    R divisor = g;
    for (long i = 0; i < delta; ++i) divisor = divisor * h;
    if (r.is_zero()) return ring_zero(one);  // nonconstant common factor
    std::vector<R> coeffs;
    coeffs.reserve(r.coeffs().size());
    for (const auto& c : r.coeffs()) coeffs.push_back(ring_divexact(c, divisor));
    b = Poly<R>(std::move(coeffs));
    g = a.lc();
    // h = h^(1-delta) * g^delta
    if (delta > 0) {
      R gnum = one;
      for (long i = 0; i < delta; ++i) gnum = gnum * g;
      R hden = one;
      for (long i = 0; i + 1 < delta; ++i) hden = hden * h;
      h = ring_divexact(gnum, hden);
    }
    if (b.degree() == 0) {
      // h = lc(b)^deg(a) / h^(deg(a)-1)
      R num = one;
      for (long i = 0; i < a.degree(); ++i) num = num * b.lc();
      R den = one;
      for (long i = 0; i + 1 < a.degree(); ++i) den = den * h;
      R out = ring_divexact(num, den);
      return sign < 0 ? -out : out;
    }
  }
}

/// Sylvester-matrix resultant by fraction-free Gaussian elimination.
/// Used as an independent oracle for small degrees.
template <class R>
R resultant_sylvester(const Poly<R>& a, const Poly<R>& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("resultant of zero polynomial");
  long m = a.degree(), n = b.degree();
  if (m == 0 && n == 0) return ring_one(a.lc());
  long size = m + n;
  const R zero = ring_zero(a.lc());
  std::vector<std::vector<R>> mat(static_cast<size_t>(size),
                                  std::vector<R>(static_cast<size_t>(size), zero));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j <= m; ++j) mat[i][i + j] = a[m - j];
  for (long i = 0; i < m; ++i)
    for (long j = 0; j <= n; ++j) mat[n + i][i + j] = b[n - j];
  // Bareiss elimination
  R prev = ring_one(a.lc());
  int sign = 1;
  for (long k = 0; k < size - 1; ++k) {
    if (ring_is_zero(mat[k][k])) {
      long pivot = -1;
      for (long i = k + 1; i < size; ++i)
        if (!ring_is_zero(mat[i][k])) {
          pivot = i;
          break;
        }
      if (pivot < 0) return zero;
      std::swap(mat[static_cast<size_t>(k)], mat[static_cast<size_t>(pivot)]);
      sign = -sign;
    }
    for (long i = k + 1; i < size; ++i) {
      for (long j = k + 1; j < size; ++j) {
        R num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
        mat[i][j] = ring_divexact(num, prev);
      }
      mat[i][k] = zero;
    }
    prev = mat[k][k];
  }
  R det = mat[static_cast<size_t>(size - 1)][static_cast<size_t>(size - 1)];
  return sign < 0 ? -det : det;
}

// ---------------------------------------------------------------------------
// Bivariate helpers (outer variable first: P = sum_i outer^i * P_i(inner))

template <class R>
Poly<Poly<R>> transpose(const Poly<Poly<R>>& p) {
  long do_ = p.degree();
  long di = -1;
  for (long i = 0; i <= do_; ++i) di = std::max(di, p[i].degree());
  if (di < 0) return {};
  std::vector<Poly<R>> rows;
  rows.reserve(static_cast<size_t>(di) + 1);
  for (long j = 0; j <= di; ++j) {
    std::vector<R> row;
    row.reserve(static_cast<size_t>(do_) + 1);
    for (long i = 0; i <= do_; ++i) {
      if (j <= p[i].degree())
        row.push_back(p[i][j]);
      else
        row.push_back(ring_zero(p.lc().lc()));
    }
    rows.emplace_back(std::move(row));
  }
  return Poly<Poly<R>>(std::move(rows));
}

template <class R>
long inner_degree(const Poly<Poly<R>>& p) {
  long d = -1;
  for (long i = 0; i <= p.degree(); ++i) d = std::max(d, p[i].degree());
  return d;
}

template <class R>
long total_degree2(const Poly<Poly<R>>& p) {
  long d = -1;
  for (long i = 0; i <= p.degree(); ++i)
    if (!p[i].is_zero()) d = std::max(d, i + p[i].degree());
  return d;
}

template <class R, class S>
S eval2(const Poly<Poly<R>>& p, const S& outer, const S& inner) {
  S acc = outer - outer;
  for (long i = p.degree(); i >= 0; --i) acc = acc * outer + p[i].template eval<S>(inner);
  return acc;
}

// ---------------------------------------------------------------------------
// Operations used by the verification suites

/// Coefficientwise reduction mod 2^k, representatives in [0, 2^k).
ZPoly reduce_mod_2k(const ZPoly& p, int k);
ZPoly2 reduce_mod_2k(const ZPoly2& p, int k);

/// Rational roots with multiplicities, by numeric isolation plus exact
/// verification and repeated exact division.
std::vector<std::pair<Rational, long>> rational_roots(const QPoly& p);

/// True iff P has no repeated nonconstant factor over Q[outer, inner].
bool squarefree_bivariate(const QPoly2& p);

/// Exact divisibility of bivariate rationals: f | p.
bool divides_bivariate(const QPoly2& f, const QPoly2& p);

QPoly2 to_qpoly2(const ZPoly2& p);
ZPoly2 to_zpoly2_exact(const QPoly2& p);  // throws if any denominator != 1

}  // namespace legtors
