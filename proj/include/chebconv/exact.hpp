#pragma once

/**
 * @file exact.hpp
 * @brief Exact integers, rationals and dense univariate polynomials.
 *
 * Int and Rat are GMP's mpz_class and mpq_class; every Rat produced here is
 * canonical (positive denominator, lowest terms). Polynomials store their
 * coefficients low-to-high without trailing zeros, so the zero polynomial is
 * the empty vector, its degree is -1, and equality is vector equality.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chebconv/errors.hpp"

namespace chebconv {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw ZeroDenominator("rational number with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Rat abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// Dense polynomial over an exact coefficient ring (Int or Rat).
template <class Coeff>
class BasicPoly {
 public:
  using coeff_type = Coeff;

  BasicPoly() = default;
  BasicPoly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }
  explicit BasicPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static BasicPoly constant(const Coeff& c) {
    return BasicPoly(std::vector<Coeff>{c});
  }
  static BasicPoly monomial(const Coeff& c, std::size_t k) {
    std::vector<Coeff> cs(k + 1, Coeff(0));
    cs[k] = c;
    return BasicPoly(std::move(cs));
  }
  static BasicPoly x() { return monomial(Coeff(1), 1); }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  Coeff coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Coeff(0);
  }
  // Precondition: !is_zero().
  const Coeff& leading() const { return coeffs_.back(); }

  /// Horner evaluation; X must be constructible from Coeff.
  template <class X>
  X operator()(const X& x) const {
    X acc(0);
    for (auto i = coeffs_.size(); i-- > 0;) {
      acc = acc * x + X(coeffs_[i]);
    }
    return acc;
  }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  BasicPoly& operator*=(const Coeff& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator-(BasicPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend BasicPoly operator*(BasicPoly a, const Coeff& s) { return a *= s; }
  friend BasicPoly operator*(const Coeff& s, BasicPoly a) { return a *= s; }

  // Schoolbook convolution.
  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return BasicPoly(std::move(out));
  }

  /// Multiply by x^k.
  BasicPoly shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Coeff> out(k, Coeff(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return BasicPoly(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using Poly = BasicPoly<Int>;
using QPoly = BasicPoly<Rat>;

/// p(q(x)) by Horner's rule in the polynomial ring.
template <class C>
BasicPoly<C> compose(const BasicPoly<C>& p, const BasicPoly<C>& q) {
  BasicPoly<C> r;
  const auto& cs = p.coeffs();
  for (auto i = cs.size(); i-- > 0;) {
    r = r * q + BasicPoly<C>::constant(cs[i]);
  }
  return r;
}

inline Rat eval(const Poly& p, const Rat& x) { return p(x); }
inline Rat eval(const QPoly& p, const Rat& x) { return p(x); }

inline QPoly to_qpoly(const Poly& p) {
  std::vector<Rat> cs(p.coeffs().begin(), p.coeffs().end());
  return QPoly(std::move(cs));
}

// --- integer polynomial gcd machinery -------------------------------------

/// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
inline Int content(const Poly& p) {
  Int g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

inline Poly div_exact(const Poly& p, const Int& s) {
  std::vector<Int> cs(p.coeffs());
  for (auto& c : cs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
  return Poly(std::move(cs));
}

/// p / content(p), normalized to a positive leading coefficient.
inline Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Int c = content(p);
  if (p.leading() < 0) c = -c;
  return div_exact(p, c);
}

/// Remainder of lc(b)^k * a modulo b for a suitable k; only its primitive part
/// is meaningful.
inline Poly pseudo_remainder(Poly a, const Poly& b) {
  if (b.is_zero()) throw ZeroDenominator("pseudo-remainder by the zero polynomial");
  const Int& lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(a.degree() - b.degree());
    Int g = gcd(a.leading(), lb);
    Int ma = lb / g;
    Int mb = a.leading() / g;
    a = a * ma - (b * mb).shifted(shift);
  }
  return a;
}

/// Primitive gcd over Q[x], scaled to a primitive integer polynomial with
/// positive leading coefficient.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly u = primitive_part(a);
  Poly v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    Poly r = primitive_part(pseudo_remainder(u, v));
    u = std::move(v);
    v = std::move(r);
  }
  return u;
}

/// Exact quotient a / b in Z[x]; throws std::logic_error if b does not divide a.
inline Poly div_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::logic_error("div_exact: inexact polynomial division");
  std::vector<Int> rem(a.coeffs());
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Int> quot(rem.size() - db, Int(0));
  const Int& lb = b.leading();
  for (auto k = quot.size(); k-- > 0;) {
    Int& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) {
      throw std::logic_error("div_exact: inexact polynomial division");
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
    quot[k] = std::move(q);
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::logic_error("div_exact: inexact polynomial division");
  }
  return Poly(std::move(quot));
}

// --- generalized binomial coefficients --------------------------------------

/**
 * C(a, k) for rational a and any integer k.
 *
 * k >= 0 gives a(a-1)...(a-k+1)/k!. Negative k follows the conventions used
 * by the binomial expansion of T_n: C(-1,-1) = 1, C(-1,-2) = -1, and every
 * other negative-k value is 0.
 */
inline Rat gen_binomial(const Rat& a, long k) {
  if (k == -1) return a == -1 ? Rat(1) : Rat(0);
  if (k == -2) return a == -1 ? Rat(-1) : Rat(0);
  if (k < 0) return Rat(0);
  if (is_integer(a)) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), a.get_num_mpz_t(), static_cast<unsigned long>(k));
    return Rat(r);
  }
  Rat r = 1;
  for (long i = 0; i < k; ++i) {
    r *= a - i;
    r /= i + 1;
  }
  return r;
}

// --- text ---------------------------------------------------------------------

inline std::string to_string(const Rat& r) { return r.get_str(); }

/// Human-readable form, highest degree first, e.g. "4*x^2 - 1".
template <class C>
std::string to_string(const BasicPoly<C>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& cs = p.coeffs();
  for (auto i = cs.size(); i-- > 0;) {
    if (cs[i] == 0) continue;
    C c = cs[i];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    const bool unit = (c == 1);
    if (i == 0 || !unit) os << c.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

template <class C>
std::ostream& operator<<(std::ostream& os, const BasicPoly<C>& p) {
  return os << to_string(p);
}

}  // namespace chebconv
