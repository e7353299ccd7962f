#pragma once

#include <string>
#include <utility>

#include "chebconv/errors.hpp"
#include "chebconv/exact.hpp"

namespace chebconv {

/**
 * Reduced quotient of two integer polynomials.
 *
 * Canonical form: gcd(num, den) = 1 over Q[x], the contents of num and den
 * are coprime, and den has a positive leading coefficient. Zero is 0/1.
 * Two RatFunc values are equal as rational functions iff their
 * representations are equal.
 */
class RatFunc {
 public:
  RatFunc() : den_(Poly{1}) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
  }
  static RatFunc from_poly(Poly p) { return RatFunc(std::move(p), Poly{1}); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw ZeroDenominator("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }

  /// Exact value at x; PoleError where the denominator vanishes.
  Rat operator()(const Rat& x) const {
    Rat d = eval(den_, x);
    if (d == 0) throw PoleError("rational function has a pole at x = " + x.get_str());
    return Rat(eval(num_, x) / d);
  }

 private:
  void canonicalize() {
    if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly{1};
      return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = div_exact(num_, g);
      den_ = div_exact(den_, g);
    }
    Int c = gcd(content(num_), content(den_));
    if (den_.leading() < 0) c = -c;
    if (c != 1) {
      num_ = div_exact(num_, c);
      den_ = div_exact(den_, c);
    }
  }

  Poly num_;
  Poly den_;
};

/// Builds the canonical quotient num/den; ZeroDenominator when den = 0.
inline RatFunc ratfunc_make(Poly num, Poly den) {
  return RatFunc(std::move(num), std::move(den));
}

/// f(q(x)) for a polynomial substitution q.
inline RatFunc compose(const RatFunc& f, const Poly& q) {
  return RatFunc(compose(f.num(), q), compose(f.den(), q));
}

inline std::string to_string(const RatFunc& f) {
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
  return os << to_string(f);
}

}  // namespace chebconv
