#pragma once

/**
 * @file surd.hpp
 * @brief Rational approximations S_{n,d} of x - sqrt(x^2 - 1) built from
 *        iterated Chebyshev polynomials.
 *
 *   S_{n,d} = sum_{k=0}^{n} U_{d-1}(T_{(d+1)^k}) * prod_{j=0}^{k} 1 / U_d(T_{(d+1)^j})
 *           = U_{(d+1)^{n+1}-2} / U_{(d+1)^{n+1}-1}
 *
 * and S^2 - 2xS + 1 = (prod_{j=0}^{n} 1 / U_d(T_{(d+1)^j}))^2, so the exact
 * quantity on the right certifies how close S is to the smaller root of
 * X^2 - 2xX + 1 without any irrational arithmetic.
 */

#include <string>
#include <vector>

#include "chebconv/chebyshev.hpp"
#include "chebconv/errors.hpp"
#include "chebconv/exact.hpp"
#include "chebconv/ratfunc.hpp"

namespace chebconv {

/// Largest (d+1)^{n+1} accepted by the symbolic constructors.
inline constexpr long kSymbolicIndexLimit = 1L << 14;

namespace detail {

inline void check_nd(long n, long d) {
  if (n < 0) throw DomainError("S_{n,d}: requires n >= 0, got n = " + std::to_string(n));
  if (d < 1) throw DomainError("S_{n,d}: requires d >= 1, got d = " + std::to_string(d));
}

/// (d+1)^{n+1} as an exact integer.
inline Int surd_index(long n, long d) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(d + 1), static_cast<unsigned long>(n + 1));
  return r;
}

/// (d+1)^{n+1}, or DegreeOverflow past the symbolic limit.
inline long symbolic_index(long n, long d) {
  check_nd(n, d);
  const Int idx = surd_index(n, d);
  if (idx > kSymbolicIndexLimit) {
    throw DegreeOverflow("S_{" + std::to_string(n) + "," + std::to_string(d) + "}: (d+1)^(n+1) = " +
                         idx.get_str() + " exceeds the symbolic limit " +
                         std::to_string(kSymbolicIndexLimit));
  }
  return idx.get_si();
}

inline long ipow(long base, long e) {
  long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

/// U_d o T_{(d+1)^j} for j = 0..n.
inline std::vector<Poly> series_denominators(long n, long d) {
  const Poly ud = cheb_u(d);
  std::vector<Poly> out;
  for (long j = 0; j <= n; ++j) out.push_back(compose(ud, cheb_t(ipow(d + 1, j))));
  return out;
}

}  // namespace detail

/// The defining sum-product, reduced to a canonical RatFunc.
inline RatFunc s_series(long n, long d) {
  detail::symbolic_index(n, d);
  const auto dens = detail::series_denominators(n, d);
  const Poly ud1 = cheb_u(d - 1);

  // Over the common denominator P_0...P_n the k-th term contributes
  // A_k * P_{k+1}...P_n.
  std::vector<Poly> tail(static_cast<std::size_t>(n) + 2, Poly{1});
  for (long k = n; k >= 0; --k) {
    tail[static_cast<std::size_t>(k)] = tail[static_cast<std::size_t>(k) + 1] * dens[static_cast<std::size_t>(k)];
  }
  Poly num;
  for (long k = 0; k <= n; ++k) {
    num += compose(ud1, cheb_t(detail::ipow(d + 1, k))) * tail[static_cast<std::size_t>(k) + 1];
  }
  return ratfunc_make(std::move(num), tail[0]);
}

/// Iterates S_{k+1,d} = (U_{d-1} + S_{k,d} o T_{d+1}) / U_d from S_{0,d} = U_{d-1}/U_d.
inline RatFunc s_recursive(long n, long d) {
  detail::symbolic_index(n, d);
  const Poly ud = cheb_u(d);
  const Poly ud1 = cheb_u(d - 1);
  const Poly td1 = cheb_t(d + 1);
  RatFunc s = ratfunc_make(ud1, ud);
  for (long k = 0; k < n; ++k) {
    RatFunc shifted = compose(s, td1);
    s = ratfunc_make(ud1 * shifted.den() + shifted.num(), ud * shifted.den());
  }
  return s;
}

/// U_{(d+1)^{n+1}-2} / U_{(d+1)^{n+1}-1}.
inline RatFunc s_closed(long n, long d) {
  const long idx = detail::symbolic_index(n, d);
  return ratfunc_make(cheb_u(idx - 2), cheb_u(idx - 1));
}

/**
 * Exact S_{n,d}(x) through the closed form and transfer-matrix evaluation;
 * no degree limit. PoleError when U_{(d+1)^{n+1}-1}(x) = 0.
 */
inline Rat s_eval(long n, long d, const Rat& x, EvalStats* stats = nullptr) {
  detail::check_nd(n, d);
  const Int idx = detail::surd_index(n, d);
  const auto u = cheb_u_adjacent(Int(idx - 1), x, stats);  // U_{idx-2}, U_{idx-1}
  if (u.cur == 0) {
    throw PoleError("S_{" + std::to_string(n) + "," + std::to_string(d) + "} has a pole at x = " +
                    x.get_str());
  }
  return Rat(u.prev / u.cur);
}

/// Both sides of S^2 - 2xS + 1 = 1/P^2 after clearing denominators, where
/// S = num/den and P = prod_j U_d o T_{(d+1)^j}:
///   lhs = (num^2 - 2x num den + den^2) * P^2,   rhs = den^2.
struct Theorem1Sides {
  Poly lhs;
  Poly rhs;
};

inline Theorem1Sides theorem1_residual(long n, long d) {
  const RatFunc s = s_closed(n, d);
  Poly prod{1};
  for (const auto& p : detail::series_denominators(n, d)) prod = prod * p;
  const Poly& a = s.num();
  const Poly& b = s.den();
  Poly quad = a * a - Poly{0, 2} * a * b + b * b;
  return {quad * prod * prod, b * b};
}

/**
 * g = 1 / (prod_{j=0}^{n} U_d(T_{(d+1)^j}(x)))^2, which equals
 * S_{n,d}(x)^2 - 2x S_{n,d}(x) + 1. Requires |x| > 1.
 */
inline Rat gap_certificate(long n, long d, const Rat& x) {
  detail::check_nd(n, d);
  if (abs(x) <= 1) throw DomainError("gap certificate requires |x| > 1, got x = " + x.get_str());
  Rat prod = 1;
  Int power = 1;
  for (long j = 0; j <= n; ++j) {
    const Rat t = cheb_eval_big(ChebKind::First, power, x);
    prod *= cheb_eval_big(ChebKind::Second, Int(d), t);
    power *= d + 1;
  }
  return Rat(1 / (prod * prod));
}

}  // namespace chebconv
