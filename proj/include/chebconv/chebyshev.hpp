#pragma once

/**
 * @file chebyshev.hpp
 * @brief Chebyshev polynomials T_n, U_n: symbolic generation, fast exact
 *        evaluation at huge indices, and their binomial-sum expansions.
 */

#include <cstddef>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chebconv/errors.hpp"
#include "chebconv/exact.hpp"

namespace chebconv {

enum class ChebKind { First, Second };

inline std::string_view to_string(ChebKind kind) {
  return kind == ChebKind::First ? "T" : "U";
}

inline ChebKind parse_cheb_kind(std::string_view s) {
  if (s == "T" || s == "t" || s == "first") return ChebKind::First;
  if (s == "U" || s == "u" || s == "second") return ChebKind::Second;
  throw DomainError("unknown Chebyshev kind '" + std::string(s) + "' (expected T or U)");
}

/**
 * Memo table for cheb(kind, n), filled by the three-term recurrence.
 *
 * Indices up to `cap` are kept; larger requests continue the recurrence from
 * the top two cached entries without storing the result. All access goes
 * through one mutex, so a shared table is safe for concurrent readers.
 */
class ChebTable {
 public:
  static constexpr std::size_t kDefaultCap = 512;

  explicit ChebTable(std::size_t cap = kDefaultCap) : cap_(cap) {}

  ChebTable(const ChebTable&) = delete;
  ChebTable& operator=(const ChebTable&) = delete;

  Poly get(ChebKind kind, long n) {
    if (n < 0) {
      throw NegativeIndex("Chebyshev index must be nonnegative, got " + std::to_string(n));
    }
    const auto idx = static_cast<std::size_t>(n);
    const Poly two_x{0, 2};

    std::unique_lock lock(mu_);
    auto& t = kind == ChebKind::First ? first_ : second_;
    if (t.empty()) {
      t.push_back(Poly{1});
      t.push_back(kind == ChebKind::First ? Poly{0, 1} : Poly{0, 2});
    }
    const std::size_t target = std::min(idx, cap_);
    while (t.size() <= target) t.push_back(two_x * t.back() - t[t.size() - 2]);
    if (idx < t.size()) return t[idx];

    std::size_t k = t.size() - 1;
    Poly prev = t[k - 1];
    Poly cur = t[k];
    lock.unlock();
    for (; k < idx; ++k) {
      Poly next = two_x * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }

  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
  std::mutex mu_;
  std::vector<Poly> first_;
  std::vector<Poly> second_;
};

inline ChebTable& default_cheb_table() {
  static ChebTable table;
  return table;
}

/// T_n (First) or U_n (Second) as an integer polynomial.
inline Poly cheb(ChebKind kind, long n) { return default_cheb_table().get(kind, n); }

inline Poly cheb_t(long n) { return cheb(ChebKind::First, n); }
inline Poly cheb_u(long n) { return cheb(ChebKind::Second, n); }

/// T_{nm} - T_n o T_m; the zero polynomial for all n, m >= 0.
inline Poly cheb_compose_check(long n, long m) {
  if (n < 0 || m < 0) throw NegativeIndex("cheb_compose_check: indices must be nonnegative");
  return cheb_t(n * m) - compose(cheb_t(n), cheb_t(m));
}

// --- fast evaluation --------------------------------------------------------

/// Ring-operation counter filled by the fast evaluators.
struct EvalStats {
  std::size_t ring_mults = 0;
};

namespace detail {

inline void count(EvalStats* stats, std::size_t m) {
  if (stats != nullptr) stats->ring_mults += m;
}

// M^k = a*M + b*I for the transfer matrix M = [[2x, -1], [1, 0]], using
// M^2 = 2x*M - I. Then a = U_{k-1}(x) and b = -U_{k-2}(x).
template <class R>
struct TransferPower {
  R a;
  R b;
};

template <class R>
TransferPower<R> transfer_power(const R& x, const Int& k, EvalStats* stats) {
  R a = 0;
  R b = 1;
  const R two_x = 2 * x;
  for (auto bit = mpz_sizeinbase(k.get_mpz_t(), 2); bit-- > 0;) {
    {
      // (aM + b)^2 = 2a(xa + b) M + (b - a)(b + a)
      R t = x * a;
      t += b;
      R s = b + a;
      b -= a;
      b *= s;
      a *= t;
      a *= 2;
      count(stats, 4);
    }
    if (mpz_tstbit(k.get_mpz_t(), bit) != 0) {
      // (aM + b) M = (2xa + b) M - a
      R na = two_x * a;
      na += b;
      b = std::move(a);
      b = -b;
      a = std::move(na);
      count(stats, 1);
    }
  }
  return {std::move(a), std::move(b)};
}

template <class R>
struct DoublingState {
  R t;       // T_k(x)
  R u_prev;  // U_{k-1}(x)
};

// T_{2k} = 2T_k^2 - 1 and U_{2k-1} = 2T_k U_{k-1}; unit steps use
// T_{k+1} = xT_k + (x^2 - 1)U_{k-1} and U_k = T_k + xU_{k-1}.
template <class R>
DoublingState<R> doubling_chain(const R& x, const Int& n, EvalStats* stats) {
  R t = 1;
  R u = 0;
  const R x2m1 = x * x - 1;
  for (auto bit = mpz_sizeinbase(n.get_mpz_t(), 2); bit-- > 0;) {
    u *= t;
    u *= 2;
    t *= t;
    t *= 2;
    t -= 1;
    count(stats, 4);
    if (mpz_tstbit(n.get_mpz_t(), bit) != 0) {
      R nt = x * t;
      R xu = x * u;
      u *= x2m1;
      nt += u;
      u = std::move(xu);
      u += t;
      t = std::move(nt);
      count(stats, 3);
    }
  }
  return {std::move(t), std::move(u)};
}

}  // namespace detail

/// U_{n-1}(x) and U_n(x) together.
struct AdjacentU {
  Rat prev;
  Rat cur;
};

/**
 * U_{n-1}(x), U_n(x) by binary powering of the transfer matrix: O(log n)
 * ring operations. Integer x runs entirely in Z.
 */
inline AdjacentU cheb_u_adjacent(const Int& n, const Rat& x, EvalStats* stats = nullptr) {
  if (n < 0) throw NegativeIndex("Chebyshev index must be nonnegative");
  if (is_integer(x)) {
    const Int xi = x.get_num();
    auto p = detail::transfer_power<Int>(xi, n, stats);
    Int cur = 2 * xi * p.a + p.b;
    return {Rat(p.a), Rat(cur)};
  }
  auto p = detail::transfer_power<Rat>(x, n, stats);
  Rat cur = 2 * x * p.a + p.b;
  return {std::move(p.a), std::move(cur)};
}

/**
 * Exact T_n(x) or U_n(x) for arbitrarily large n via transfer-matrix
 * powering. Agrees with evaluating cheb(kind, n).
 */
inline Rat cheb_eval_big(ChebKind kind, const Int& n, const Rat& x, EvalStats* stats = nullptr) {
  if (n < 0) throw NegativeIndex("Chebyshev index must be nonnegative");
  if (kind == ChebKind::Second) {
    const Int k = n + 1;
    if (is_integer(x)) {
      return Rat(detail::transfer_power<Int>(x.get_num(), k, stats).a);
    }
    return detail::transfer_power<Rat>(x, k, stats).a;
  }
  if (is_integer(x)) {
    const Int xi = x.get_num();
    auto p = detail::transfer_power<Int>(xi, n, stats);
    return Rat(Int(xi * p.a + p.b));
  }
  auto p = detail::transfer_power<Rat>(x, n, stats);
  return Rat(x * p.a + p.b);
}

/// Integer-argument overload that avoids rational overhead entirely.
inline Int cheb_eval_big(ChebKind kind, const Int& n, const Int& x, EvalStats* stats = nullptr) {
  if (n < 0) throw NegativeIndex("Chebyshev index must be nonnegative");
  if (kind == ChebKind::Second) {
    return detail::transfer_power<Int>(x, Int(n + 1), stats).a;
  }
  auto p = detail::transfer_power<Int>(x, n, stats);
  p.a *= x;
  p.a += p.b;
  return std::move(p.a);
}

/// T_n(x) and U_{n-1}(x) by the doubling formulas; a second route,
/// independent of the transfer-matrix state, for cross-checks.
inline std::pair<Int, Int> cheb_eval_doubling(const Int& n, const Int& x, EvalStats* stats = nullptr) {
  if (n < 0) throw NegativeIndex("Chebyshev index must be nonnegative");
  auto s = detail::doubling_chain<Int>(x, n, stats);
  return {std::move(s.t), std::move(s.u_prev)};
}

inline std::pair<Rat, Rat> cheb_eval_doubling(const Int& n, const Rat& x, EvalStats* stats = nullptr) {
  if (n < 0) throw NegativeIndex("Chebyshev index must be nonnegative");
  auto s = detail::doubling_chain<Rat>(x, n, stats);
  return {std::move(s.t), std::move(s.u_prev)};
}

// --- binomial expansions ------------------------------------------------------

/**
 * T_n or U_n assembled from the explicit binomial sums
 *
 *   T_n = 1/2 sum_k (-1)^k (C(n+1-k, k) - C(n-1-k, k-2)) (2x)^(n-2k)
 *   U_n =     sum_k (-1)^k  C(n-k, k)                   (2x)^(n-2k)
 *
 * over 0 <= k <= n/2, with the negative-lower-index conventions of
 * gen_binomial. The result coincides with cheb(kind, n).
 */
inline Poly cheb_coeffs_binomial(ChebKind kind, long n) {
  if (n < 0) throw NegativeIndex("Chebyshev index must be nonnegative, got " + std::to_string(n));
  std::vector<Int> coeffs(static_cast<std::size_t>(n) + 1, Int(0));
  for (long k = 0; 2 * k <= n; ++k) {
    Rat c;
    if (kind == ChebKind::Second) {
      c = gen_binomial(Rat(n - k), k);
    } else {
      c = gen_binomial(Rat(n + 1 - k), k) - gen_binomial(Rat(n - 1 - k), k - 2);
      c /= 2;
    }
    if (k % 2 == 1) c = -c;
    Int pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n - 2 * k));
    c *= pow2;
    if (!is_integer(c)) throw std::logic_error("cheb_coeffs_binomial: non-integral coefficient");
    coeffs[static_cast<std::size_t>(n - 2 * k)] = c.get_num();
  }
  return Poly(std::move(coeffs));
}

}  // namespace chebconv
