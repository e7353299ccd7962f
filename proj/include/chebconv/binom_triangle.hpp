#pragma once

/**
 * @file binom_triangle.hpp
 * @brief The sum of products of two generalized binomials
 *
 *   f(a, d, n)_x = sum_{k=0}^{d-n} C(a+d+x-k, k) C(d+k-x, d-n-k),
 *
 * which does not depend on x, and the Pascal-like triangle
 * l_{i,j} = f(0, (i-1)/2, j-(i+1)/2) it produces: boundary l_{i,0} = (-1)^i,
 * l_{i,i} = 1, Pascal's rule inside. Also the matrices M = L U built from a
 * boundary sequence, the polynomials Q_N, and integer sequences read off
 * the triangle.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "chebconv/errors.hpp"
#include "chebconv/exact.hpp"

namespace chebconv {

/// Arguments of f. `m` = d - n is the summation length, so n = d - m;
/// this keeps n in d - N even when d is not an integer.
struct FParams {
  Rat a;
  Rat d;
  long m = 0;
  Rat x;
};

inline Rat f_eval(const FParams& p) {
  if (p.m < 0) throw DomainError("f(a,d,n): requires d - n >= 0");
  Rat total = 0;
  for (long k = 0; k <= p.m; ++k) {
    total += gen_binomial(Rat(p.a + p.d + p.x - k), k) * gen_binomial(Rat(p.d + k - p.x), p.m - k);
  }
  return total;
}

/// Residuals of the three functional equations of f; all zero.
struct FResiduals {
  Rat trivial;     // f(a,d,n)_x - f(a-2c, d+c, n+c)_{x+c} with c = a/2
  Rat shift_down;  // f(a,d,n)_x - f(a-1,d,n)_x - f(a-1,d,n+1)_{x-1}
  Rat shift_up;    // f(a,d,n)_x - f(a-1,d,n)_{x+1} - f(a-1,d,n+1)_{x+1}
};

inline FResiduals f_identity_residuals(const FParams& p) {
  if (p.m < 1) {
    throw DomainError("f recurrences need d - n >= 1 so that f(a-1,d,n+1) is defined");
  }
  const Rat base = f_eval(p);
  const Rat c = p.a / 2;
  FResiduals r;
  r.trivial = base - f_eval({p.a - 2 * c, p.d + c, p.m, p.x + c});
  r.shift_down = base - f_eval({p.a - 1, p.d, p.m, p.x}) - f_eval({p.a - 1, p.d, p.m - 1, p.x - 1});
  r.shift_up = base - f_eval({p.a - 1, p.d, p.m, p.x + 1}) - f_eval({p.a - 1, p.d, p.m - 1, p.x + 1});
  return r;
}

// --- the triangle -------------------------------------------------------------

class TriArray {
 public:
  TriArray() = default;
  explicit TriArray(std::vector<std::vector<Int>> rows) : rows_(std::move(rows)) {}

  std::size_t size() const { return rows_.size(); }
  const std::vector<Int>& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<std::vector<Int>>& rows() const { return rows_; }

  /// l_{i,j}, read as 0 outside 0 <= j <= i.
  Int at(long i, long j) const {
    if (i < 0 || j < 0 || j > i) return 0;
    return rows_.at(static_cast<std::size_t>(i))[static_cast<std::size_t>(j)];
  }

 private:
  std::vector<std::vector<Int>> rows_;
};

/// Rows 0 .. rows-1 by l_{i,j} = l_{i-1,j-1} + l_{i-1,j}.
inline TriArray triangle(std::size_t rows) {
  std::vector<std::vector<Int>> out;
  out.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<Int> r(i + 1);
    r[0] = (i % 2 == 0) ? 1 : -1;
    r[i] = 1;
    for (std::size_t j = 1; j < i; ++j) r[j] = out[i - 1][j - 1] + out[i - 1][j];
    out.push_back(std::move(r));
  }
  return TriArray(std::move(out));
}

/// l_{i,j} as f(0, (i-1)/2, j-(i+1)/2)_x; the same for every x.
inline Rat l_via_f(long i, long j, const Rat& x) {
  if (i < 0 || j < 0 || j > i) {
    throw DomainError("l_{i,j} needs 0 <= j <= i, got i = " + std::to_string(i) +
                      ", j = " + std::to_string(j));
  }
  return f_eval({Rat(0), make_rat(i - 1, 2), i - j, x});
}

/**
 * Q_N(z) = f(0, z/2, z/2 - N), interpolated through z = 0..N at x = 0
 * (Newton forward differences), as a polynomial in Q[z] of degree <= N.
 */
inline QPoly q_poly(long N) {
  if (N < 0) throw DomainError("Q_N needs N >= 0");
  const auto count = static_cast<std::size_t>(N) + 1;
  std::vector<Rat> diff(count);
  for (std::size_t z = 0; z < count; ++z) {
    diff[z] = f_eval({Rat(0), make_rat(static_cast<long>(z), 2), N, Rat(0)});
  }
  // diff[k] <- k-th forward difference at 0
  for (std::size_t k = 1; k < count; ++k) {
    for (std::size_t z = count - 1; z >= k; --z) diff[z] -= diff[z - 1];
  }
  // sum_k diff[k] * C(z, k), with C(z, k) = z(z-1)...(z-k+1)/k!
  QPoly out;
  QPoly falling{Rat(1)};
  Rat fact = 1;
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) {
      falling = falling * QPoly{Rat(-static_cast<long>(k - 1)), Rat(1)};
      fact *= static_cast<long>(k);
    }
    out += falling * Rat(diff[k] / fact);
  }
  return out;
}

/// C(n,k) - l_{n,k} - 2 l_{n,k+1}; zero for all n, k >= 0.
inline Rat binom_l_identity(long n, long k) {
  if (n < 0 || k < 0) throw DomainError("binom_l_identity needs n, k >= 0");
  const TriArray t = triangle(static_cast<std::size_t>(n) + 1);
  const Rat c = gen_binomial(Rat(n), k);
  return Rat(c - t.at(n, k) - 2 * t.at(n, k + 1));
}

/// x^n - (-1)^n - (x+1) sum_{k=1}^{n} l_{n,k} (x-1)^{k-1}; the zero polynomial.
inline Poly power_identity_residual(long n) {
  if (n < 0) throw DomainError("power identity needs n >= 0");
  const TriArray t = triangle(static_cast<std::size_t>(n) + 1);
  Poly s;
  Poly pw{1};
  const Poly x_minus_1{-1, 1};
  for (long k = 1; k <= n; ++k) {
    s += pw * t.at(n, k);
    pw = pw * x_minus_1;
  }
  return Poly::monomial(1, static_cast<std::size_t>(n)) - Poly{n % 2 == 0 ? 1 : -1} -
         Poly{1, 1} * s;
}

// --- matrices -------------------------------------------------------------------

class SqMatrix {
 public:
  explicit SqMatrix(std::size_t size) : size_(size), e_(size * size, Int(0)) {
    if (size == 0) throw DomainError("matrix size must be >= 1");
  }

  std::size_t size() const { return size_; }
  Int& operator()(std::size_t i, std::size_t j) { return e_[i * size_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return e_[i * size_ + j]; }

  friend bool operator==(const SqMatrix&, const SqMatrix&) = default;

  friend SqMatrix operator*(const SqMatrix& a, const SqMatrix& b) {
    SqMatrix c(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i)
      for (std::size_t k = 0; k < a.size_; ++k)
        for (std::size_t j = 0; j < a.size_; ++j) c(i, j) += a(i, k) * b(k, j);
    return c;
  }

 private:
  std::size_t size_;
  std::vector<Int> e_;
};

namespace detail {
inline void check_alpha(const std::vector<Int>& alpha, std::size_t size) {
  if (size == 0) throw DomainError("matrix size must be >= 1");
  if (alpha.size() < size) throw DomainError("alpha has fewer entries than the matrix size");
  if (alpha[0] != 1) throw DomainError("alpha_0 must be 1, got " + alpha[0].get_str());
}
}  // namespace detail

/// M_{0,j} = 1, M_{i,0} = alpha_i, M_{i,j} = M_{i-1,j} + M_{i,j-1}.
inline SqMatrix matrix_M(const std::vector<Int>& alpha, std::size_t size) {
  detail::check_alpha(alpha, size);
  SqMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (j == 0) m(i, j) = alpha[i];
      else if (i == 0) m(i, j) = 1;
      else m(i, j) = m(i - 1, j) + m(i, j - 1);
    }
  }
  return m;
}

/// Closed form M_{i,j} = sum_{k=0}^{i} C(k+j-1, k) alpha_{i-k} for j > 0.
inline SqMatrix matrix_M_closed_form(const std::vector<Int>& alpha, std::size_t size) {
  detail::check_alpha(alpha, size);
  SqMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) {
    m(i, 0) = alpha[i];
    for (std::size_t j = 1; j < size; ++j) {
      Int s = 0;
      for (std::size_t k = 0; k <= i; ++k) {
        Int c;
        mpz_bin_uiui(c.get_mpz_t(), k + j - 1, k);
        s += c * alpha[i - k];
      }
      m(i, j) = s;
    }
  }
  return m;
}

struct LuReport {
  SqMatrix M;
  SqMatrix L;  // L_{i,j} = M_{i-j,j} for i >= j
  SqMatrix U;  // U_{i,j} = C(j, i)
  bool factorization_holds = false;
  bool unipotent = false;
  std::vector<Int> leading_dets;  // det M(k), k = 1..size

  bool ok() const {
    if (!factorization_holds || !unipotent) return false;
    for (const auto& d : leading_dets) {
      if (d != 1) return false;
    }
    return true;
  }
};

/**
 * Builds M, L and U, checks M = L U entrywise, and reads det M(k) off the
 * triangular factors: since L is lower and U upper triangular, the leading
 * k x k block of M is the product of the leading blocks of L and U, so its
 * determinant is the product of their diagonals.
 */
inline LuReport lu_check(const std::vector<Int>& alpha, std::size_t size) {
  SqMatrix m = matrix_M(alpha, size);
  SqMatrix l(size);
  SqMatrix u(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j <= i; ++j) l(i, j) = m(i - j, j);
    for (std::size_t j = i; j < size; ++j) mpz_bin_uiui(u(i, j).get_mpz_t(), j, i);
  }
  LuReport r{m, l, u, false, false, {}};
  r.factorization_holds = (l * u == m);
  bool unipotent = true;
  for (std::size_t i = 0; i < size; ++i) {
    if (l(i, i) != 1 || u(i, i) != 1) unipotent = false;
  }
  r.unipotent = unipotent;
  Int det = 1;
  for (std::size_t k = 0; k < size; ++k) {
    det *= l(k, k) * u(k, k);
    r.leading_dets.push_back(det);
  }
  return r;
}

/// alpha_i = (-1)^i; matrix_M of it is M_{i,j} = l_{i+j,j}.
inline std::vector<Int> alternating_alpha(std::size_t size) {
  std::vector<Int> a(size);
  for (std::size_t i = 0; i < size; ++i) a[i] = (i % 2 == 0) ? 1 : -1;
  return a;
}

// --- integer sequences ----------------------------------------------------------

enum class SequenceName { RowSums, Central, WeightKPlus1, WeightKMinus1, Weight2KPlus1 };

inline std::string_view to_string(SequenceName name) {
  switch (name) {
    case SequenceName::RowSums: return "row_sums";
    case SequenceName::Central: return "central";
    case SequenceName::WeightKPlus1: return "weight_k_plus_1";
    case SequenceName::WeightKMinus1: return "weight_k_minus_1";
    case SequenceName::Weight2KPlus1: return "weight_2k_plus_1";
  }
  return "?";
}

inline SequenceName parse_sequence_name(std::string_view s) {
  for (auto n : {SequenceName::RowSums, SequenceName::Central, SequenceName::WeightKPlus1,
                 SequenceName::WeightKMinus1, SequenceName::Weight2KPlus1}) {
    if (to_string(n) == s) return n;
  }
  throw UnknownSequence("unknown sequence '" + std::string(s) +
                        "' (expected row_sums, central, weight_k_plus_1, weight_k_minus_1 "
                        "or weight_2k_plus_1)");
}

/**
 * First `count` terms, n = 0, 1, ...:
 *   row_sums          s_n = sum_k l_{n,k}
 *   central           c_n = l_{2n,n}
 *   weight_k_plus_1   a_n = sum_k l_{n,k} (k+1)
 *   weight_k_minus_1  b_n = sum_{k>=2} l_{n,k} (k-1)
 *   weight_2k_plus_1  e_n = sum_k l_{n,k} (2k+1)
 */
inline std::vector<Int> sequences(SequenceName name, std::size_t count) {
  if (count < 1) throw DomainError("sequence count must be >= 1");
  const std::size_t rows = name == SequenceName::Central ? 2 * count - 1 : count;
  const TriArray t = triangle(rows);
  std::vector<Int> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    if (name == SequenceName::Central) {
      out.push_back(t.row(2 * n)[n]);
      continue;
    }
    Int s = 0;
    const auto& r = t.row(n);
    for (std::size_t k = 0; k < r.size(); ++k) {
      const long kk = static_cast<long>(k);
      switch (name) {
        case SequenceName::RowSums: s += r[k]; break;
        case SequenceName::WeightKPlus1: s += r[k] * (kk + 1); break;
        case SequenceName::WeightKMinus1:
          if (k >= 2) s += r[k] * (kk - 1);
          break;
        case SequenceName::Weight2KPlus1: s += r[k] * (2 * kk + 1); break;
        default: break;
      }
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace chebconv
