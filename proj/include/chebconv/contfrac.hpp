#pragma once

/**
 * @file contfrac.hpp
 * @brief Finite simple continued fractions, the expansion of U_n/U_{n+1},
 *        and the integer-only periodic expansion of x - sqrt(x^2 - 1).
 */

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chebconv/errors.hpp"
#include "chebconv/exact.hpp"

namespace chebconv {

/// [a0; a1, a2, ...] with a_k >= 1 for k >= 1.
struct CFrac {
  std::vector<Int> quotients;

  friend bool operator==(const CFrac&, const CFrac&) = default;
};

inline void validate(const CFrac& cf) {
  if (cf.quotients.empty()) throw MalformedCF("continued fraction has no partial quotients");
  for (std::size_t k = 1; k < cf.quotients.size(); ++k) {
    if (cf.quotients[k] <= 0) {
      throw MalformedCF("partial quotient a_" + std::to_string(k) + " = " +
                        cf.quotients[k].get_str() + " is not positive");
    }
  }
}

/// p_k/q_k for every prefix, from p_k = a_k p_{k-1} + p_{k-2} (same for q).
inline std::vector<Rat> convergents(const CFrac& cf) {
  validate(cf);
  std::vector<Rat> out;
  out.reserve(cf.quotients.size());
  Int p_prev = 1, p = cf.quotients[0];
  Int q_prev = 0, q = 1;
  out.emplace_back(p);
  for (std::size_t k = 1; k < cf.quotients.size(); ++k) {
    const Int& a = cf.quotients[k];
    Int p_next = a * p + p_prev;
    Int q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
    // gcd(p_k, q_k) = 1 always; make_rat only fixes the representation.
    out.push_back(make_rat(p, q));
  }
  return out;
}

inline Rat cf_eval(const CFrac& cf) { return convergents(cf).back(); }

/// [0; 2x-1, 1 (, 2(x-1), 1)^n], whose value is U_n(x)/U_{n+1}(x).
inline CFrac cf_theorem5(long n, const Int& x) {
  if (x <= 1) throw DomainError("cf_theorem5 requires integer x >= 2, got x = " + x.get_str());
  if (n < 0) throw DomainError("cf_theorem5 requires n >= 0");
  CFrac cf;
  cf.quotients = {Int(0), Int(2 * x - 1), Int(1)};
  for (long k = 0; k < n; ++k) {
    cf.quotients.emplace_back(2 * (x - 1));
    cf.quotients.emplace_back(1);
  }
  return cf;
}

/// State (P + sqrt(D)) / Q of the integer surd expansion.
struct SurdState {
  Int D;
  Int P;
  Int Q;

  friend bool operator==(const SurdState&, const SurdState&) = default;
};

struct SurdExpansion {
  CFrac cf;
  // Quotient index where the detected period starts and its length; both 0
  // when no state repeated within the requested count.
  std::size_t period_start = 0;
  std::size_t period_length = 0;
};

/**
 * First `count` partial quotients (a0 included) of x - sqrt(x^2 - 1) for
 * integer x >= 2, using only integer arithmetic.
 *
 * a0 = 0 since the value lies in (0, 1); its reciprocal is
 * (x + sqrt(D))/1 with D = x^2 - 1, expanded by
 *   a = floor((P + floor(sqrt D)) / Q),  P' = aQ - P,  Q' = (D - P'^2) / Q.
 * The period is found by the first revisit of a (P, Q) state.
 */
inline SurdExpansion surd_expand(const Int& x, std::size_t count) {
  if (x <= 1) throw DomainError("surd_expand requires integer x >= 2, got x = " + x.get_str());
  if (count < 1) throw DomainError("surd_expand requires count >= 1");
  SurdExpansion out;
  out.cf.quotients.emplace_back(0);

  SurdState s{Int(x * x - 1), x, Int(1)};
  Int root;
  mpz_sqrt(root.get_mpz_t(), s.D.get_mpz_t());
  std::map<std::pair<Int, Int>, std::size_t> seen;  // (P, Q) -> quotient index it produces

  for (std::size_t k = 1; k < count; ++k) {
    auto key = std::make_pair(s.P, s.Q);
    if (out.period_length == 0) {
      auto [it, inserted] = seen.emplace(key, k);
      if (!inserted) {
        out.period_start = it->second;
        out.period_length = k - it->second;
      }
    }
    Int a;
    mpz_fdiv_q(a.get_mpz_t(), Int(s.P + root).get_mpz_t(), s.Q.get_mpz_t());
    out.cf.quotients.push_back(a);
    Int p_next = a * s.Q - s.P;
    Int q_next;
    mpz_divexact(q_next.get_mpz_t(), Int(s.D - p_next * p_next).get_mpz_t(), s.Q.get_mpz_t());
    s.P = std::move(p_next);
    s.Q = std::move(q_next);
  }
  return out;
}

// --- text form ----------------------------------------------------------------

/// "[a0;a1,a2,...]", or "[a0]" for a single quotient.
inline std::string to_string(const CFrac& cf) {
  std::string out = "[";
  for (std::size_t k = 0; k < cf.quotients.size(); ++k) {
    if (k == 1) out += ";";
    if (k > 1) out += ",";
    out += cf.quotients[k].get_str();
  }
  return out + "]";
}

inline CFrac parse_cfrac(std::string_view text) {
  auto bad = [&] { return MalformedCF("cannot parse continued fraction '" + std::string(text) + "'"); };
  if (text.size() < 3 || text.front() != '[' || text.back() != ']') throw bad();
  std::string_view body = text.substr(1, text.size() - 2);
  CFrac cf;
  std::size_t pos = 0;
  bool first = true;
  while (pos <= body.size()) {
    const char sep = first ? ';' : ',';
    std::size_t end = body.find(sep, pos);
    if (end == std::string_view::npos) end = body.size();
    std::string token(body.substr(pos, end - pos));
    if (token.empty()) throw bad();
    for (std::size_t i = 0; i < token.size(); ++i) {
      const bool sign_ok = (i == 0 && token[i] == '-' && token.size() > 1);
      if (!sign_ok && !std::isdigit(static_cast<unsigned char>(token[i]))) throw bad();
    }
    cf.quotients.emplace_back(token);
    first = false;
    pos = end + 1;
  }
  validate(cf);
  return cf;
}

}  // namespace chebconv
