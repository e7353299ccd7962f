#pragma once

/**
 * @file io.hpp
 * @brief Text formats shared by the command-line tool: rational and index
 *        literals, JSON encodings of exact values, and OEIS b-files.
 *
 * JSON-lines encoding of exact values:
 *   integer   JSON number when it fits in 64 bits, decimal string otherwise
 *   rational  string "p/q" (or "p" when integral)
 *   CFrac     string in the "[a0;a1,...]" text form
 */

#include <nlohmann/json.hpp>

#include <cctype>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chebconv/contfrac.hpp"
#include "chebconv/errors.hpp"
#include "chebconv/exact.hpp"

namespace chebconv {

namespace detail {
inline bool is_int_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

inline Int int_from_literal(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Int(std::string(s));
}
}  // namespace detail

/// "p", "-p" or "p/q"; DomainError on anything else, ZeroDenominator for q = 0.
inline Rat parse_rat(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!detail::is_int_literal(s)) throw DomainError("not a rational number: '" + std::string(s) + "'");
    return Rat(detail::int_from_literal(s));
  }
  const auto num = s.substr(0, slash);
  const auto den = s.substr(slash + 1);
  if (!detail::is_int_literal(num) || !detail::is_int_literal(den)) {
    throw DomainError("not a rational number: '" + std::string(s) + "'");
  }
  return make_rat(detail::int_from_literal(num), detail::int_from_literal(den));
}

/// Nonnegative integer written plainly or as "b^e" (e.g. "10^9").
inline Int parse_index(std::string_view s) {
  const auto caret = s.find('^');
  if (caret == std::string_view::npos) {
    if (!detail::is_int_literal(s)) throw DomainError("not an integer: '" + std::string(s) + "'");
    return detail::int_from_literal(s);
  }
  const auto base = s.substr(0, caret);
  const auto exp = s.substr(caret + 1);
  if (!detail::is_int_literal(base) || !detail::is_int_literal(exp) || exp[0] == '-') {
    throw DomainError("not an integer power: '" + std::string(s) + "'");
  }
  const Int e = detail::int_from_literal(exp);
  if (!e.fits_ulong_p() || e > 4096) throw DomainError("exponent too large in '" + std::string(s) + "'");
  Int r;
  mpz_pow_ui(r.get_mpz_t(), detail::int_from_literal(base).get_mpz_t(), e.get_ui());
  return r;
}

// --- JSON -----------------------------------------------------------------------

inline nlohmann::json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

inline Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (!detail::is_int_literal(s)) throw DomainError("JSON value is not an integer: " + s);
    return detail::int_from_literal(s);
  }
  throw DomainError("JSON value is not an integer: " + j.dump());
}

inline nlohmann::json rat_to_json(const Rat& r) { return r.get_str(); }

inline Rat rat_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  return Rat(int_from_json(j));
}

inline nlohmann::json coeffs_to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(int_to_json(c));
  return arr;
}

inline Poly coeffs_from_json(const nlohmann::json& j) {
  std::vector<Int> cs;
  for (const auto& e : j) cs.push_back(int_from_json(e));
  return Poly(std::move(cs));
}

// --- b-files ----------------------------------------------------------------------

using BFile = std::vector<std::pair<Int, Int>>;

/// "n a(n)" lines starting at n = offset.
inline std::string to_bfile(const std::vector<Int>& terms, long offset = 0) {
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    out += std::to_string(offset + static_cast<long>(k)) + " " + terms[k].get_str() + "\n";
  }
  return out;
}

/// Reads "n value" pairs; blank lines and '#' comments are skipped.
inline BFile parse_bfile(std::istream& in) {
  BFile out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line.substr(first));
    std::string idx, val, extra;
    ls >> idx >> val;
    if (!detail::is_int_literal(idx) || !detail::is_int_literal(val) || (ls >> extra)) {
      throw DomainError("b-file line " + std::to_string(lineno) + " is not 'n value': " + line);
    }
    out.emplace_back(detail::int_from_literal(idx), detail::int_from_literal(val));
  }
  return out;
}

struct BFileComparison {
  std::size_t compared = 0;
  // First disagreement: our index n, our value, the file's value at n + shift.
  std::optional<std::pair<long, std::pair<Int, Int>>> mismatch;

  bool ok() const { return compared > 0 && !mismatch; }
};

/// Compares ours[n] with the file entry indexed n + shift for every n both
/// sides cover.
inline BFileComparison compare_bfile(const std::vector<Int>& ours, const BFile& file, long shift) {
  BFileComparison r;
  for (std::size_t n = 0; n < ours.size(); ++n) {
    const Int want = static_cast<long>(n) + shift;
    for (const auto& [idx, value] : file) {
      if (idx != want) continue;
      ++r.compared;
      if (value != ours[n]) {
        r.mismatch = std::make_pair(static_cast<long>(n), std::make_pair(ours[n], value));
        return r;
      }
      break;
    }
  }
  return r;
}

}  // namespace chebconv
