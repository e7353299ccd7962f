#pragma once

/**
 * @file identities.hpp
 * @brief Vajda-type identities and the supporting lemmas for Chebyshev
 *        polynomials as exact polynomial residuals, with exhaustive sweeps.
 *
 * Each identity is represented by its signed terms, LHS = sum(lhs) and
 * RHS = sum(rhs); the residual LHS - RHS is returned as a polynomial so a
 * failure carries the whole discrepancy.
 */

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "chebconv/chebyshev.hpp"
#include "chebconv/errors.hpp"
#include "chebconv/exact.hpp"

namespace chebconv {

enum class IdentityTag {
  VajdaUU,    // U_{n+i}U_{n+j} - U_{n-1}U_{n+1+i+j} = U_iU_j
  VajdaTT,    // T_{n+i}T_{n+j} - T_{n-1}T_{n+1+i+j} = (1-x^2)U_iU_j
  VajdaTU_U,  // T_{n+i}U_{n+j} - U_{n-1}T_{n+1+i+j} = T_iU_j
  VajdaTU_T,  // T_{n+i}U_{n+j} - T_{n-1}U_{n+1+i+j} = -U_iT_{j+2}
  VajdaPell,  // T_{n+i}T_{n+j} - (x^2-1)U_{n-1}U_{n-1+i+j} = T_iT_j
  LemUT,      // xU_d = U_{d-1} + T_{d+1}
  LemUU,      // U_d^2 = U_{d-1}^2 + 2T_{d+1}U_{d-1} + 1
  Lem2TU,     // 2T_dU_n = U_{n+d} + U_{n-d}
  LemDouble,  // U_{2n-1} = 2T_nU_{n-1}
  LemCompose  // U_{(n-1)d-1} U_{n-1}oT_d = U_{nd-1} U_{n-2}oT_d
};

inline constexpr std::array<IdentityTag, 10> kAllIdentityTags = {
    IdentityTag::VajdaUU,   IdentityTag::VajdaTT, IdentityTag::VajdaTU_U, IdentityTag::VajdaTU_T,
    IdentityTag::VajdaPell, IdentityTag::LemUT,   IdentityTag::LemUU,     IdentityTag::Lem2TU,
    IdentityTag::LemDouble, IdentityTag::LemCompose};

inline std::string_view to_string(IdentityTag tag) {
  switch (tag) {
    case IdentityTag::VajdaUU: return "VajdaUU";
    case IdentityTag::VajdaTT: return "VajdaTT";
    case IdentityTag::VajdaTU_U: return "VajdaTU_U";
    case IdentityTag::VajdaTU_T: return "VajdaTU_T";
    case IdentityTag::VajdaPell: return "VajdaPell";
    case IdentityTag::LemUT: return "LemUT";
    case IdentityTag::LemUU: return "LemUU";
    case IdentityTag::Lem2TU: return "Lem2TU";
    case IdentityTag::LemDouble: return "LemDouble";
    case IdentityTag::LemCompose: return "LemCompose";
  }
  return "?";
}

inline IdentityTag parse_identity_tag(std::string_view s) {
  for (auto tag : kAllIdentityTags) {
    if (to_string(tag) == s) return tag;
  }
  throw DomainError("unknown identity tag '" + std::string(s) + "'");
}

inline bool is_vajda(IdentityTag tag) {
  return tag == IdentityTag::VajdaUU || tag == IdentityTag::VajdaTT ||
         tag == IdentityTag::VajdaTU_U || tag == IdentityTag::VajdaTU_T ||
         tag == IdentityTag::VajdaPell;
}

/// Named integer parameters; each tag reads only the names it uses.
struct IdentityParams {
  long n = 0;
  long i = 0;
  long j = 0;
  long d = 0;

  friend bool operator==(const IdentityParams&, const IdentityParams&) = default;
  friend auto operator<=>(const IdentityParams&, const IdentityParams&) = default;
};

/// Names of the parameters a tag uses, in display order.
inline std::vector<std::string_view> param_names(IdentityTag tag) {
  if (is_vajda(tag)) return {"n", "i", "j"};
  switch (tag) {
    case IdentityTag::LemUT:
    case IdentityTag::LemUU: return {"d"};
    case IdentityTag::LemDouble: return {"n"};
    default: return {"n", "d"};
  }
}

inline long param_value(const IdentityParams& p, std::string_view name) {
  if (name == "n") return p.n;
  if (name == "i") return p.i;
  if (name == "j") return p.j;
  return p.d;
}

/// "n=1,i=0,j=0"
inline std::string format_params(IdentityTag tag, const IdentityParams& p) {
  std::string out;
  for (auto name : param_names(tag)) {
    if (!out.empty()) out += ",";
    out += std::string(name) + "=" + std::to_string(param_value(p, name));
  }
  return out;
}

/// Throws DomainError naming the first violated precondition.
inline void check_identity_domain(IdentityTag tag, const IdentityParams& p) {
  auto fail = [&](const std::string& what) {
    throw DomainError(std::string(to_string(tag)) + ": requires " + what + " (got " +
                      format_params(tag, p) + ")");
  };
  if (is_vajda(tag)) {
    if (p.n < 1) fail("n >= 1");
    if (p.i < 0) fail("i >= 0");
    if (p.j < 0) fail("j >= 0");
    return;
  }
  switch (tag) {
    case IdentityTag::LemUT:
    case IdentityTag::LemUU:
      if (p.d < 1) fail("d >= 1");
      return;
    case IdentityTag::Lem2TU:
      if (p.n < 0) fail("n >= 0");
      if (p.d < 0 || p.d > p.n) fail("0 <= d <= n");
      return;
    case IdentityTag::LemDouble:
      if (p.n < 1) fail("n >= 1");
      return;
    case IdentityTag::LemCompose:
      if (p.n < 2) fail("n >= 2");
      if (p.d < 1) fail("d >= 1");
      return;
    default: return;
  }
}

/// Signed terms of both sides of one identity instance.
struct IdentityInstance {
  std::vector<Poly> lhs;
  std::vector<Poly> rhs;
};

inline Poly sum(const std::vector<Poly>& terms) {
  Poly s;
  for (const auto& t : terms) s += t;
  return s;
}

inline IdentityInstance identity_instance(IdentityTag tag, const IdentityParams& p) {
  check_identity_domain(tag, p);
  const long n = p.n, i = p.i, j = p.j, d = p.d;
  const Poly x = Poly::x();
  const Poly one_minus_x2{1, 0, -1};
  const Poly x2_minus_1{-1, 0, 1};
  switch (tag) {
    case IdentityTag::VajdaUU:
      return {{cheb_u(n + i) * cheb_u(n + j), -(cheb_u(n - 1) * cheb_u(n + 1 + i + j))},
              {cheb_u(i) * cheb_u(j)}};
    case IdentityTag::VajdaTT:
      return {{cheb_t(n + i) * cheb_t(n + j), -(cheb_t(n - 1) * cheb_t(n + 1 + i + j))},
              {one_minus_x2 * cheb_u(i) * cheb_u(j)}};
    case IdentityTag::VajdaTU_U:
      return {{cheb_t(n + i) * cheb_u(n + j), -(cheb_u(n - 1) * cheb_t(n + 1 + i + j))},
              {cheb_t(i) * cheb_u(j)}};
    case IdentityTag::VajdaTU_T:
      return {{cheb_t(n + i) * cheb_u(n + j), -(cheb_t(n - 1) * cheb_u(n + 1 + i + j))},
              {-(cheb_u(i) * cheb_t(j + 2))}};
    case IdentityTag::VajdaPell:
      return {{cheb_t(n + i) * cheb_t(n + j), -(x2_minus_1 * cheb_u(n - 1) * cheb_u(n - 1 + i + j))},
              {cheb_t(i) * cheb_t(j)}};
    case IdentityTag::LemUT:
      return {{x * cheb_u(d)}, {cheb_u(d - 1), cheb_t(d + 1)}};
    case IdentityTag::LemUU: {
      const Poly u = cheb_u(d - 1);
      return {{cheb_u(d) * cheb_u(d)}, {u * u, Poly{2} * cheb_t(d + 1) * u, Poly{1}}};
    }
    case IdentityTag::Lem2TU:
      return {{Poly{2} * cheb_t(d) * cheb_u(n)}, {cheb_u(n + d), cheb_u(n - d)}};
    case IdentityTag::LemDouble:
      return {{cheb_u(2 * n - 1)}, {Poly{2} * cheb_t(n) * cheb_u(n - 1)}};
    case IdentityTag::LemCompose: {
      const Poly td = cheb_t(d);
      return {{cheb_u((n - 1) * d - 1) * compose(cheb_u(n - 1), td)},
              {cheb_u(n * d - 1) * compose(cheb_u(n - 2), td)}};
    }
  }
  throw DomainError("unknown identity tag");
}

/// LHS - RHS; the zero polynomial for every in-domain parameter tuple.
inline Poly identity_residual(IdentityTag tag, const IdentityParams& p) {
  const auto inst = identity_instance(tag, p);
  return sum(inst.lhs) - sum(inst.rhs);
}

// --- sweeps ----------------------------------------------------------------

/// Inclusive upper bounds of a parameter box. Lower bounds are the domain
/// minimums of the tag; Lem2TU additionally clips d to n.
struct SweepBounds {
  long max_n = 6;
  long max_i = 4;
  long max_j = 4;
  long max_d = 6;
};

struct Counterexample {
  IdentityParams params;
  Poly residual;
};

struct SweepReport {
  IdentityTag tag = IdentityTag::VajdaUU;
  std::size_t checked = 0;
  std::vector<Counterexample> counterexamples;  // sorted by params

  bool ok() const { return counterexamples.empty(); }
};

/// Box used by the full verification suite for each tag.
inline SweepBounds standard_bounds(IdentityTag tag) {
  switch (tag) {
    case IdentityTag::VajdaTU_T: return {.max_n = 5, .max_i = 3, .max_j = 3};
    case IdentityTag::LemCompose: return {.max_n = 6, .max_d = 5};
    default: return {};
  }
}

/// Every tuple of the box, in lexicographic order.
inline std::vector<IdentityParams> sweep_tuples(IdentityTag tag, const SweepBounds& b) {
  auto bad = [&](const std::string& what) {
    throw DomainError(std::string(to_string(tag)) + ": malformed sweep bounds, " + what);
  };
  std::vector<IdentityParams> out;
  if (is_vajda(tag)) {
    if (b.max_n < 1) bad("need max_n >= 1");
    if (b.max_i < 0 || b.max_j < 0) bad("need max_i, max_j >= 0");
    for (long n = 1; n <= b.max_n; ++n)
      for (long i = 0; i <= b.max_i; ++i)
        for (long j = 0; j <= b.max_j; ++j) out.push_back({n, i, j, 0});
    return out;
  }
  switch (tag) {
    case IdentityTag::LemUT:
    case IdentityTag::LemUU:
      if (b.max_d < 1) bad("need max_d >= 1");
      for (long d = 1; d <= b.max_d; ++d) out.push_back({0, 0, 0, d});
      break;
    case IdentityTag::Lem2TU:
      if (b.max_n < 0 || b.max_d < 0) bad("need max_n, max_d >= 0");
      for (long n = 0; n <= b.max_n; ++n)
        for (long d = 0; d <= std::min(n, b.max_d); ++d) out.push_back({n, 0, 0, d});
      break;
    case IdentityTag::LemDouble:
      if (b.max_n < 1) bad("need max_n >= 1");
      for (long n = 1; n <= b.max_n; ++n) out.push_back({n, 0, 0, 0});
      break;
    case IdentityTag::LemCompose:
      if (b.max_n < 2) bad("need max_n >= 2");
      if (b.max_d < 1) bad("need max_d >= 1");
      for (long n = 2; n <= b.max_n; ++n)
        for (long d = 1; d <= b.max_d; ++d) out.push_back({n, 0, 0, d});
      break;
    default: break;
  }
  return out;
}

/**
 * Checks every tuple of the box. With jobs > 1 the tuples are split across
 * worker threads; counterexamples are sorted afterwards, so the report does
 * not depend on scheduling.
 */
inline SweepReport identity_sweep(IdentityTag tag, const SweepBounds& bounds, unsigned jobs = 1) {
  const auto tuples = sweep_tuples(tag, bounds);
  SweepReport report;
  report.tag = tag;
  report.checked = tuples.size();

  std::mutex mu;
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t k = begin; k < tuples.size(); k += step) {
      Poly r = identity_residual(tag, tuples[k]);
      if (!r.is_zero()) {
        std::lock_guard lock(mu);
        report.counterexamples.push_back({tuples[k], std::move(r)});
      }
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w, jobs);
    for (auto& t : pool) t.join();
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) { return a.params < b.params; });
  return report;
}

// --- report serialization ---------------------------------------------------

/// One line per counterexample, "tag params residual-degree".
inline std::string counterexample_lines(const SweepReport& r) {
  std::ostringstream os;
  for (const auto& c : r.counterexamples) {
    os << to_string(r.tag) << ' ' << format_params(r.tag, c.params) << ' ' << c.residual.degree()
       << '\n';
  }
  return os.str();
}

inline std::string summary_line(const SweepReport& r) {
  std::ostringstream os;
  os << to_string(r.tag) << ": " << r.counterexamples.size() << " counterexamples / " << r.checked
     << " tuples";
  return os.str();
}

inline nlohmann::json to_json(IdentityTag tag, const Counterexample& c) {
  nlohmann::json params = nlohmann::json::object();
  for (auto name : param_names(tag)) params[std::string(name)] = param_value(c.params, name);
  return {{"tag", std::string(to_string(tag))},
          {"params", params},
          {"residual_degree", c.residual.degree()}};
}

inline nlohmann::json summary_json(const SweepReport& r) {
  return {{"tag", std::string(to_string(r.tag))},
          {"checked", r.checked},
          {"counterexamples", r.counterexamples.size()}};
}

/// JSON-lines variant: one object per counterexample, then the summary.
inline std::string to_json_lines(const SweepReport& r) {
  std::string out;
  for (const auto& c : r.counterexamples) out += to_json(r.tag, c).dump() + "\n";
  out += summary_json(r).dump() + "\n";
  return out;
}

}  // namespace chebconv
