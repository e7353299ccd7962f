// chebconv: command-line front end.
//
// Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "chebconv/chebconv.hpp"

using namespace chebconv;
using nlohmann::json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Largest degree the cheb command will expand symbolically.
constexpr long kMaxSymbolicDegree = 1L << 16;

// --- cheb ---------------------------------------------------------------------

struct ChebOptions {
  std::string kind = "T";
  std::string n;
  std::optional<std::string> x;
  std::string format = "plain";
};

int run_cheb(const ChebOptions& o) {
  const ChebKind kind = parse_cheb_kind(o.kind);
  const Int n = parse_index(o.n);
  if (o.x) {
    const Rat x = parse_rat(*o.x);
    const Rat v = cheb_eval_big(kind, n, x);
    if (o.format == "json_lines") {
      std::cout << json{{"kind", std::string(to_string(kind))}, {"n", int_to_json(n)},
                        {"x", rat_to_json(x)}, {"value", rat_to_json(v)}}.dump()
                << "\n";
    } else if (o.format == "csv") {
      std::cout << "kind,n,x,value\n" << to_string(kind) << "," << n << "," << x << "," << v << "\n";
    } else {
      std::cout << v << "\n";
    }
    return 0;
  }
  if (n < 0) throw NegativeIndex("Chebyshev index must be nonnegative");
  if (n > kMaxSymbolicDegree) {
    throw DomainError("symbolic expansion limited to n <= " + std::to_string(kMaxSymbolicDegree) +
                      "; pass --x to evaluate at a point instead");
  }
  const Poly p = cheb(kind, n.get_si());
  if (o.format == "json_lines") {
    std::cout << json{{"kind", std::string(to_string(kind))}, {"n", n.get_si()}, {"coeffs", coeffs_to_json(p)}}.dump()
              << "\n";
  } else if (o.format == "csv") {
    std::cout << "k,coeff\n";
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) std::cout << k << "," << p.coeffs()[k] << "\n";
  } else {
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) std::cout << (k ? " " : "") << p.coeffs()[k];
    std::cout << "\n";
  }
  return 0;
}

// --- surd ---------------------------------------------------------------------

struct SurdOptions {
  std::string x;
  long n = 0;
  long d = 1;
  std::string method = "closed";
  std::string format = "plain";
};

int run_surd(const SurdOptions& o) {
  const Rat x = parse_rat(o.x);
  if (abs(x) <= 1) {
    throw DomainError("surd requires |x| > 1 so that x - sqrt(x^2 - 1) is irrational and the gap is defined, got x = " +
                      x.get_str());
  }
  if (o.n < 0 || o.d < 1) throw DomainError("surd requires n >= 0 and d >= 1");

  Rat s;
  std::optional<std::size_t> convergent_index;
  std::string cf_text;
  if (o.method == "series") {
    s = s_series(o.n, o.d)(x);
  } else if (o.method == "closed") {
    s = s_eval(o.n, o.d, x);
  } else {
    if (!is_integer(x)) throw DomainError("--method cf requires an integer x >= 2");
    if (x < 0) throw DomainError("--method cf requires an integer x >= 2");
    // S_{n,d} is the convergent with index 2 + 2m, m = (d+1)^{n+1} - 2.
    const long idx = detail::symbolic_index(o.n, o.d);
    const auto k = static_cast<std::size_t>(2 + 2 * (idx - 2));
    const auto expansion = surd_expand(x.get_num(), k + 2);
    const auto conv = convergents(expansion.cf);
    s = conv[k];
    if (s != s_eval(o.n, o.d, x)) throw std::logic_error("convergent does not match the closed form");
    convergent_index = k;
    CFrac head;
    head.quotients.assign(expansion.cf.quotients.begin(),
                          expansion.cf.quotients.begin() + static_cast<long>(std::min<std::size_t>(k + 2, 6)));
    cf_text = to_string(head);
    cf_text.insert(cf_text.size() - 1, ",...");
  }
  const Rat gap = gap_certificate(o.n, o.d, x);

  if (o.format == "json_lines") {
    json j{{"x", rat_to_json(x)}, {"n", o.n},           {"d", o.d},
           {"method", o.method},  {"value", rat_to_json(s)}, {"gap", rat_to_json(gap)}};
    if (convergent_index) {
      j["convergent_index"] = *convergent_index;
      j["cf"] = cf_text;
    }
    std::cout << j.dump() << "\n";
  } else if (o.format == "csv") {
    std::cout << "x,n,d,method,value,gap\n"
              << x << "," << o.n << "," << o.d << "," << o.method << "," << s << "," << gap << "\n";
  } else {
    std::cout << "S = " << s << "\n";
    std::cout << "gap = " << gap << "\n";
    if (convergent_index) std::cout << "convergent #" << *convergent_index << " of " << cf_text << "\n";
  }
  return 0;
}

// --- verify -------------------------------------------------------------------

struct VerifyOptions {
  std::string suite;
  std::optional<long> max_n;
  std::optional<long> max_ij;
  std::optional<long> max_d;
  std::optional<long> max_x;
  std::optional<long> size;
  long samples = 50;
  unsigned long seed = 1;
  unsigned jobs = 1;
  std::string format = "plain";
};

// Outcome of one family of checks outside the identity sweeps.
struct CheckReport {
  explicit CheckReport(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;  // sorted before printing
};

class Reporter {
 public:
  explicit Reporter(bool json_lines) : json_(json_lines) {}

  void add(const SweepReport& r) {
    if (json_) {
      for (const auto& c : r.counterexamples) std::cerr << to_json(r.tag, c).dump() << "\n";
      std::cout << summary_json(r).dump() << "\n";
    } else {
      std::cerr << counterexample_lines(r);
      std::cout << summary_line(r) << "\n";
    }
    failed_ = failed_ || !r.ok();
  }

  void add(CheckReport r) {
    std::sort(r.failures.begin(), r.failures.end());
    if (json_) {
      for (const auto& f : r.failures) std::cerr << json{{"check", r.name}, {"case", f}}.dump() << "\n";
      std::cout << json{{"check", r.name}, {"checked", r.checked}, {"counterexamples", r.failures.size()}}.dump()
                << "\n";
    } else {
      for (const auto& f : r.failures) std::cerr << r.name << " " << f << "\n";
      std::cout << r.name << ": " << r.failures.size() << " counterexamples / " << r.checked << " cases\n";
    }
    failed_ = failed_ || !r.failures.empty() || r.checked == 0;
  }

  int exit_code() const { return failed_ ? kExitFailure : 0; }

 private:
  bool json_;
  bool failed_ = false;
};

void verify_identities(const VerifyOptions& o, bool vajda, Reporter& out) {
  for (auto tag : kAllIdentityTags) {
    if (is_vajda(tag) != vajda) continue;
    SweepBounds b = standard_bounds(tag);
    if (o.max_n) b.max_n = *o.max_n;
    if (o.max_ij) b.max_i = b.max_j = *o.max_ij;
    if (o.max_d) b.max_d = *o.max_d;
    out.add(identity_sweep(tag, b, o.jobs));
  }
}

void verify_theorem1(const VerifyOptions& o, Reporter& out) {
  const long max_n = o.max_n.value_or(5);
  const long max_d = o.max_d.value_or(63);
  if (max_n < 0 || max_d < 1) throw DomainError("theorem1 needs --max-n >= 0 and --max-d >= 1");
  CheckReport quad{"quadratic_gap"};
  CheckReport routes{"route_equivalence"};
  const bool explicit_box = o.max_n || o.max_d;
  for (long n = 0; n <= max_n; ++n) {
    for (long d = 1; d <= max_d; ++d) {
      // Without explicit bounds, cover every (n, d) with (d+1)^{n+1} <= 64.
      if (!explicit_box && detail::surd_index(n, d) > 64) continue;
      const std::string label = "n=" + std::to_string(n) + ",d=" + std::to_string(d);
      const auto sides = theorem1_residual(n, d);
      ++quad.checked;
      if (sides.lhs != sides.rhs) quad.failures.push_back(label);
      const RatFunc closed = s_closed(n, d);
      ++routes.checked;
      if (s_series(n, d) != closed || s_recursive(n, d) != closed) routes.failures.push_back(label);
    }
  }
  out.add(std::move(quad));
  out.add(std::move(routes));
}

void verify_theorem5(const VerifyOptions& o, Reporter& out) {
  const long max_n = o.max_n.value_or(40);
  const long max_x = o.max_x.value_or(10);
  if (max_n < 0 || max_x < 2) throw DomainError("theorem5 needs --max-n >= 0 and --max-x >= 2");
  CheckReport r{"cf_ratio"};
  CheckReport member{"convergent_membership"};
  for (long x = 2; x <= max_x; ++x) {
    for (long n = 0; n <= max_n; ++n) {
      ++r.checked;
      const Rat want = Rat(cheb_eval_big(ChebKind::Second, Int(n), Rat(x)) /
                           cheb_eval_big(ChebKind::Second, Int(n + 1), Rat(x)));
      if (cf_eval(cf_theorem5(n, Int(x))) != want) {
        r.failures.push_back("n=" + std::to_string(n) + ",x=" + std::to_string(x));
      }
    }
    const auto conv = convergents(surd_expand(Int(x), 64).cf);
    for (long d = 1; d <= 2; ++d) {
      for (long n = 0; n <= 2; ++n) {
        ++member.checked;
        if (std::find(conv.begin(), conv.end(), s_eval(n, d, Rat(x))) == conv.end()) {
          member.failures.push_back("n=" + std::to_string(n) + ",d=" + std::to_string(d) + ",x=" + std::to_string(x));
        }
      }
    }
  }
  out.add(std::move(r));
  out.add(std::move(member));
}

Rat random_rat(std::mt19937_64& rng, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  return make_rat(Int(num(rng)), Int(den(rng)));
}

void verify_binom(const VerifyOptions& o, Reporter& out) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<long> mdist(0, 8);
  CheckReport constancy{"f_constant_in_x"};
  CheckReport recurrences{"f_recurrences"};
  for (long t = 0; t < o.samples; ++t) {
    const Rat a = random_rat(rng, 12, 4);
    const Rat d = random_rat(rng, 12, 4);
    const long m = mdist(rng);
    const std::string label = "a=" + a.get_str() + ",d=" + d.get_str() + ",m=" + std::to_string(m);
    const Rat first = f_eval({a, d, m, Rat(0)});
    ++constancy.checked;
    for (int k = 0; k < 5; ++k) {
      if (f_eval({a, d, m, random_rat(rng, 30, 7)}) != first) {
        constancy.failures.push_back(label);
        break;
      }
    }
    if (m >= 1) {
      ++recurrences.checked;
      const auto r = f_identity_residuals({a, d, m, random_rat(rng, 10, 5)});
      if (r.trivial != 0 || r.shift_down != 0 || r.shift_up != 0) recurrences.failures.push_back(label);
    }
  }
  const long max_n = o.max_n.value_or(20);
  if (max_n < 0) throw DomainError("binom needs --max-n >= 0");
  CheckReport binom{"binomial_from_l"};
  CheckReport power{"power_expansion"};
  for (long n = 0; n <= max_n; ++n) {
    for (long k = 0; k <= n; ++k) {
      ++binom.checked;
      if (binom_l_identity(n, k) != 0) binom.failures.push_back("n=" + std::to_string(n) + ",k=" + std::to_string(k));
    }
    ++power.checked;
    if (!power_identity_residual(n).is_zero()) power.failures.push_back("n=" + std::to_string(n));
  }
  out.add(std::move(constancy));
  out.add(std::move(recurrences));
  out.add(std::move(binom));
  out.add(std::move(power));
}

void verify_triangle(const VerifyOptions& o, Reporter& out) {
  const long rows = o.size.value_or(17);
  if (rows < 1) throw DomainError("triangle needs --size >= 1");
  std::mt19937_64 rng(o.seed);
  const TriArray t = triangle(static_cast<std::size_t>(rows));
  CheckReport entries{"l_from_f"};
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j <= i; ++j) {
      ++entries.checked;
      for (int k = 0; k < 3; ++k) {
        if (l_via_f(i, j, random_rat(rng, 25, 6)) != t.at(i, j)) {
          entries.failures.push_back("i=" + std::to_string(i) + ",j=" + std::to_string(j));
          break;
        }
      }
    }
  }
  CheckReport sums{"row_sum_recurrences"};
  const auto s = sequences(SequenceName::RowSums, static_cast<std::size_t>(std::max(rows, 41L)));
  for (std::size_t n = 1; n < s.size(); ++n) {
    ++sums.checked;
    const bool first = s[n] == 2 * (s[n - 1] + (n % 2 == 0 ? 1 : -1));
    const bool second = n < 2 || s[n] == 2 * s[n - 2] + s[n - 1];
    if (!first || !second) sums.failures.push_back("n=" + std::to_string(n));
  }
  out.add(std::move(entries));
  out.add(std::move(sums));
}

void verify_lu(const VerifyOptions& o, Reporter& out) {
  const long size = o.size.value_or(12);
  if (size < 1) throw DomainError("lu needs --size >= 1");
  const auto n = static_cast<std::size_t>(size);
  std::mt19937_64 rng(o.seed);
  std::vector<std::pair<std::string, std::vector<Int>>> alphas{{"alternating", alternating_alpha(n)}};
  std::uniform_int_distribution<long> entry(-1000, 1000);
  for (int k = 0; k < 5; ++k) {
    std::vector<Int> a{Int(1)};
    for (std::size_t i = 1; i < n; ++i) a.emplace_back(entry(rng));
    alphas.emplace_back("random" + std::to_string(k), std::move(a));
  }
  CheckReport r{"lu_unipotent"};
  CheckReport closed{"closed_form"};
  for (const auto& [name, alpha] : alphas) {
    const auto rep = lu_check(alpha, n);
    ++r.checked;
    if (!rep.ok()) r.failures.push_back(name);
    ++closed.checked;
    if (matrix_M_closed_form(alpha, n) != rep.M) closed.failures.push_back(name);
  }
  out.add(std::move(r));
  out.add(std::move(closed));
}

int run_verify(const VerifyOptions& o) {
  Reporter out(o.format == "json_lines");
  if (o.suite == "vajda") verify_identities(o, true, out);
  else if (o.suite == "lemmas") verify_identities(o, false, out);
  else if (o.suite == "theorem1") verify_theorem1(o, out);
  else if (o.suite == "theorem5") verify_theorem5(o, out);
  else if (o.suite == "binom") verify_binom(o, out);
  else if (o.suite == "triangle") verify_triangle(o, out);
  else verify_lu(o, out);
  return out.exit_code();
}

// --- seq ------------------------------------------------------------------------

struct SeqOptions {
  std::string name;
  long count = 10;
  std::string format = "plain";
  std::optional<std::string> compare;
  long shift = 0;
};

int run_seq(const SeqOptions& o) {
  if (o.count < 1) throw DomainError("--count must be >= 1");
  const auto terms = sequences(parse_sequence_name(o.name), static_cast<std::size_t>(o.count));
  if (o.compare) {
    std::ifstream in(*o.compare);
    if (!in) throw DomainError("cannot open b-file '" + *o.compare + "'");
    const auto cmp = compare_bfile(terms, parse_bfile(in), o.shift);
    if (cmp.mismatch) {
      const auto& [n, vals] = *cmp.mismatch;
      std::cout << "MISMATCH at n=" << n << " (file index " << n + o.shift << "): ours " << vals.first << ", file "
                << vals.second << "\n";
      return kExitFailure;
    }
    if (cmp.compared == 0) {
      std::cout << "NO OVERLAP: the file has no entries at indices " << o.shift << ".." << o.shift + o.count - 1
                << "\n";
      return kExitFailure;
    }
    std::cout << "OK: " << cmp.compared << " terms agree (shift " << o.shift << ")\n";
    return 0;
  }
  if (o.format == "bfile") {
    std::cout << to_bfile(terms);
  } else if (o.format == "csv") {
    std::cout << "n,value\n";
    for (std::size_t n = 0; n < terms.size(); ++n) std::cout << n << "," << terms[n] << "\n";
  } else if (o.format == "json_lines") {
    for (std::size_t n = 0; n < terms.size(); ++n) {
      std::cout << json{{"name", o.name}, {"n", n}, {"value", int_to_json(terms[n])}}.dump() << "\n";
    }
  } else {
    for (std::size_t n = 0; n < terms.size(); ++n) std::cout << (n ? " " : "") << terms[n];
    std::cout << "\n";
  }
  return 0;
}

// --- bench ----------------------------------------------------------------------

struct BenchOptions {
  std::string task;
  std::string n = "1000";
  std::string x = "3";
  long d = 1;
};

template <class F>
auto timed(F&& f, std::int64_t& ns) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
  return result;
}

void consistency(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("value consistency check failed: " + what);
}

int run_bench(const BenchOptions& o) {
  const Rat x = parse_rat(o.x);
  std::cout << "task,params,nanoseconds\n";
  std::int64_t ns = 0;
  if (o.task == "eval_matrix_power") {
    const Int n = parse_index(o.n);
    if (n < 1) throw DomainError("eval_matrix_power needs n >= 1");
    const Rat u = timed([&] { return cheb_eval_big(ChebKind::Second, n, x); }, ns);
    // Independent route: the doubling chain gives T_n, U_{n-1}, and U_n = T_n + x U_{n-1}.
    const auto [t, u_prev] = cheb_eval_doubling(n, x);
    consistency(u == Rat(t + x * u_prev), "U_n by matrix power vs doubling chain");
    std::cout << o.task << ",n=" << o.n << ";x=" << o.x << "," << ns << "\n";
  } else if (o.task == "eval_recurrence") {
    const Int n = parse_index(o.n);
    if (n < 0 || !n.fits_slong_p() || n > 10'000'000) throw DomainError("eval_recurrence needs 0 <= n <= 10^7");
    const long steps = n.get_si();
    const Rat u = timed(
        [&] {
          Rat prev = 0, cur = 1;
          const Rat two_x = 2 * x;
          for (long k = 0; k < steps; ++k) {
            Rat next = two_x * cur - prev;
            prev = std::move(cur);
            cur = std::move(next);
          }
          return cur;
        },
        ns);
    consistency(u == cheb_eval_big(ChebKind::Second, n, x), "recurrence vs matrix power");
    std::cout << o.task << ",n=" << o.n << ";x=" << o.x << "," << ns << "\n";
  } else {
    const long n = std::stol(o.n);
    const Rat a = timed([&] { return s_series(n, o.d)(x); }, ns);
    const std::string params = "n=" + o.n + ";d=" + std::to_string(o.d) + ";x=" + o.x;
    const std::int64_t series_ns = ns;
    const Rat b = timed([&] { return s_closed(n, o.d)(x); }, ns);
    consistency(a == b && b == s_eval(n, o.d, x), "series vs closed form");
    std::cout << "s_series," << params << "," << series_ns << "\n";
    std::cout << "s_closed," << params << "," << ns << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chebyshev convergents, identities and the Pascal-like triangle in exact arithmetic"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand help for all subcommands");

  const auto formats = [](std::vector<std::string> allowed) { return CLI::IsMember(std::move(allowed)); };

  ChebOptions cheb_o;
  auto* cheb_cmd = app.add_subcommand("cheb", "Coefficients of T_n or U_n, or a value with --x");
  cheb_cmd->add_option("--kind", cheb_o.kind, "T or U")->check(CLI::IsMember({"T", "U", "t", "u", "first", "second"}));
  cheb_cmd->add_option("--n", cheb_o.n, "Index, e.g. 12 or 10^9")->required();
  cheb_cmd->add_option("--x", cheb_o.x, "Evaluate at this rational instead of expanding");
  cheb_cmd->add_option("--format", cheb_o.format)->check(formats({"plain", "json_lines", "csv"}));

  SurdOptions surd_o;
  auto* surd_cmd = app.add_subcommand("surd", "Rational approximation S_{n,d}(x) of x - sqrt(x^2-1)");
  surd_cmd->add_option("--x", surd_o.x, "Rational x with |x| > 1")->required();
  surd_cmd->add_option("--n", surd_o.n)->capture_default_str();
  surd_cmd->add_option("--d", surd_o.d)->capture_default_str();
  surd_cmd->add_option("--method", surd_o.method)->check(CLI::IsMember({"series", "closed", "cf"}))->capture_default_str();
  surd_cmd->add_option("--format", surd_o.format)->check(formats({"plain", "json_lines", "csv"}));

  VerifyOptions ver_o;
  auto* ver_cmd = app.add_subcommand("verify", "Run an exhaustive verification suite");
  ver_cmd->add_option("--suite", ver_o.suite)
      ->required()
      ->check(CLI::IsMember({"vajda", "lemmas", "theorem1", "theorem5", "binom", "triangle", "lu"}));
  ver_cmd->add_option("--max-n", ver_o.max_n);
  ver_cmd->add_option("--max-ij", ver_o.max_ij);
  ver_cmd->add_option("--max-d", ver_o.max_d);
  ver_cmd->add_option("--max-x", ver_o.max_x);
  ver_cmd->add_option("--size", ver_o.size);
  ver_cmd->add_option("--samples", ver_o.samples)->capture_default_str();
  ver_cmd->add_option("--seed", ver_o.seed)->capture_default_str();
  ver_cmd->add_option("--jobs", ver_o.jobs)->check(CLI::Range(1u, 256u))->capture_default_str();
  ver_cmd->add_option("--format", ver_o.format)->check(formats({"plain", "json_lines"}));

  SeqOptions seq_o;
  auto* seq_cmd = app.add_subcommand("seq", "Integer sequences read off the triangle");
  seq_cmd->add_option("--name", seq_o.name)
      ->required()
      ->check(CLI::IsMember({"row_sums", "central", "weight_k_plus_1", "weight_k_minus_1", "weight_2k_plus_1"}));
  seq_cmd->add_option("--count", seq_o.count)->capture_default_str();
  seq_cmd->add_option("--format", seq_o.format)->check(formats({"plain", "bfile", "csv", "json_lines"}));
  seq_cmd->add_option("--compare", seq_o.compare, "Local b-file to compare against");
  seq_cmd->add_option("--shift", seq_o.shift, "Compare our term n with the file's term n + shift");

  BenchOptions bench_o;
  auto* bench_cmd = app.add_subcommand("bench", "Time one computation after checking it against another route");
  bench_cmd->add_option("--task", bench_o.task)
      ->required()
      ->check(CLI::IsMember({"eval_recurrence", "eval_matrix_power", "s_series_vs_closed"}));
  bench_cmd->add_option("--n", bench_o.n)->capture_default_str();
  bench_cmd->add_option("--x", bench_o.x)->capture_default_str();
  bench_cmd->add_option("--d", bench_o.d)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cheb_cmd) return run_cheb(cheb_o);
    if (*surd_cmd) return run_surd(surd_o);
    if (*ver_cmd) return run_verify(ver_o);
    if (*seq_cmd) return run_seq(seq_o);
    if (*bench_cmd) return run_bench(bench_o);
  } catch (const chebconv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
