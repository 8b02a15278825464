#include "sl2hilb/cli/commands.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "sl2hilb/cli/cache.hpp"
#include "sl2hilb/cli/fixtures.hpp"
#include "sl2hilb/cli/format.hpp"
#include "sl2hilb/cli/hilbert_result.hpp"
#include "sl2hilb/laurent.hpp"
#include "sl2hilb/oracle.hpp"

namespace sl2hilb::cli {

using json = nlohmann::ordered_json;
using repmodel::Representation;

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Style style_of(const std::string& format) { return format == "latex" ? Style::Latex : Style::Text; }

std::string latex_rep(const Representation& rep) {
  std::string key = rep.key(), out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (key[i] != 'V') {
      out += key[i] == '+' ? " + " : std::string(1, key[i]);
      continue;
    }
    std::size_t j = i + 1;
    while (j < key.size() && std::isdigit(static_cast<unsigned char>(key[j]))) ++j;
    out += "V_{" + key.substr(i + 1, j - i - 1) + "}";
    i = j - 1;
  }
  return out;
}

// Cached when SL2HILB_CACHE_DIR is set.
HilbertResult obtain_result(const Representation& rep, unsigned threads, bool& from_cache) {
  std::optional<ResultCache> cache = ResultCache::from_environment();
  from_cache = false;
  if (cache) {
    if (auto hit = cache->load(rep)) {
      from_cache = true;
      return *hit;
    }
  }
  series::HilbertOptions options;
  options.threads = threads;
  HilbertResult r = compute_result(rep, options);
  if (cache) cache->store(r);
  return r;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

int cmd_series(const std::string& spec, int terms, const std::string& format, unsigned threads, std::ostream& out) {
  Representation rep = repmodel::parse_rep(spec);
  bool cached = false;
  HilbertResult r = obtain_result(rep, threads, cached);
  std::vector<std::string> coeffs;
  if (terms > 0)
    for (const Rational& c : exactalg::taylor_coeffs(r.series, terms - 1)) coeffs.push_back(to_string(c));

  if (format == "json") {
    json j = to_json(r);
    if (terms > 0) j["terms"] = coeffs;
    out << j.dump(2) << '\n';
  } else if (format == "latex") {
    out << "\\operatorname{Hilb}_{" << latex_rep(rep) << "}(t) = " << format_series(r.series, Style::Latex) << '\n';
    if (terms > 0) out << "% first " << terms << " coefficients: " << join(coeffs, ", ") << '\n';
  } else {
    out << "Hilb(" << rep.key() << ") = " << format_series(r.series) << '\n';
    if (terms > 0) out << "coefficients: " << join(coeffs, ", ") << '\n';
    out << (cached ? "cached result\n" : "time: " + std::to_string(r.seconds) + " s\n");
  }
  return kExitOk;
}

int cmd_gamma(const std::string& spec, const std::string& format, unsigned threads, std::ostream& out) {
  Representation rep = repmodel::parse_rep(spec);
  if (rep.has_trivial())
    throw UsageError("gamma: trivial summand not allowed; the coefficients are defined for V without V0 terms");
  bool cached = false;
  HilbertResult r = obtain_result(rep, threads, cached);
  if (format == "json") {
    out << to_json(r).dump(2) << '\n';
    return kExitOk;
  }
  if (format == "latex") {
    for (std::size_t m = 0; m < 4; ++m)
      out << "\\gamma_" << m << " = " << format_rational(r.gamma[m], Style::Latex) << " \\\\  % " << r.methods[m]
          << '\n';
    out << "a(\\mathbb{C}[" << latex_rep(rep) << "]^{\\operatorname{SL}_2}) = " << r.a_invariant << '\n';
    return kExitOk;
  }
  out << rep.key() << " (D = " << rep.dimension() << ", " << repmodel::to_string(repmodel::classify_case(rep).primary)
      << ")\n";
  for (std::size_t m = 0; m < 4; ++m)
    out << "gamma" << m << " = " << to_string(r.gamma[m]) << "  [" << r.methods[m] << "]\n";
  out << "a-invariant = " << r.a_invariant << '\n' << "pole order = " << r.pole_order << '\n';
  return kExitOk;
}

int cmd_expand(const std::string& spec, int terms, const std::string& format, unsigned threads, std::ostream& out) {
  Representation rep = repmodel::parse_rep(spec);
  if (terms < 1) throw UsageError("expand: --terms must be positive");
  series::HilbertOptions options;
  options.threads = threads;
  options.verify_degree = terms - 1;
  std::vector<Rational> c = exactalg::taylor_coeffs(series::hilbert_series(rep, options), terms - 1);
  if (format == "json") {
    json coeffs = json::array();
    for (const Rational& x : c) coeffs.push_back(to_string(x));
    out << json{{"rep", rep.key()}, {"coefficients", coeffs}}.dump(2) << '\n';
    return kExitOk;
  }
  // Ascending order reads better for a truncated expansion.
  const bool latex = format == "latex";
  std::vector<std::string> parts;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    std::string e = std::to_string(k);
    std::string mono = k == 0 ? "" : k == 1 ? "t" : latex ? "t^{" + e + "}" : "t^" + e;
    std::string coef = format_rational(c[k], style_of(format));
    parts.push_back(mono.empty() ? coef : c[k] == 1 ? mono : coef + (latex ? " " : "*") + mono);
  }
  if (parts.empty()) parts.push_back("0");
  std::string order = latex ? "O(t^{" + std::to_string(terms) + "})" : "O(t^" + std::to_string(terms) + ")";
  out << join(parts, " + ") << " + " << order << '\n';
  return kExitOk;
}

int cmd_table(const std::string& format, unsigned threads, std::ostream& out) {
  series::HilbertOptions options;
  options.threads = threads;
  std::vector<RowReport> reports = check_table(table_fixtures(), options);
  std::size_t matched = std::count_if(reports.begin(), reports.end(), [](const RowReport& r) { return r.ok(); });
  if (format == "json") {
    json rows = json::array();
    for (const RowReport& r : reports) rows.push_back({{"rep", r.rep}, {"ok", r.ok()}, {"diffs", r.diffs}});
    out << json{{"rows", rows}, {"matched", matched}, {"total", reports.size()}}.dump(2) << '\n';
  } else {
    for (const RowReport& r : reports) {
      out << (r.ok() ? "match  " : "DIFF   ") << r.rep << '\n';
      for (const std::string& d : r.diffs) out << "         " << d << '\n';
    }
    out << matched << '/' << reports.size() << " rows match\n";
  }
  return matched == reports.size() ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const std::string& spec, const VerifyOptions& options, const std::string& format, std::ostream& out) {
  Representation rep = repmodel::parse_rep(spec);
  std::vector<VerifyCheck> checks = verify_representation(rep, options);
  bool ok = std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.ok; });
  if (format == "json") {
    json arr = json::array();
    for (const VerifyCheck& c : checks) arr.push_back({{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    out << json{{"rep", rep.key()}, {"pass", ok}, {"checks", arr}}.dump(2) << '\n';
  } else {
    for (const VerifyCheck& c : checks) out << (c.ok ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    out << (ok ? "PASS " : "FAIL ") << rep.key() << '\n';
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

std::string b_values(const std::vector<Rational>& v) {
  std::vector<std::string> s;
  for (const Rational& x : v) s.push_back(to_string(x));
  return "(" + join(s, ", ") + ")";
}

const char* arity_name(laurent::SigmaArity a) {
  switch (a) {
    case laurent::SigmaArity::R:
      return "R";
    case laurent::SigmaArity::RS:
      return "RS";
    case laurent::SigmaArity::RST:
      return "RST";
    case laurent::SigmaArity::RSTU:
      return "RSTU";
  }
  return "?";
}

bool one_large(const Representation& rep) {
  static const std::vector<std::vector<int>> small = {{1}, {1, 1}, {2}};
  return std::find(small.begin(), small.end(), rep.degrees) == small.end();
}

}  // namespace

std::vector<VerifyCheck> verify_representation(const Representation& rep, const VerifyOptions& options) {
  std::vector<VerifyCheck> checks;
  series::HilbertOptions ho;
  ho.verify_degree = -1;
  ho.threads = options.threads;
  exactalg::RationalFunction h = series::hilbert_series(rep, ho);

  {
    VerifyCheck c{"oracle", true, ""};
    std::vector<Rational> got = exactalg::taylor_coeffs(h, options.max_degree);
    std::vector<BigInt> want = oracle::truncated_series(rep, options.max_degree);
    for (int k = 0; k <= options.max_degree && c.ok; ++k)
      if (got[static_cast<std::size_t>(k)] != Rational(want[static_cast<std::size_t>(k)])) {
        c.ok = false;
        c.detail = "t^" + std::to_string(k) + ": series " + to_string(got[static_cast<std::size_t>(k)]) +
                   ", oracle " + to_string(want[static_cast<std::size_t>(k)]);
      }
    if (c.ok) c.detail = "coefficients of t^0..t^" + std::to_string(options.max_degree) + " agree";
    checks.push_back(c);
  }

  const int D_total = rep.dimension() + rep.trivial_count;
  Representation core = rep.without_trivial();
  if (core.degrees.empty()) return checks;
  const int D = core.dimension();
  const bool large = one_large(core);
  exactalg::RationalFunction hc = rep.has_trivial() ? series::hilbert_series(core, ho) : h;

  {
    long a = laurent::a_invariant(core);
    VerifyCheck c{"degree", hc.degree() == a, ""};
    c.detail = "deg N - deg Q = " + std::to_string(hc.degree()) + ", a-invariant " + std::to_string(a);
    checks.push_back(c);
  }

  exactalg::LaurentExpansion l = exactalg::laurent_at_one(hc, 4);
  if (large) {
    VerifyCheck c{"pole order", l.pole_order == D - 3, ""};
    c.detail = "pole of order " + std::to_string(l.pole_order) + " at t = 1, expected D - 3 = " + std::to_string(D - 3);
    checks.push_back(c);
  }

  {
    laurent::GammaResult g = laurent::gammas(core, ho);
    VerifyCheck c{"closed form vs series", true, ""};
    int compared = 0;
    for (std::size_t m = 0; m < 4 && c.ok; ++m) {
      if (g.method[m] != laurent::Method::ClosedForm) continue;
      ++compared;
      if (g.gamma[m] != l.coeffs[m]) {
        c.ok = false;
        c.detail = "gamma" + std::to_string(m) + ": closed form " + to_string(g.gamma[m]) + ", series " +
                   to_string(l.coeffs[m]);
      }
    }
    if (c.ok) c.detail = std::to_string(compared) + " closed-form coefficients agree with the series";
    checks.push_back(c);
  }

  if (large) {
    const auto& y = l.coeffs;
    VerifyCheck c{"coefficient relations", true, ""};
    if (y[1] != Rational(3, 2) * y[0]) {
      c.ok = false;
      c.detail = "gamma1 = " + to_string(y[1]) + " but 3 gamma0 / 2 = " + to_string(Rational(3, 2) * y[0]);
    } else if (10 * y[1] - 15 * y[2] + 6 * y[3] != 0) {
      c.ok = false;
      c.detail = "10 gamma1 - 15 gamma2 + 6 gamma3 = " + to_string(Rational(10 * y[1] - 15 * y[2] + 6 * y[3]));
    } else {
      c.detail = "gamma1 = 3 gamma0 / 2 and 10 gamma1 - 15 gamma2 + 6 gamma3 = 0";
    }
    checks.push_back(c);

    int sign = (D_total - 3) % 2 == 0 ? 1 : -1;
    VerifyCheck fe{"functional equation", exactalg::satisfies_functional_equation(h, sign, D_total), ""};
    fe.detail = std::string("Hilb(1/t) ") + (fe.ok ? "=" : "!=") + " " + (sign > 0 ? "" : "-") + "t^" +
                std::to_string(D_total) + " Hilb(t)";
    checks.push_back(fe);
  }

  {
    repmodel::WeightSystem ws = repmodel::weight_system(core);
    repmodel::GammaCase gcase = repmodel::classify_case(core).primary;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> R(0, D + 3), small(0, 4);
    VerifyCheck sums{"perturbed sum identities", true, ""};
    VerifyCheck raw{"perturbed coefficient identities", true, ""};
    // The raw sums reduce to the Schur forms only when all their powers of b
    // are non-negative (D >= 4 + order) and lambda is large enough for the
    // Schur vanishings used: C >= 2 at order 0, C >= 3 beyond.
    int gamma_orders = ws.C < 2 ? 0 : ws.C < 3 ? 1 : 3;
    gamma_orders = std::clamp(std::min(gamma_orders, D - 3), 0, 3);
    for (int draw = 0; draw < options.draws && sums.ok && raw.ok; ++draw) {
      laurent::PerturbedParams p = laurent::PerturbedParams::random(ws, rng);
      for (int a = 1; a <= 4 && sums.ok; ++a) {
        laurent::SigmaExponents x{R(rng), small(rng), small(rng), small(rng)};
        auto arity = static_cast<laurent::SigmaArity>(a);
        Rational lhs = laurent::sigma_sum_raw(arity, x, ws, p), rhs = laurent::sigma_sum_schur(arity, x, ws, p);
        if (lhs != rhs) {
          sums.ok = false;
          sums.detail = "draw " + std::to_string(draw) + ", arity " + arity_name(arity) + ", (R,S,T,U) = (" +
                        std::to_string(x.R) + "," + std::to_string(x.S) + "," + std::to_string(x.T) + "," +
                        std::to_string(x.U) + "), b on lambda = " + b_values(p.lambda_values(ws)) + ": raw " +
                        to_string(lhs) + ", Schur " + to_string(rhs);
        }
      }
      for (int m = 0; m < gamma_orders && raw.ok; ++m) {
        Rational lhs = laurent::gamma_raw(m, ws, p, gcase), rhs = laurent::gamma_schur(m, ws, p, gcase);
        if (lhs != rhs) {
          raw.ok = false;
          raw.detail = "draw " + std::to_string(draw) + ", order " + std::to_string(m) + ", b on lambda = " +
                       b_values(p.lambda_values(ws)) + ": raw " + to_string(lhs) + ", Schur " + to_string(rhs);
        }
      }
    }
    if (sums.ok) sums.detail = std::to_string(options.draws) + " draws, four arities each";
    checks.push_back(sums);
    if (gamma_orders > 0) {
      if (raw.ok)
        raw.detail = std::to_string(options.draws) + " draws, orders 0.." + std::to_string(gamma_orders - 1);
      checks.push_back(raw);
    }
  }

  for (const FixtureRow& row : table_fixtures()) {
    if (!(repmodel::parse_rep(row.rep) == rep)) continue;
    RowReport report = check_table({row}, ho).front();
    checks.push_back({"table row", report.ok(), report.ok() ? "series, gamma0..gamma3 and a match the reference row"
                                                            : join(report.diffs, "; ")});
  }
  return checks;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert series and Laurent coefficients of SL2 invariant rings", "sl2hilb"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  std::string spec, format = "text";
  int terms = 0, max_degree = 30, draws = 20;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  auto formats = CLI::IsMember({"text", "json", "latex"});
  auto add_common = [&](CLI::App* sub, bool needs_spec) {
    if (needs_spec) sub->add_option("spec", spec, "representation, e.g. V2+2V3 or 3,3,2")->required();
    sub->add_option("--format", format, "text, json or latex")->check(formats);
    sub->add_option("--threads", threads, "worker threads for series assembly")->check(CLI::Range(1u, 256u));
  };

  auto* series_cmd = app.add_subcommand("series", "exact Hilbert series");
  add_common(series_cmd, true);
  series_cmd->add_option("--terms", terms, "also print this many coefficients")->check(CLI::NonNegativeNumber);

  auto* gamma_cmd = app.add_subcommand("gamma", "Laurent coefficients gamma0..gamma3 and the a-invariant");
  add_common(gamma_cmd, true);

  auto* verify_cmd = app.add_subcommand("verify", "cross-check one representation");
  add_common(verify_cmd, true);
  verify_cmd->add_option("--max-degree", max_degree, "oracle comparison degree")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--draws", draws, "random parameter draws for the identities")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", seed, "seed for the draws");

  auto* table_cmd = app.add_subcommand("table", "recompute the table of exceptional representations");
  add_common(table_cmd, false);

  auto* expand_cmd = app.add_subcommand("expand", "leading power series coefficients");
  add_common(expand_cmd, true);
  int expand_terms = 20;
  expand_cmd->add_option("--terms", expand_terms, "number of coefficients")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (series_cmd->parsed()) return cmd_series(spec, terms, format, threads, out);
    if (gamma_cmd->parsed()) return cmd_gamma(spec, format, threads, out);
    if (expand_cmd->parsed()) return cmd_expand(spec, expand_terms, format, threads, out);
    if (table_cmd->parsed()) return cmd_table(format, threads, out);
    if (verify_cmd->parsed()) return cmd_verify(spec, VerifyOptions{max_degree, draws, seed, threads}, format, out);
  } catch (const repmodel::ParseError& e) {
    err << "error: cannot parse representation \"" << spec << "\" at position " << e.position() << ": " << e.what()
        << '\n';
    return kExitUsage;
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitInternal;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sl2hilb::cli
