#include "copoly/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "copoly/errors.hpp"
#include "copoly/expr.hpp"
#include "copoly/family_io.hpp"
#include "copoly/format.hpp"
#include "copoly/genfun.hpp"
#include "copoly/verify.hpp"

namespace copoly::cli {

using copoly::to_json;
using copoly::to_latex;
using copoly::to_text;

namespace {

constexpr std::size_t kDefaultOrderCap = 16;

const char* kFormatHelp =
    "text lists polynomials in ascending powers (\"-2 + 4*x^2\"); latex uses descending "
    "powers (\"4x^{2} - 2\"); json serializes rationals as \"p/q\" strings";

struct FamilyOptions {
  std::string family;
  std::string alpha;
  std::string beta;
  std::string phi;
  std::string psi;
  std::string u0;
  std::string file;

  void attach(CLI::App& cmd) {
    cmd.add_option("--family", family, "hermite|laguerre|jacobi|legendre|bessel|custom");
    cmd.add_option("--alpha", alpha, "rational parameter alpha (p/q)");
    cmd.add_option("--beta", beta, "rational parameter beta (p/q)");
    cmd.add_option("--phi", phi, "custom phi, polynomial expression in x");
    cmd.add_option("--psi", psi, "custom psi, polynomial expression in x");
    cmd.add_option("--u0", u0, "custom u_0 normalization (default 1)");
    cmd.add_option("--family-file", file, "JSON family description");
  }

  FamilySpec resolve() const {
    ParamMap params;
    if (!alpha.empty()) params["alpha"] = parse_param("alpha", alpha);
    if (!beta.empty()) params["beta"] = parse_param("beta", beta);

    if (!file.empty()) {
      if (!family.empty() || !phi.empty() || !psi.empty())
        throw InvalidParameter("--family-file cannot be combined with --family/--phi/--psi");
      return load_family_file(file);
    }
    if (!phi.empty() || !psi.empty()) {
      if (phi.empty() || psi.empty()) throw InvalidParameter("a custom pair needs both --phi and --psi");
      if (!family.empty() && family != "custom")
        throw InvalidParameter("--phi/--psi define a custom pair; drop --family " + family);
      Rational seed = u0.empty() ? Rational(1) : parse_param("u0", u0);
      if (seed == 0) throw InvalidParameter("u0 must be nonzero");
      auto spec = FamilySpec::custom("custom", parse_poly_expr(phi, params), parse_poly_expr(psi, params),
                                     seed, params);
      check_pearson_degrees(spec.phi, spec.psi);
      return spec;
    }
    if (family.empty()) throw InvalidParameter("choose a family with --family, --phi/--psi or --family-file");
    if (family == "custom") throw InvalidParameter("--family custom needs --phi and --psi");
    if (!u0.empty()) throw InvalidParameter("--u0 only applies to custom pairs");
    return family_by_name(family, params);
  }

  static Rational parse_param(const std::string& name, const std::string& text) {
    try {
      return parse_rational(text);
    } catch (const std::invalid_argument& e) {
      throw InvalidParameter("--" + name + ": " + e.what());
    }
  }
};

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (auto a : allowed)
    if (format == a) return;
  throw InvalidParameter("unsupported --format '" + format + "'");
}

std::size_t clamp_order(std::size_t requested, std::ostream& err) {
  const std::size_t cap = series_order_cap();
  if (requested <= cap) return requested;
  err << "note: series order " << requested << " capped at COPOLY_MAX_ORDER=" << cap << '\n';
  return cap;
}

int cmd_families(std::ostream& out) {
  for (const auto& spec : {FamilySpec::hermite(), FamilySpec::laguerre(Rational(0)),
                           FamilySpec::jacobi(Rational(0), Rational(0)), FamilySpec::legendre(),
                           FamilySpec::bessel(Rational(0))}) {
    out << spec.name << ": phi = " << to_text(spec.phi) << ", psi = " << to_text(spec.psi);
    if (!spec.params.empty()) {
      out << "  (shown at";
      for (const auto& [k, v] : spec.params) out << ' ' << k << '=' << to_string(v);
      out << ')';
    }
    out << '\n';
  }
  out << "laguerre: psi = (alpha+1) - x; jacobi: psi = (beta-alpha) - (alpha+beta+2)*x; "
         "bessel: psi = 2 + (alpha+2)*x; legendre = jacobi with alpha = beta = 0\n"
         "custom: --phi EXPR --psi EXPR [--u0 RAT], or --family-file PATH\n";
  return kPass;
}

int cmd_compute(const FamilyOptions& fam, int n, std::optional<int> nu, const std::string& format,
                std::ostream& out) {
  check_format(format, {"json", "latex", "text"});
  if (n < 0) throw InvalidParameter("--n must be nonnegative");
  std::optional<std::size_t> row;
  if (nu) {
    if (*nu < 0 || *nu > n) throw InvalidParameter("--nu must satisfy 0 <= nu <= n");
    row = static_cast<std::size_t>(*nu);
  }
  const auto result = compute(fam.resolve(), static_cast<std::size_t>(n), row);
  if (format == "json") out << to_json(result).dump(2) << '\n';
  else if (format == "latex") out << to_latex(result);
  else out << to_text(result);
  return kPass;
}

int cmd_verify(const FamilyOptions& fam, int max_n, int order, const std::string& suite,
               const std::string& format, std::ostream& out, std::ostream& err) {
  check_format(format, {"json", "text"});
  if (max_n < 0 || order < 0) throw InvalidParameter("--max-n and --order must be nonnegative");
  VerifyOptions options;
  options.max_n = static_cast<std::size_t>(max_n);
  options.order = clamp_order(static_cast<std::size_t>(order), err);
  options.suites = parse_suites(suite);
  const auto report = run_verification(fam.resolve(), options);
  if (format == "json") out << to_json(report).dump(2) << '\n';
  else out << to_text(report);
  return report.passed ? kPass : kCounterexample;
}

int cmd_genfun(const FamilyOptions& fam, int n, int order, const std::string& format, std::ostream& out,
               std::ostream& err) {
  check_format(format, {"json", "latex", "text"});
  if (n < 0 || order < 0) throw InvalidParameter("--n and --order must be nonnegative");
  const std::size_t N = clamp_order(static_cast<std::size_t>(order), err);
  const FamilySpec spec = fam.resolve();
  if (spec.kind == FamilyKind::custom)
    throw UnsupportedFamily("genfun needs a catalog family: a custom pair has no weight function, "
                            "so only the truncated series exists (use verify for its checks)");
  const auto pair = pair_from_family(spec, 2 * static_cast<std::size_t>(n) + 2);
  const auto nn = static_cast<std::int64_t>(n);
  const RSeries truncated = genfun_truncated(pair, nn, N);
  const RSeries closed = genfun_closed_form(pair, nn, N);
  const RSeries diff = truncated - closed;

  if (format == "json") {
    nlohmann::json j{{"family", spec.name}, {"params", to_json(spec.params)}, {"n", n}, {"order", N},
                     {"truncated", to_json(truncated)}, {"closed_form", to_json(closed)},
                     {"difference", to_json(diff)}, {"equal", diff.is_zero()}};
    out << j.dump(2) << '\n';
  } else if (format == "latex") {
    out << "\\begin{tabular}{lll}\n\\hline\n"
        << "$k$ & $[y^k]$ truncated sum & $[y^k]$ closed form \\\\\n\\hline\n";
    for (std::size_t k = 0; k <= N; ++k)
      out << k << " & $" << to_latex(truncated[k]) << "$ & $" << to_latex(closed[k]) << "$ \\\\\n";
    out << "\\hline\n\\end{tabular}\n";
  } else {
    out << "family " << spec.name << ", n = " << n << ", order " << N << '\n';
    for (std::size_t k = 0; k <= N; ++k)
      out << "y^" << k << ": " << to_text(truncated[k]) << "  |  " << to_text(closed[k]) << '\n';
    out << "difference: " << to_text(diff) << '\n';
  }
  return diff.is_zero() ? kPass : kCounterexample;
}

}  // namespace

ComputeResult compute(const FamilySpec& family, std::size_t n, std::optional<std::size_t> nu) {
  if (nu && *nu > n) throw IndexError("nu must not exceed n");
  const auto pair = pair_from_family(family, 2 * n + 2);
  ComputeResult r;
  r.family = family;
  r.n = n;
  r.nu = nu;
  r.lambda = lambda_n(pair, n);
  const auto table = complementary_table(pair, n);
  if (nu) {
    r.rows = {table.rows[*nu]};
    r.mu = {mu_eigenvalue(pair, n, *nu)};
  } else {
    r.rows = table.rows;
    for (std::size_t v = 0; v <= n; ++v) r.mu.push_back(mu_eigenvalue(pair, n, v));
  }
  return r;
}

nlohmann::json to_json(const ComputeResult& r) {
  nlohmann::json j;
  j["family"] = r.family.name;
  j["params"] = to_json(r.family.params);
  j["n"] = r.n;
  if (r.nu) j["nu"] = *r.nu;
  j["rows"] = nlohmann::json::array();
  for (const auto& p : r.rows) j["rows"].push_back(to_json(p));
  j["lambda"] = to_string(r.lambda);
  nlohmann::json mu = nlohmann::json::array();
  for (const auto& m : r.mu) mu.push_back(to_string(m));
  j["mu"] = nlohmann::json::array({mu});
  return j;
}

std::string to_text(const ComputeResult& r) {
  std::ostringstream os;
  os << "family " << r.family.name;
  for (const auto& [k, v] : r.family.params) os << ' ' << k << '=' << to_string(v);
  os << ", n = " << r.n << '\n';
  auto join = [](const auto& items, auto&& fmt) {
    std::string s;
    for (const auto& item : items) s += (s.empty() ? "" : "; ") + fmt(item);
    return s;
  };
  auto poly_text = [](const RPoly& p) { return to_text(p); };
  auto rat_text = [](const Rational& q) { return to_string(q); };
  if (r.nu) os << "P_" << *r.nu << "(x;" << r.n << ") = " << to_text(r.rows.front()) << '\n';
  else os << "P_nu(x;" << r.n << "), nu = 0.." << r.n << ": " << join(r.rows, poly_text) << '\n';
  os << "lambda_" << r.n << " = " << to_string(r.lambda) << '\n';
  os << "mu_{" << r.n << ",nu} = " << join(r.mu, rat_text) << '\n';
  return os.str();
}

std::string to_latex(const ComputeResult& r) {
  std::ostringstream os;
  os << "\\begin{tabular}{lll}\n\\hline\n"
     << "$\\nu$ & $\\mathcal{P}_\\nu(x;" << r.n << ")$ & $\\mu_{" << r.n << ",\\nu}$ \\\\\n\\hline\n";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const std::size_t v = r.nu ? *r.nu : i;
    os << v << " & $" << to_latex(r.rows[i]) << "$ & $" << to_latex(r.mu[i]) << "$ \\\\\n";
  }
  os << "\\hline\n\\end{tabular}\n"
     << "$\\lambda_{" << r.n << "} = " << to_latex(r.lambda) << "$\n";
  return os.str();
}

std::size_t series_order_cap() {
  const char* env = std::getenv("COPOLY_MAX_ORDER");
  if (env == nullptr || *env == '\0') return kDefaultOrderCap;
  std::string s(env);
  if (!std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 6)
    throw InvalidParameter("COPOLY_MAX_ORDER must be a positive integer");
  const auto cap = static_cast<std::size_t>(std::stoul(s));
  if (cap == 0) throw InvalidParameter("COPOLY_MAX_ORDER must be a positive integer");
  return cap;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complementary polynomials of classical orthogonal families, in exact arithmetic"};
  app.require_subcommand(1);
  app.footer(std::string("Formats: ") + kFormatHelp +
             ".\nExit codes: 0 pass, 1 verification counterexample, 2 invalid input.\n"
             "COPOLY_MAX_ORDER caps the series order (default 16).");

  auto* families = app.add_subcommand("families", "list the catalog families");

  FamilyOptions compute_fam, verify_fam, genfun_fam;
  int compute_n = 0, verify_max_n = 8, verify_order = 12, genfun_n = 0, genfun_order = 8;
  std::optional<int> compute_nu;
  std::string compute_format = "text", verify_format = "text", genfun_format = "text";
  std::string verify_suite = "all";

  auto* compute_cmd = app.add_subcommand("compute", "complementary polynomials P_nu(x;n) and eigenvalues");
  compute_fam.attach(*compute_cmd);
  compute_cmd->add_option("--n", compute_n, "degree n")->required();
  compute_cmd->add_option("--nu", compute_nu, "single row nu (default: whole table)");
  compute_cmd->add_option("--format", compute_format, std::string("json|latex|text; ") + kFormatHelp);

  auto* verify_cmd = app.add_subcommand("verify", "check every identity over the (n, nu) grid");
  verify_fam.attach(*verify_cmd);
  verify_cmd->add_option("--max-n", verify_max_n, "largest n on the grid (default 8)");
  verify_cmd->add_option("--order", verify_order, "series order for generating-function checks (default 12)");
  verify_cmd->add_option("--suite", verify_suite, "all|recursion|ode|functional|genfun|oracle");
  verify_cmd->add_option("--format", verify_format, "json|text");

  auto* genfun_cmd = app.add_subcommand("genfun", "generating function, truncated sum vs closed form");
  genfun_fam.attach(*genfun_cmd);
  genfun_cmd->add_option("--n", genfun_n, "degree n")->required();
  genfun_cmd->add_option("--order", genfun_order, "series order N (default 8)");
  genfun_cmd->add_option("--format", genfun_format, std::string("json|latex|text; ") + kFormatHelp);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInvalidInput;
  }

  try {
    if (families->parsed()) return cmd_families(out);
    if (compute_cmd->parsed()) return cmd_compute(compute_fam, compute_n, compute_nu, compute_format, out);
    if (verify_cmd->parsed())
      return cmd_verify(verify_fam, verify_max_n, verify_order, verify_suite, verify_format, out, err);
    if (genfun_cmd->parsed()) return cmd_genfun(genfun_fam, genfun_n, genfun_order, genfun_format, out, err);
  } catch (const AdmissibilityViolation& e) {
    err << "error: AdmissibilityViolation: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const UnsupportedFamily& e) {
    err << "error: UnsupportedFamily: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace copoly::cli
