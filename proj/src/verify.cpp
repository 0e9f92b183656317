#include "copoly/verify.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <sstream>

#include "copoly/errors.hpp"
#include "copoly/format.hpp"
#include "copoly/genfun.hpp"
#include "copoly/oracle.hpp"

namespace copoly {

namespace {

class Checker {
 public:
  explicit Checker(SuiteResult& result) : r_(result) {}

  void check(bool ok, const std::function<std::string()>& where) {
    ++r_.checks;
    if (!ok) fail(where());
  }
  void fail(const std::string& where) {
    r_.passed = false;
    if (!r_.counterexample) r_.counterexample = where;
  }

 private:
  SuiteResult& r_;
};

std::string at(std::size_t n, std::size_t nu) {
  return "n=" + std::to_string(n) + " nu=" + std::to_string(nu);
}

/// Runs body, turning identity-level exceptions into a counterexample.
/// Admissibility problems are input errors and propagate.
SuiteResult run_suite(Suite suite, const std::function<void(Checker&)>& body) {
  SuiteResult result;
  result.suite = suite;
  Checker checker(result);
  try {
    body(checker);
  } catch (const AdmissibilityViolation&) {
    throw;
  } catch (const InvalidParameter&) {
    throw;
  } catch (const Error& e) {
    checker.fail(std::string("exception: ") + e.what());
  }
  return result;
}

SuiteResult recursion_suite(const ClassicalPair& pair, const VerifyOptions& opt) {
  SuiteResult result = run_suite(Suite::recursion, [&](Checker& c) {
    const RPoly one = RPoly::constant(1);
    for (std::size_t n = 0; n <= opt.max_n; ++n) {
      const auto table = complementary_table(pair, n);
      const auto nn = static_cast<std::int64_t>(n);
      for (std::size_t nu = 0; nu <= n; ++nu) {
        const auto nv = static_cast<std::int64_t>(nu);
        const RPoly& row = table.rows[nu];
        c.check(row == rodrigues_rk(pair, nu, nn - nv, one),
                [&] { return at(n, nu) + ": recursion differs from R_{nu,n-nu}[1]"; });
        c.check(row.degree() == nu, [&] { return at(n, nu) + ": degree is not nu"; });
        for (std::size_t mu = 0; mu <= nu; ++mu) {
          const auto mv = static_cast<std::int64_t>(mu);
          RPoly composed = rodrigues_rk(pair, nu - mu, nn - nv, rodrigues_rk(pair, mu, nn - mv, one));
          c.check(composed == row, [&] {
            return at(n, nu) + " mu=" + std::to_string(mu) + ": composition law fails";
          });
        }
        c.check(derivative_proportionality(pair, n, nu) != 0,
                [&] { return at(n, nu) + ": zero proportionality constant"; });
      }
      if (n >= 1) {
        RPoly expected = derivative(pair.phi()) * Rational(static_cast<long>(n) - 1) + pair.psi();
        c.check(table.rows[1] == expected, [&] { return at(n, 1) + ": P_1 != (n-1)phi' + psi"; });
      }
    }
  });

  std::size_t disagreements = 0, probes = 0;
  Checker c(result);
  for (std::size_t k = 0; k <= opt.max_n; ++k)
    for (std::size_t m = 0; m <= opt.max_n; ++m) {
      const Rational probe = leading_coeff_probe(pair, k, m);
      Rational expected = pair.psi1() + Rational(static_cast<long>(m + 2 * k)) * pair.phi2() / 2;
      c.check(probe == expected, [&] {
        return "k=" + std::to_string(k) + " m=" + std::to_string(m) +
               ": leading coefficient differs from psi' + (m+2k)phi''/2";
      });
      ++probes;
      if (probe != lemma_leading_coeff(pair, k, m, 0)) ++disagreements;
    }
  if (disagreements > 0)
    result.notes.push_back("lemma probe: -lambda_{m+2k}/(m+2k) disagrees with the expanded leading "
                           "coefficient at " + std::to_string(disagreements) + " of " +
                           std::to_string(probes) + " points; -lambda_{m+2k+1}/(m+2k+1) matches");
  return result;
}

SuiteResult ode_suite(const ClassicalPair& pair, const VerifyOptions& opt) {
  return run_suite(Suite::ode, [&](Checker& c) {
    for (std::size_t n = 0; n <= opt.max_n; ++n) {
      for (std::size_t nu = 0; nu <= n; ++nu)
        c.check(ode_residual(pair, n, nu).is_zero(), [&] { return at(n, nu) + ": ODE residual nonzero"; });
      c.check(mu_eigenvalue(pair, n, n) == lambda_n(pair, n),
              [&] { return at(n, n) + ": mu_{n,n} != lambda_n"; });
      c.check(mu_eigenvalue(pair, n, 0) == 0, [&] { return at(n, 0) + ": mu_{n,0} != 0"; });
    }
  });
}

SuiteResult functional_suite(const ClassicalPair& pair, const VerifyOptions& opt) {
  return run_suite(Suite::functional, [&](Checker& c) {
    const std::size_t depth = 2 * opt.max_n + 4;
    c.check(all_zero(pearson_residual(pair.phi(), pair.psi(), pair.u(), depth)),
            [] { return std::string("Pearson residual nonzero"); });
    std::vector<RPoly> probes = {RPoly::constant(1), RPoly::x(), RPoly::monomial(1, 2),
                                 RPoly::monomial(1, 3), pair.phi(), pair.psi()};
    for (std::size_t i = 0; i < probes.size(); ++i)
      c.check(all_zero(leibniz_residual(probes[i], pair.u(), depth)),
              [&] { return "product rule fails for probe " + std::to_string(i); });
    for (std::size_t n = 0; n <= opt.max_n; ++n) {
      const std::size_t N = 2 * n + 4;
      for (std::size_t nu = 0; nu <= n; ++nu) {
        for (std::size_t mu = 0; mu <= nu; ++mu)
          c.check(all_zero(rodrigues_formula_residual(pair, n, nu, mu, N)), [&] {
            return at(n, nu) + " mu=" + std::to_string(mu) + ": Rodrigues formula residual nonzero";
          });
        c.check(all_zero(sturm_liouville_residual(pair, n, nu, N)),
                [&] { return at(n, nu) + ": Sturm-Liouville residual nonzero"; });
      }
    }
  });
}

SuiteResult genfun_suite(const ClassicalPair& pair, const VerifyOptions& opt) {
  const bool catalog = pair.kind() != FamilyKind::custom;
  SuiteResult result = run_suite(Suite::genfun, [&](Checker& c) {
    const std::size_t N = opt.order;
    for (std::size_t n = 0; n <= opt.max_n; ++n) {
      const auto nn = static_cast<std::int64_t>(n);
      const RSeries truncated = genfun_truncated(pair, nn, N);
      if (catalog) {
        const RSeries closed = genfun_closed_form(pair, nn, N);
        c.check(truncated == closed, [&] { return "n=" + std::to_string(n) + ": closed form differs"; });
        Rational fact(1);
        for (std::size_t mu = 0; mu <= std::min(n, N); ++mu) {
          if (mu > 0) fact *= Rational(static_cast<long>(mu));
          c.check(closed[mu] * fact == complementary(pair, n, mu), [&] {
            return at(n, mu) + ": mu-th y-derivative at y=0 differs from P_mu";
          });
        }
      }
      if (pair.kind() == FamilyKind::hermite && n > 0)
        c.check(truncated == genfun_truncated(pair, 0, N),
                [&] { return "n=" + std::to_string(n) + ": Hermite series depends on n"; });
      if (N >= 2) {
        for (auto eq : {PdeEquation::y_quadratic, PdeEquation::y_lowered, PdeEquation::x_quadratic, PdeEquation::x_lowered,
                        PdeEquation::y_shifted})
          c.check(pde_residual(pair, nn, eq, N).is_zero_through(N - 1), [&] {
            return "n=" + std::to_string(n) + ": PDE " + std::string(to_string(eq)) + " residual nonzero";
          });
      }
    }
  });
  if (!catalog) result.notes.push_back("closed form skipped: custom pairs carry no weight function");
  if (opt.order < 2) result.notes.push_back("PDE checks skipped: series order below 2");
  return result;
}

SuiteResult oracle_suite(const ClassicalPair& pair, const VerifyOptions& opt) {
  SuiteResult result;
  result = run_suite(Suite::oracle, [&](Checker& c) {
    const MomentFunctional& u = pair.u();
    std::vector<Rational> dets;
    for (std::size_t level = 0; level <= opt.max_n + 1; ++level) {
      dets.push_back(hankel_determinant(u, level));
      c.check(dets.back() != 0, [&] { return "Hankel determinant zero at level " + std::to_string(level); });
    }
    const MonicOPS ops = gram_schmidt_ops(u, opt.max_n + 1);
    c.check(ops.norms[0] == dets[0], [] { return std::string("r_0 != Delta_0"); });
    for (std::size_t n = 1; n < ops.norms.size(); ++n)
      c.check(ops.norms[n] * dets[n - 1] == dets[n],
              [&] { return "n=" + std::to_string(n) + ": r_n != Delta_n / Delta_{n-1}"; });
    for (std::size_t n = 0; n < ops.polys.size(); ++n)
      for (std::size_t k = 0; k < n; ++k)
        c.check(functional_apply(u, RPoly::monomial(1, k) * ops.polys[n]) == 0, [&] {
          return "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": <u, x^k P_n> != 0";
        });
    c.check(is_diagonal(orthogonality_matrix(u, ops.polys)),
            [] { return std::string("orthogonality matrix not diagonal"); });
    const auto coeffs = three_term_coefficients(ops, u);
    const auto residuals = three_term_residuals(ops, coeffs);
    for (std::size_t n = 0; n < residuals.size(); ++n)
      c.check(residuals[n].is_zero(),
              [&] { return "n=" + std::to_string(n) + ": three-term reconstruction fails"; });
    const auto cv = cross_validate(pair, opt.max_n);
    c.check(cv.expansion_matches,
            [] { return std::string("leading coefficients differ from the expansion product"); });
    if (!cv.stated_lemma_matches)
      result.notes.push_back("leading coefficient of P_m(x;m) is the product of psi' + (m+2k)phi''/2, "
                             "not of the printed -lambda_{m+2k}/(m+2k)");
  });
  return result;
}

}  // namespace

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::recursion: return "recursion";
    case Suite::ode: return "ode";
    case Suite::functional: return "functional";
    case Suite::genfun: return "genfun";
    case Suite::oracle: return "oracle";
  }
  return "oracle";
}

std::vector<Suite> parse_suites(std::string_view text) {
  if (text == "all") return VerifyOptions{}.suites;
  for (auto s : VerifyOptions{}.suites)
    if (text == to_string(s)) return {s};
  throw InvalidParameter("unknown suite '" + std::string(text) +
                         "' (expected all|recursion|ode|functional|genfun|oracle)");
}

std::size_t required_moment_order(const VerifyOptions& options) { return 4 * options.max_n + 8; }

VerifyReport run_verification(const FamilySpec& family, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const ClassicalPair pair = pair_from_family(family, required_moment_order(options));

  VerifyReport report;
  report.family = family.name;
  report.params = family.params;
  report.max_n = options.max_n;
  report.order = options.order;

  auto runner = [&](Suite s) {
    switch (s) {
      case Suite::recursion: return recursion_suite(pair, options);
      case Suite::ode: return ode_suite(pair, options);
      case Suite::functional: return functional_suite(pair, options);
      case Suite::genfun: return genfun_suite(pair, options);
      case Suite::oracle: return oracle_suite(pair, options);
    }
    return SuiteResult{};
  };

  if (options.parallel) {
    std::vector<std::future<SuiteResult>> pending;
    for (auto s : options.suites) pending.push_back(std::async(std::launch::async, runner, s));
    for (auto& f : pending) report.suites.push_back(f.get());
  } else {
    for (auto s : options.suites) report.suites.push_back(runner(s));
  }
  for (const auto& s : report.suites) report.passed = report.passed && s.passed;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json j;
  j["family"] = report.family;
  j["params"] = to_json(report.params);
  j["grid"] = {{"max_n", report.max_n}, {"order", report.order}};
  j["suites"] = nlohmann::json::array();
  for (const auto& s : report.suites) {
    nlohmann::json js{{"name", std::string(to_string(s.suite))},
                      {"status", s.passed ? "pass" : "fail"},
                      {"checks", s.checks}};
    js["counterexample"] = s.counterexample ? nlohmann::json(*s.counterexample) : nlohmann::json(nullptr);
    js["notes"] = s.notes;
    j["suites"].push_back(js);
  }
  j["status"] = report.passed ? "pass" : "fail";
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

std::string to_text(const VerifyReport& report) {
  std::ostringstream os;
  os << "family " << report.family;
  for (const auto& [k, v] : report.params) os << ' ' << k << '=' << to_string(v);
  os << ", max-n " << report.max_n << ", order " << report.order << '\n';
  for (const auto& s : report.suites) {
    os << "  " << to_string(s.suite) << ": " << (s.passed ? "PASS" : "FAIL") << " (" << s.checks
       << " checks)\n";
    if (s.counterexample) os << "    first counterexample: " << *s.counterexample << '\n';
    for (const auto& note : s.notes) os << "    note: " << note << '\n';
  }
  os << "overall: " << (report.passed ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace copoly
