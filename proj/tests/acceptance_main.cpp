// Acceptance gate: one line per criterion, exit code = number of failures.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "bcx/suites.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Gate {
  int failures = 0;

  void line(int id, const char* label, bool pass, const std::string& extra = "") {
    std::printf("criterion %d  %-52s %s%s\n", id, label, pass ? "PASS" : "FAIL",
                extra.empty() ? "" : ("  " + extra).c_str());
    if (!pass) ++failures;
  }
};

struct RunOutcome {
  bcx::Report report;
  double seconds = 0.0;
  bool all_pass = false;
};

RunOutcome run(bcx::SuiteConfig cfg) {
  const auto t0 = Clock::now();
  RunOutcome out;
  out.report = bcx::run_verify(cfg);
  out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  out.all_pass = out.report.overall_pass;
  return out;
}

bcx::SuiteConfig base(std::vector<std::string> suites, int trials, int dim = 6, int degree = 32,
                      double rel = 1e-8) {
  bcx::SuiteConfig cfg;
  cfg.seed = 42;
  cfg.trials = trials;
  cfg.dim = dim;
  cfg.degree = degree;
  cfg.tol = {rel, 0.0};
  cfg.suites = std::move(suites);
  return cfg;
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "(%.2f s)", s);
  return buf;
}

}  // namespace

int main() {
  Gate gate;

  // 1: scalar algebra on 1e5 samples at rel 1e-11; strict submultiplicativity
  // and the sqrt(2) attainment are enforced inside the suite.
  const RunOutcome c1 = run(base({"algebra"}, 100000, 6, 32, 1e-11));
  gate.line(1, "algebra: 1e5 scalars, rel 1e-11, strict submult", c1.all_pass, secs(c1.seconds));

  // 2: parallelogram identity in both norms, 1e4 pairs, dims 1-8, rel 1e-9
  const RunOutcome c2 = run(base({"parallelogram"}, 10000, 8, 32, 1e-9));
  gate.line(2, "parallelogram: 1e4 pairs, dims 1-8, rel 1e-9", c2.all_pass, secs(c2.seconds));

  // 3: normality predicate vs componentwise oracle vs cartesian check on 1e3
  // matrices, half constructed normal, half generic
  const RunOutcome c3 = run(base({"normality"}, 1000, 8));
  gate.line(3, "normality: 1e3 matrices, all three routes agree", c3.all_pass, secs(c3.seconds));

  // 4: the four norm identities/inequalities at rel 1e-8, 1e3 matrices,
  // dims <= 8, combined under 10 s
  const RunOutcome c4 =
      run(base({"adjoint_norms", "cstar", "normal_norms", "normal_power"}, 1000, 8));
  const bool c4_ok = c4.all_pass && c4.seconds < 10.0;
  gate.line(4, "operator norms: 4 identity suites, rel 1e-8, <10 s", c4_ok, secs(c4.seconds));

  // 5: duality isometries, 1e3 submodule/functional pairs, dims <= 8, rel 1e-8
  const RunOutcome c5 = run(base({"duality"}, 1000, 8));
  gate.line(5, "duality: 1e3 pairs incl. unequal ranks, rel 1e-8", c5.all_pass, secs(c5.seconds));

  // 6: subordination for 500 origin-fixing self-maps, 20 functions each,
  // degree 32, violations bounded by 1e-12 * scale
  const RunOutcome c6 = run(base({"subordination"}, 500));
  gate.line(6, "subordination: 500 self-maps, exact composition", c6.all_pass, secs(c6.seconds));

  // 7: compressed composition norm vs littlewood bound at N=32 and N=64,
  // monotone in N, a=0 reproduces bound 1 exactly
  const RunOutcome c7 = run(base({"littlewood"}, 200));
  gate.line(7, "littlewood: 200 maps, N=32/64, slack >= -1e-6", c7.all_pass, secs(c7.seconds));

  // 8: Mobius identities at N=64 within the geometric truncation bound
  const RunOutcome c8 = run(base({"mobius"}, 200, 6, 64));
  gate.line(8, "mobius: T_a identities within |a|^N tails, N=64", c8.all_pass, secs(c8.seconds));

  // 9: byte-identical reports for identical configs, full default run < 60 s
  bcx::SuiteConfig def;
  def.seed = 42;
  const auto t0 = Clock::now();
  const std::string rep_a = bcx::report_to_json(bcx::run_verify(def));
  const double full_secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const std::string rep_b = bcx::report_to_json(bcx::run_verify(def));
  const bool c9_ok = (rep_a == rep_b) && full_secs < 60.0 &&
                     rep_a.find("\"overall_pass\":true") != std::string::npos;
  gate.line(9, "determinism: byte-identical reports, default <60 s", c9_ok, secs(full_secs));

  if (gate.failures == 0) {
    std::printf("acceptance: all 9 criteria PASS\n");
  } else {
    std::printf("acceptance: %d criterion(s) FAILED\n", gate.failures);
  }
  return gate.failures;
}
