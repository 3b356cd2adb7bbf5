#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bcx/json_io.hpp"
#include "bcx/suites.hpp"

namespace {

// 0 = success, 1 = verification violation, 2 = usage/parse error.
constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

bool parse_u64(const std::string& text, std::uint64_t& out) {
  try {
    std::size_t pos = 0;
    out = std::stoull(text, &pos);
    return pos == text.size();
  } catch (...) {
    return false;
  }
}

int cmd_verify(bcx::SuiteConfig cfg, const std::string& format) {
  const bcx::Report rep = bcx::run_verify(cfg);
  if (format == "text")
    std::cout << bcx::report_to_text(rep);
  else
    std::cout << bcx::report_to_json(rep) << "\n";
  return rep.overall_pass ? kOk : kViolation;
}

int cmd_norm(const std::string& kind, const std::string& file, const std::string& weight_file) {
  const bcx::Json in = bcx::parse_file(file);
  bcx::OperatorNormReport report;
  if (kind == "matrix") {
    report = bcx::op_dnorm(bcx::matrix_from_json(in));
  } else if (kind == "vector") {
    const bcx::BCVector x = bcx::vector_from_json(in);
    report.dnorm = bcx::dnorm_vec(x);
    report.euclid = bcx::euclid_vec(x);
  } else {  // series
    const bcx::PowerSeries f = bcx::series_from_json(in);
    report.dnorm = weight_file.empty()
                       ? bcx::hardy_norm(f)
                       : bcx::hardy_norm(f, bcx::weights_from_json(bcx::parse_file(weight_file)));
    report.euclid = report.dnorm.magnitude();
  }
  std::cout << bcx::norm_report_to_json(report).dump() << "\n";
  return kOk;
}

int cmd_compose(const std::string& f_file, const std::string& phi_file, int degree) {
  const bcx::PowerSeries f = bcx::series_from_json(bcx::parse_file(f_file));
  const bcx::PowerSeries phi = bcx::series_from_json(bcx::parse_file(phi_file));
  std::cout << bcx::series_to_json(bcx::compose(f, phi, degree)).dump() << "\n";
  return kOk;
}

int cmd_bound(const std::string& phi_file, int degree) {
  const bcx::SelfMap phi{bcx::series_from_json(bcx::parse_file(phi_file))};
  const bcx::Hyperbolic bound = bcx::littlewood_bound(phi);
  const bcx::Hyperbolic dn = bcx::op_dnorm(bcx::composition_matrix(phi, degree)).dnorm;
  const bcx::Hyperbolic slack = bound - dn;
  const bool violation = slack.x1 < -1e-6 || slack.x2 < -1e-6;
  const bcx::Json out{{"degree", degree},
                      {"littlewood_bound", bcx::hyp_to_json(bound)},
                      {"op_dnorm", bcx::hyp_to_json(dn)},
                      {"slack", bcx::hyp_to_json(slack)},
                      {"violation", violation}};
  std::cout << out.dump() << "\n";
  return violation ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bicomplex algebra, module duality and Hardy-space composition toolkit"};
  app.require_subcommand(1);

  bcx::SuiteConfig cfg;
  std::string format = "json";
  if (const char* env = std::getenv("BCX_FORMAT")) format = env;

  auto* verify = app.add_subcommand("verify", "run randomized property suites");
  auto* seed_opt = verify->add_option("--seed", cfg.seed, "master seed");
  verify->add_option("--trials", cfg.trials, "trials per suite");
  verify->add_option("--dim", cfg.dim, "max matrix/module dimension");
  verify->add_option("--degree", cfg.degree, "series truncation degree");
  verify->add_option("--tol", cfg.tol.rel, "relative tolerance");
  verify->add_option("--suite", cfg.suites, "suite name (repeatable; default all)");
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string kind, in_file, weight_file;
  auto* norm = app.add_subcommand("norm", "norms of a matrix, vector or series");
  norm->add_option("--kind", kind, "input kind")
      ->required()
      ->check(CLI::IsMember({"matrix", "vector", "series"}));
  norm->add_option("file", in_file, "input JSON file")->required();
  norm->add_option("--weight", weight_file, "weight sequence JSON file (series only)");

  std::string f_file, phi_file;
  int degree = 0;
  auto* compose = app.add_subcommand("compose", "truncated series composition f . phi");
  compose->add_option("f", f_file, "outer series JSON file")->required();
  compose->add_option("phi", phi_file, "inner series JSON file")->required();
  compose->add_option("--degree", degree, "truncation degree")->required();

  std::string bound_file;
  int bound_degree = 0;
  auto* bound = app.add_subcommand("bound", "compressed composition norm vs subordination bound");
  bound->add_option("phi", bound_file, "self-map series JSON file")->required();
  bound->add_option("--degree", bound_degree, "truncation degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (seed_opt->count() == 0) {
    if (const char* env = std::getenv("BCX_SEED")) {
      if (!parse_u64(env, cfg.seed)) {
        std::cerr << "error: BCX_SEED is not an unsigned integer\n";
        return kUsage;
      }
    }
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg, format);
    if (norm->parsed()) return cmd_norm(kind, in_file, weight_file);
    if (compose->parsed()) return cmd_compose(f_file, phi_file, degree);
    return cmd_bound(bound_file, bound_degree);
  } catch (const bcx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
