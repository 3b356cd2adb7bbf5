#include "doctest.h"

#include <algorithm>

#include "bcx/errors.hpp"
#include "bcx/suites.hpp"

using namespace bcx;

namespace {

SuiteConfig small() {
  SuiteConfig cfg;
  cfg.seed = 7;
  cfg.trials = 25;
  cfg.dim = 4;
  cfg.degree = 16;
  return cfg;
}

}  // namespace

TEST_CASE("suite registry") {
  const std::vector<std::string> names = suite_names();
  CHECK(names.size() == 13);
  CHECK(std::is_sorted(names.begin(), names.end()));
  for (const char* expected : {"algebra", "duality", "littlewood", "normality", "subordination"}) {
    CHECK(std::find(names.begin(), names.end(), expected) != names.end());
  }
}

TEST_CASE("all suites pass on a small config") {
  const Report r = run_verify(small());
  CHECK(r.overall_pass);
  REQUIRE(r.results.size() == suite_names().size());
  for (std::size_t k = 0; k < r.results.size(); ++k) {
    CAPTURE(r.results[k].name);
    CHECK(r.results[k].pass);
    CHECK(r.results[k].name == suite_names()[k]);
    CHECK(r.results[k].trials >= 1);
  }
}

TEST_CASE("identical configs give byte-identical reports") {
  const std::string a = report_to_json(run_verify(small()));
  const std::string b = report_to_json(run_verify(small()));
  CHECK(a == b);

  SuiteConfig other = small();
  other.seed = 8;
  CHECK(report_to_json(run_verify(other)) != a);
}

TEST_CASE("suite selection") {
  SuiteConfig cfg = small();
  cfg.suites = {"littlewood", "algebra"};
  const Report r = run_verify(cfg);
  REQUIRE(r.results.size() == 2);
  // registry order, not request order
  CHECK(r.results[0].name == "algebra");
  CHECK(r.results[1].name == "littlewood");

  cfg.suites = {"no_such_suite"};
  CHECK_THROWS_AS((void)run_verify(cfg), UnknownSuiteError);
}

TEST_CASE("config validation") {
  SuiteConfig cfg = small();
  cfg.trials = 0;
  CHECK_THROWS_AS(validate_config(cfg), InvalidConfigError);
  cfg = small();
  cfg.dim = 17;
  CHECK_THROWS_AS(validate_config(cfg), InvalidConfigError);
  cfg = small();
  cfg.degree = 0;
  CHECK_THROWS_AS(validate_config(cfg), InvalidConfigError);
  cfg = small();
  cfg.tol.rel = 0.0;
  CHECK_THROWS_AS(validate_config(cfg), InvalidConfigError);
  cfg = small();
  cfg.tol.abs = -1.0;
  CHECK_THROWS_AS(validate_config(cfg), InvalidConfigError);
  CHECK_NOTHROW(validate_config(small()));
}

TEST_CASE("json report structure") {
  SuiteConfig cfg = small();
  cfg.suites = {"parallelogram"};
  const Report r = run_verify(cfg);
  const std::string text = report_to_json(r);
  CHECK(text.find("\"overall_pass\"") != std::string::npos);
  CHECK(text.find("\"parallelogram\"") != std::string::npos);
  CHECK(text.find("wall") == std::string::npos);  // timing must stay out of the stable format

  const std::string table = report_to_text(r);
  CHECK(table.find("parallelogram") != std::string::npos);
  CHECK(table.find("overall: PASS") != std::string::npos);
}
