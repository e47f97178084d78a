#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "widthlab/error.hpp"
#include "widthlab/suites.hpp"

using namespace widthlab;

namespace {

SuiteReport run(const std::string& name, std::optional<int> n_max = std::nullopt, int workers = 1) {
  SuiteConfig c;
  c.name = name;
  c.n_max = n_max;
  c.workers = workers;
  return run_suite(c);
}

}  // namespace

TEST_CASE("suite names") {
  CHECK(suite_names().size() == 11);
  CHECK_THROWS_AS(run("no_such_suite"), ParameterError);
}

TEST_CASE("small suites pass") {
  for (const char* name : {"theorem1", "limit", "spectrum"}) {
    const SuiteReport r = run(name);
    CHECK_MESSAGE(r.passed(), name);
    CHECK_FALSE(r.records.empty());
  }
  const SuiteReport a = run("appendixA", 6);
  CHECK(a.passed());
}

TEST_CASE("verbatim petersen gap is flagged as known") {
  const SuiteReport r = run("petersen", 12);
  CHECK(r.passed());
  CHECK(r.known_flags() > 0);
}

TEST_CASE("reports are deterministic across worker counts") {
  const SuiteReport serial = run("appendixB", 9, 1);
  const SuiteReport parallel = run("appendixB", 9, 4);
  CHECK(report_to_json(serial, "x") == report_to_json(parallel, "x"));
  const auto j = report_to_json(serial, "2026-01-01T00:00:00Z");
  CHECK(j["header"]["suite"] == "appendixB");
  CHECK(j["header"]["generated_at"] == "2026-01-01T00:00:00Z");
  CHECK(j["records"].size() == serial.records.size());
  CHECK(j["records"][0].contains("lhs"));
  CHECK(j["records"][0].contains("rhs"));
  CHECK(j["records"][0].contains("equal"));
  CHECK(j["records"][0].contains("instance"));
}
