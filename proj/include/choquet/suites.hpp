#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "choquet/json_io.hpp"

// Seeded verification suites. Each suite checks one theorem-shaped property
// over a randomized corpus and reports trial counts, the worst observed
// violation, and the tolerance it was held to. Deterministic per seed.
namespace choquet::suites {

struct SuiteConfig {
  std::uint64_t seed = 7;
  int trials = 0;  // 0 picks the suite default
  int cap = 10000;
  // When set, trials run over this space instead of the random corpus;
  // suites whose hypothesis the space fails are skipped with a notice.
  std::shared_ptr<const Space> space;
};

struct SuiteResult {
  std::string name;
  std::string property;  // the law being checked, one line
  bool passed = false;
  bool skipped = false;
  std::string skip_reason;
  int trials = 0;
  int failures = 0;
  double max_violation = 0.0;
  double tolerance = 0.0;
  std::vector<std::string> notes;
  io::json witnesses = io::json::array();

  bool ok() const { return passed || skipped; }
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Unknown names raise Errc::unknown_suite.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

io::json to_json(const SuiteResult& s);

}  // namespace choquet::suites
