#pragma once

#include <cstdint>
#include <string>

#include "choquet/suites.hpp"

namespace choquet::scenario {

struct RunOptions {
  std::uint64_t seed = 7;
  int trials = 0;  // 0 keeps each suite's default
  int cap = 10000;
};

struct Report {
  io::json document;
  std::string text;
  int exit_code = 0;  // 0 clean, 1 failed verification
};

// Executes a schema-1 scenario: named inputs plus a command list, run in
// order. Input problems (malformed JSON, unknown ops, unresolved names,
// hypothesis violations from the core) throw Error; the CLI maps those to
// exit 2. Failed checks only set exit_code 1.
Report run_document(const io::json& doc, const RunOptions& opts);
Report run_file(const std::string& path, const RunOptions& opts);

}  // namespace choquet::scenario
