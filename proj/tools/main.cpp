#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "choquet/errors.hpp"
#include "choquet/scenario.hpp"
#include "choquet/tolerances.hpp"

namespace {

struct CommonFlags {
  std::string json_path;
  std::uint64_t seed = 7;
  int trials = 0;
  double tol = 0.0;
  int cap = 10000;
};

void attach(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--json", flags.json_path, "write the JSON report to this path");
  cmd->add_option("--seed", flags.seed, "random seed (default 7)");
  cmd->add_option("--trials", flags.trials, "trial count override (0 = defaults)");
  cmd->add_option("--tol", flags.tol, "geometric tolerance override");
  cmd->add_option("--cap", flags.cap, "enumeration cap (default 10000)");
}

bool write_json(const std::string& path, const choquet::io::json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write \"" << path << "\"\n";
    return false;
  }
  out << doc.dump(2) << "\n";
  return true;
}

std::string suite_line(const choquet::suites::SuiteResult& s) {
  if (s.skipped) return s.name + ": skipped (" + s.skip_reason + ")";
  char stats[160];
  std::snprintf(stats, sizeof stats,
                ": %s, trials %d, failures %d, max violation %.6g (tolerance %.6g)",
                s.passed ? "passed" : "FAILED", s.trials, s.failures,
                s.max_violation, s.tolerance);
  return s.name + stats;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Choquet-representation toolkit"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  std::string scenario_path;
  CLI::App* run = app.add_subcommand("run", "execute a scenario file");
  run->add_option("scenario", scenario_path, "scenario JSON file")->required();
  attach(run, run_flags);

  CommonFlags verify_flags;
  std::string suite_name;
  CLI::App* verify = app.add_subcommand("verify", "run one verification suite");
  verify->add_option("suite", suite_name, "suite name")->required();
  attach(verify, verify_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      if (run_flags.tol > 0.0) choquet::tol::set_geo(run_flags.tol);
      choquet::scenario::RunOptions opts;
      opts.seed = run_flags.seed;
      opts.trials = run_flags.trials;
      opts.cap = run_flags.cap;
      choquet::scenario::Report report = choquet::scenario::run_file(scenario_path, opts);
      std::cout << report.text;
      if (!run_flags.json_path.empty() && !write_json(run_flags.json_path, report.document))
        return 2;
      return report.exit_code;
    }

    if (verify_flags.tol > 0.0) choquet::tol::set_geo(verify_flags.tol);
    if (!choquet::suites::is_suite(suite_name)) {
      std::cerr << "error: unknown suite \"" << suite_name << "\"; available:";
      for (const std::string& n : choquet::suites::suite_names()) std::cerr << " " << n;
      std::cerr << "\n";
      return 2;
    }
    choquet::suites::SuiteConfig config;
    config.seed = verify_flags.seed;
    config.trials = verify_flags.trials;
    config.cap = verify_flags.cap;
    choquet::suites::SuiteResult result = choquet::suites::run_suite(suite_name, config);
    std::cout << suite_line(result) << "\n";
    for (const std::string& n : result.notes) std::cout << "  " << n << "\n";
    if (!verify_flags.json_path.empty() &&
        !write_json(verify_flags.json_path, choquet::suites::to_json(result)))
      return 2;
    return result.ok() ? 0 : 1;
  } catch (const choquet::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
