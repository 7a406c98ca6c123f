#include "choquet/scenario.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "choquet/errors.hpp"
#include "choquet/generators.hpp"
#include "choquet/tolerances.hpp"

namespace choquet::scenario {

namespace {

using io::json;

[[noreturn]] void bad(const std::string& what) {
  throw Error(Errc::malformed_input, what);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

struct Context {
  std::shared_ptr<const Space> space;
  std::map<std::string, VectorMeasure> vector_measures;
  std::map<std::string, AtomicMeasure> atomic_measures;
  std::map<std::string, DFunction> dfunctions;
  RunOptions opts;
};

std::string field_string(const json& cmd, const char* key) {
  if (!cmd.contains(key) || !cmd[key].is_string())
    bad(std::string("command needs a string field \"") + key + "\"");
  return cmd[key].get<std::string>();
}

const VectorMeasure& vector_arg(const Context& ctx, const json& cmd,
                                const char* key = "measure") {
  std::string name = field_string(cmd, key);
  auto it = ctx.vector_measures.find(name);
  if (it == ctx.vector_measures.end()) bad("unknown vector measure \"" + name + "\"");
  return it->second;
}

const AtomicMeasure& atomic_arg(const Context& ctx, const json& cmd,
                                const char* key = "measure") {
  std::string name = field_string(cmd, key);
  auto it = ctx.atomic_measures.find(name);
  if (it == ctx.atomic_measures.end()) bad("unknown atomic measure \"" + name + "\"");
  return it->second;
}

ProbabilityAtoms probability_arg(const Context& ctx, const json& cmd,
                                 const char* key) {
  if (!cmd.contains(key)) bad(std::string("command needs a probability \"") + key + "\"");
  return io::probability_from_json(cmd[key], ctx.space);
}

Vec vec_arg(const json& cmd, const char* key, int dim) {
  if (!cmd.contains(key) || !cmd[key].is_array())
    bad(std::string("command needs a vector \"") + key + "\"");
  Vec v;
  for (const auto& c : cmd[key]) {
    if (!c.is_number()) bad(std::string("vector \"") + key + "\" must hold numbers");
    v.push_back(c.get<double>());
  }
  if (static_cast<int>(v.size()) != dim) bad(std::string("vector \"") + key +
                                             "\" has the wrong dimension");
  return v;
}

int int_field(const json& cmd, const char* key, int fallback) {
  if (!cmd.contains(key)) return fallback;
  if (!cmd[key].is_number_integer()) bad(std::string("field \"") + key +
                                         "\" must be an integer");
  return cmd[key].get<int>();
}

// Optional per-command assertion: "expect" maps result fields to required
// values, compared as exact JSON, so scenarios double as end-to-end checks.
// Meant for discrete fields (booleans, counts); a mismatch fails the command.
void apply_expect(const json& cmd, json& entry, std::string& line, bool& ok) {
  if (!cmd.contains("expect")) return;
  const json& exp = cmd["expect"];
  if (!exp.is_object()) bad("expect must be an object");
  std::string failed;
  for (const auto& [key, want] : exp.items()) {
    if (entry.contains(key) && entry[key] == want) continue;
    if (!failed.empty()) failed += ", ";
    failed += key;
  }
  if (!failed.empty()) {
    ok = false;
    entry["expect_failed"] = failed;
    line += " [expected " + exp.dump() + "]";
  }
}

// Executes one command; returns the result entry and a one-line summary.
// Sets ok=false only for failed checks, never for input errors (those throw).
json run_command(Context& ctx, const json& cmd, std::string& line, bool& ok) {
  if (!cmd.is_object() || !cmd.contains("op") || !cmd["op"].is_string())
    bad("each command needs an \"op\" string");
  std::string op = cmd["op"].get<std::string>();
  json out;
  out["op"] = op;
  ok = true;

  if (op == "hustad") {
    const AtomicMeasure& nu = atomic_arg(ctx, cmd);
    out["measure"] = io::to_json(hustad(nu));
    line = "induced vector measure of \"" + field_string(cmd, "measure") + "\"";
  } else if (op == "transfer") {
    const VectorMeasure& mu = vector_arg(ctx, cmd);
    AtomicMeasure K = transfer_K(mu);
    out["atoms"] = io::to_json(K)["atoms"];
    VectorMeasure back = hustad(K);
    double residual = 0.0;
    for (const auto& [label, v] : mu.entries()) {
      Vec w = back.at(label);
      for (std::size_t k = 0; k < v.size(); ++k)
        residual = std::max(residual, std::fabs(v[k] - w[k]));
    }
    residual = std::max(residual, std::fabs(mass(K) - total_variation(mu)));
    out["roundtrip_residual"] = residual;
    ok = residual < 1e-9;
    out["ok"] = ok;
    line = "transfer of \"" + field_string(cmd, "measure") + "\", roundtrip residual " +
           fmt(residual);
    return out;
  } else if (op == "tilde") {
    out["atoms"] = io::to_json(tilde(atomic_arg(ctx, cmd)))["atoms"];
    line = "sphere normalization of \"" + field_string(cmd, "measure") + "\"";
  } else if (op == "density") {
    DensityFunction d = density_h(atomic_arg(ctx, cmd));
    json h = json::object(), sigma = json::object();
    for (const auto& [label, v] : d.h) {
      json arr = json::array();
      for (double c : v) arr.push_back(c);
      h[label] = std::move(arr);
    }
    for (const auto& [label, s] : d.sigma) sigma[label] = s;
    out["h"] = std::move(h);
    out["sigma"] = std::move(sigma);
    line = "fiber density of \"" + field_string(cmd, "measure") + "\"";
  } else if (op == "variation") {
    double tv = total_variation(vector_arg(ctx, cmd));
    out["value"] = tv;
    line = "total variation " + fmt(tv);
  } else if (op == "mass") {
    double m = mass(atomic_arg(ctx, cmd));
    out["value"] = m;
    line = "mass " + fmt(m);
  } else if (op == "pair") {
    const VectorMeasure& mu = vector_arg(ctx, cmd);
    if (!cmd.contains("f") || !cmd["f"].is_object())
      bad("pair needs an \"f\" object of label -> vector");
    std::map<std::string, Vec> f;
    for (const auto& [label, arr] : cmd["f"].items()) {
      Vec v;
      for (const auto& c : arr) v.push_back(c.get<double>());
      f[label] = std::move(v);
    }
    double value = pair(mu, f);
    out["value"] = value;
    line = "pairing value " + fmt(value);
  } else if (op == "eval_pf") {
    const VectorMeasure& mu = vector_arg(ctx, cmd);
    std::string fname = field_string(cmd, "dfunction");
    auto it = ctx.dfunctions.find(fname);
    if (it == ctx.dfunctions.end()) bad("unknown dfunction \"" + fname + "\"");
    double value = eval_pf(it->second, mu);
    out["value"] = value;
    line = "support value " + fmt(value);
  } else if (op == "in_image_class") {
    bool value = is_in_N(atomic_arg(ctx, cmd), vector_arg(ctx, cmd, "of"));
    out["value"] = value;
    line = std::string("image-class membership: ") + (value ? "yes" : "no");
  } else if (op == "choquet_leq") {
    ProbabilityAtoms p = probability_arg(ctx, cmd, "p");
    ProbabilityAtoms q = probability_arg(ctx, cmd, "q");
    ChoquetVerdict v = choquet_leq(p, q, *ctx.space);
    out["holds"] = v.holds;
    out["barycenter_mismatch"] = v.barycenter_mismatch;
    if (v.witness) out["witness"] = io::to_json(*v.witness);
    if (v.falsifier) out["falsifier"] = io::to_json(*v.falsifier);
    line = std::string("dilation order: ") + (v.holds ? "holds" : "refused");
  } else if (op == "is_maximal") {
    bool value = is_maximal(probability_arg(ctx, cmd, "p"), *ctx.space);
    out["value"] = value;
    line = std::string("extreme-carried: ") + (value ? "yes" : "no");
  } else if (op == "envelope") {
    if (!cmd.contains("f")) bad("envelope needs a convex function \"f\"");
    ConvexPL f = io::convex_pl_from_json(cmd["f"]);
    Vec x = vec_arg(cmd, "xstar", ctx.space->dim());
    double value = upper_envelope_at(f, x, *ctx.space);
    out["value"] = value;
    line = "upper envelope " + fmt(value);
  } else if (op == "mokobodzki") {
    ProbabilityAtoms p = probability_arg(ctx, cmd, "p");
    int samples = int_field(cmd, "samples", 64);
    bool value = mokobodzki_maximal(p, *ctx.space, samples, ctx.opts.seed);
    out["value"] = value;
    line = std::string("envelope criterion: ") + (value ? "maximal" : "not maximal");
  } else if (op == "maximalize") {
    ProbabilityAtoms p = probability_arg(ctx, cmd, "p");
    out["atoms"] = io::to_json(maximalize(p, *ctx.space))["atoms"];
    line = "maximalized probability";
  } else if (op == "precD") {
    std::string diag;
    bool value = precD(atomic_arg(ctx, cmd, "nu1"), atomic_arg(ctx, cmd, "nu2"),
                       *ctx.space, &diag);
    out["value"] = value;
    if (!value) out["diagnostic"] = diag;
    line = std::string("fiberwise order: ") + (value ? "holds" : "refused");
  } else if (op == "is_minimal") {
    bool value = is_minimal(atomic_arg(ctx, cmd), vector_arg(ctx, cmd, "of"));
    out["value"] = value;
    line = std::string("minimal: ") + (value ? "yes" : "no");
  } else if (op == "minimalize") {
    AtomicMeasure m = minimalize(atomic_arg(ctx, cmd), vector_arg(ctx, cmd, "of"));
    out["atoms"] = io::to_json(m)["atoms"];
    line = "minimalized measure";
  } else if (op == "enumerate_minimal") {
    const VectorMeasure& mu = vector_arg(ctx, cmd);
    int cap = int_field(cmd, "cap", ctx.opts.cap);
    MinimalEnumeration e = enumerate_minimal(mu, cap);
    out["count"] = e.measures.size();
    out["truncated"] = e.truncated;
    json list = json::array();
    for (std::size_t i = 0; i < e.measures.size() && i < 16; ++i)
      list.push_back(io::to_json(e.measures[i]));
    out["measures"] = std::move(list);
    line = std::to_string(e.measures.size()) + " minimal measure(s)" +
           (e.truncated ? " (truncated)" : "");
  } else if (op == "sublinear_order") {
    ProbabilityAtoms p = probability_arg(ctx, cmd, "p");
    ProbabilityAtoms q = probability_arg(ctx, cmd, "q");
    int samples = int_field(cmd, "samples", 400);
    bool value = sublinear_order_test(p, q, *ctx.space, samples, ctx.opts.seed);
    out["value"] = value;
    line = std::string("sublinear comparison: ") + (value ? "passes" : "refuted");
  } else if (op == "precB") {
    bool value = precB(vector_arg(ctx, cmd, "mu1"), vector_arg(ctx, cmd, "mu2"));
    out["value"] = value;
    line = std::string("pairing order (equality): ") + (value ? "yes" : "no");
  } else if (op == "minimal_face") {
    Vec x = vec_arg(cmd, "xstar", ctx.space->dim());
    out["face"] = io::to_json(minimal_face(ctx.space, x));
    line = "minimal face";
  } else if (op == "extreme_points") {
    out["extreme_points"] = io::to_json(dual_ball_extreme_points(*ctx.space));
    line = "extreme points of the dual ball";
  } else if (op == "norms") {
    Vec x = vec_arg(cmd, "x", ctx.space->dim());
    out["primal"] = primal_norm(*ctx.space, x);
    out["dual"] = dual_norm(*ctx.space, x);
    line = "primal norm " + fmt(out["primal"].get<double>()) + ", dual norm " +
           fmt(out["dual"].get<double>());
  } else if (op == "is_simplexoid") {
    bool value = is_simplexoid_dual(*ctx.space);
    out["value"] = value;
    line = std::string("simplexoid dual ball: ") + (value ? "yes" : "no");
  } else if (op == "is_strictly_convex") {
    bool value = is_strictly_convex_dual(*ctx.space);
    out["value"] = value;
    line = std::string("strictly convex dual ball: ") + (value ? "yes" : "no");
  } else if (op == "disintegrate") {
    DisintegrationKernel k = disintegrate(atomic_arg(ctx, cmd));
    json sigma = json::object(), kernels = json::object();
    for (const std::string& label : k.labels()) {
      sigma[label] = k.sigma(label);
      kernels[label] = io::to_json(k.kernel(label));
    }
    out["sigma"] = std::move(sigma);
    out["kernels"] = std::move(kernels);
    line = "disintegration of \"" + field_string(cmd, "measure") + "\"";
  } else if (op == "verify") {
    std::string suite = field_string(cmd, "suite");
    if (!suites::is_suite(suite)) throw Error(Errc::unknown_suite, suite);
    suites::SuiteConfig config;
    config.seed = cmd.contains("seed")
                      ? static_cast<std::uint64_t>(cmd["seed"].get<std::uint64_t>())
                      : ctx.opts.seed;
    config.trials = int_field(cmd, "trials", ctx.opts.trials);
    config.cap = int_field(cmd, "cap", ctx.opts.cap);
    config.space = ctx.space;
    suites::SuiteResult s = suites::run_suite(suite, config);
    out["report"] = suites::to_json(s);
    ok = s.ok();
    out["ok"] = ok;
    if (s.skipped) {
      line = "verify " + suite + ": skipped (" + s.skip_reason + ")";
    } else {
      line = "verify " + suite + ": " + (s.passed ? "passed" : "FAILED") + ", trials " +
             std::to_string(s.trials) + ", failures " + std::to_string(s.failures) +
             ", max violation " + fmt(s.max_violation) + " (tolerance " +
             fmt(s.tolerance) + ")";
      for (const std::string& n : s.notes) line += "\n    " + n;
    }
    return out;
  } else {
    bad("unknown op \"" + op + "\"");
  }

  out["ok"] = ok;
  return out;
}

}  // namespace

Report run_document(const json& doc, const RunOptions& opts) {
  if (!doc.is_object()) bad("scenario must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "schema" && key != "space" && key != "vector_measures" &&
        key != "atomic_measures" && key != "dfunctions" && key != "commands")
      bad("unknown scenario field \"" + key + "\"");
  }
  if (!doc.contains("schema") || !doc["schema"].is_number_integer() ||
      doc["schema"].get<int>() != 1)
    bad("scenario needs \"schema\": 1");
  if (!doc.contains("space")) bad("scenario needs a \"space\"");

  Context ctx;
  ctx.opts = opts;
  ctx.space = io::space_from_json(doc["space"]);
  if (doc.contains("vector_measures")) {
    if (!doc["vector_measures"].is_object()) bad("vector_measures must be an object");
    for (const auto& [name, j] : doc["vector_measures"].items())
      ctx.vector_measures.emplace(name, io::vector_measure_from_json(j, ctx.space));
  }
  if (doc.contains("atomic_measures")) {
    if (!doc["atomic_measures"].is_object()) bad("atomic_measures must be an object");
    for (const auto& [name, j] : doc["atomic_measures"].items())
      ctx.atomic_measures.emplace(name, io::atomic_from_json(j, ctx.space));
  }
  if (doc.contains("dfunctions")) {
    if (!doc["dfunctions"].is_object()) bad("dfunctions must be an object");
    for (const auto& [name, j] : doc["dfunctions"].items())
      ctx.dfunctions.emplace(name, io::dfunction_from_json(j, ctx.space));
  }

  Report report;
  json results = json::array();
  std::ostringstream text;
  int failures = 0;
  text << "scenario over a " << ctx.space->dim() << "-dimensional "
       << (ctx.space->is_euclidean() ? "euclidean" : "polytope")
       << " space, seed " << opts.seed << "\n";

  if (doc.contains("commands")) {
    if (!doc["commands"].is_array()) bad("commands must be an array");
    int index = 0;
    for (const auto& cmd : doc["commands"]) {
      std::string line;
      bool ok = true;
      json entry = run_command(ctx, cmd, line, ok);
      apply_expect(cmd, entry, line, ok);
      if (!ok) ++failures;
      text << (ok ? "[ ok ] " : "[FAIL] ") << line << "\n";
      results.push_back(std::move(entry));
      ++index;
    }
    (void)index;
  }

  text << (failures == 0 ? "clean: " : "FAILURES: ") << failures
       << " failed of " << results.size() << " command(s)\n";

  report.document =
      json{{"schema", 1},
           {"seed", opts.seed},
           {"space", io::to_json(*ctx.space)},
           {"results", std::move(results)},
           {"failures", failures}};
  report.text = text.str();
  report.exit_code = failures == 0 ? 0 : 1;
  return report;
}

Report run_file(const std::string& path, const RunOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read scenario file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return run_document(io::parse(buf.str()), opts);
}

}  // namespace choquet::scenario
