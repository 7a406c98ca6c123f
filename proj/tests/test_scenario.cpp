#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include "choquet/errors.hpp"
#include "choquet/json_io.hpp"
#include "choquet/scenario.hpp"
#include "choquet/suites.hpp"
#include "doctest.h"

using namespace choquet;
using io::json;

namespace {

bool throws_errc(Errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

// Primal cross polytope; its dual ball is the square [-1,1]^2.
json cross_space() {
  return json::parse(R"({"dim":2,"ball":{"type":"polytope",
    "vertices":[[1,0],[-1,0],[0,1],[0,-1]]}})");
}

json base_doc() {
  json doc;
  doc["schema"] = 1;
  doc["space"] = cross_space();
  return doc;
}

scenario::Report run(const json& doc) {
  scenario::RunOptions opts;
  return scenario::run_document(doc, opts);
}

}  // namespace

TEST_CASE("wire forms survive a serialization roundtrip") {
  auto sp = Space::polytope({{1.0, 0.5}, {-1.0, -0.5}, {0.0, 1.0}, {0.0, -1.0}});
  auto eu = Space::euclidean(3);

  json jsp = io::to_json(*sp);
  CHECK(io::to_json(*io::space_from_json(jsp)).dump() == jsp.dump());
  json jeu = io::to_json(*eu);
  CHECK(io::to_json(*io::space_from_json(jeu)).dump() == jeu.dump());

  VectorMeasure mu(sp, {{"t1", {0.25, 0.0}}, {"t2", {-0.5, 0.125}}});
  json jmu = io::to_json(mu);
  CHECK(io::to_json(io::vector_measure_from_json(jmu, sp)).dump() == jmu.dump());

  AtomicMeasure nu(sp, {{"t1", {0.5, 0.5}, 0.5}, {"t2", {0.0, -1.0}, 0.25}});
  json jnu = io::to_json(nu);
  CHECK(io::to_json(io::atomic_from_json(jnu, sp)).dump() == jnu.dump());

  auto cross = Space::polytope({{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}});
  ProbabilityAtoms p(cross, {{{1.0, 1.0}, 0.5}, {{-1.0, -1.0}, 0.5}});
  json jp = io::to_json(p);
  CHECK(io::to_json(io::probability_from_json(jp, cross)).dump() == jp.dump());

  DFunction f(cross, {{"t1", {{-1.0, 0.0}, {1.0, 0.0}}}, {"t2", {{0.0, 0.5}}}});
  json jf = io::to_json(f);
  CHECK(io::to_json(io::dfunction_from_json(jf, cross)).dump() == jf.dump());

  ConvexPL g;
  g.pieces.push_back({{1.0, 0.0}, 0.5});
  g.pieces.push_back({{-1.0, 0.0}, 0.0});
  json jg = io::to_json(g);
  CHECK(io::to_json(io::convex_pl_from_json(jg)).dump() == jg.dump());
}

TEST_CASE("malformed wire forms are rejected") {
  auto sp = Space::euclidean(2);
  CHECK(throws_errc(Errc::malformed_input, [] { io::parse("{ not json"); }));
  CHECK(throws_errc(Errc::malformed_input,
                    [] { io::space_from_json(json::parse(R"({"dim":2})")); }));
  CHECK(throws_errc(Errc::malformed_input, [] {
    io::space_from_json(json::parse(R"({"dim":2,"ball":{"type":"disk"}})"));
  }));
  CHECK(throws_errc(Errc::malformed_input, [] {
    io::space_from_json(json::parse(
        R"({"dim":2,"ball":{"type":"polytope","vertices":[[1],[-1]]}})"));
  }));
  CHECK(throws_errc(Errc::malformed_input, [&] {
    io::vector_measure_from_json(json::parse(R"({"entries":[1,2]})"), sp);
  }));
  CHECK(throws_errc(Errc::malformed_input, [&] {
    io::atomic_from_json(json::parse(R"({"atoms":[{"t":"a","xstar":[1,0]}]})"), sp);
  }));
  CHECK(throws_errc(Errc::malformed_input, [&] {
    io::probability_from_json(json::parse(R"({"atoms":[{"xstar":"x","w":1}]})"), sp);
  }));
  CHECK(throws_errc(Errc::malformed_input,
                    [&] { io::dfunction_from_json(json::parse(R"({})"), sp); }));
  CHECK(throws_errc(Errc::malformed_input,
                    [] { io::convex_pl_from_json(json::parse(R"({"pieces":{}})")); }));
}

TEST_CASE("a clean scenario reports every command ok and exits zero") {
  json doc = base_doc();
  doc["vector_measures"] = json::parse(R"({"mu":{"entries":{"t1":[1.5,0]}}})");
  doc["atomic_measures"] = json::parse(
      R"({"nu":{"atoms":[{"t":"t1","xstar":[1,1],"w":0.75},
                         {"t":"t1","xstar":[1,-1],"w":0.75}]}})");
  doc["commands"] = json::parse(R"([
    {"op":"norms","x":[1,0]},
    {"op":"variation","measure":"mu"},
    {"op":"mass","measure":"nu"},
    {"op":"transfer","measure":"mu"},
    {"op":"hustad","measure":"nu"},
    {"op":"in_image_class","measure":"nu","of":"mu","expect":{"value":true}},
    {"op":"is_simplexoid","expect":{"value":true}},
    {"op":"is_strictly_convex","expect":{"value":false}}
  ])");

  scenario::Report r = run(doc);
  CHECK(r.exit_code == 0);
  CHECK(r.document["failures"] == 0);
  CHECK(r.document["results"].size() == 8);
  CHECK(r.text.find("[ ok ]") != std::string::npos);
  CHECK(r.text.find("[FAIL]") == std::string::npos);
  CHECK(r.text.find("clean: 0 failed of 8 command(s)") != std::string::npos);
  CHECK(r.document["results"][1]["value"].get<double>() == doctest::Approx(1.5));
  CHECK(r.document["results"][3]["roundtrip_residual"].get<double>() < 1e-9);
}

TEST_CASE("a failed expectation fails the command and exits one") {
  json doc = base_doc();
  doc["commands"] = json::parse(R"([
    {"op":"is_simplexoid","expect":{"value":false}},
    {"op":"norms","x":[0,1]}
  ])");

  scenario::Report r = run(doc);
  CHECK(r.exit_code == 1);
  CHECK(r.document["failures"] == 1);
  CHECK(r.text.find("[FAIL]") != std::string::npos);
  CHECK(r.text.find("[ ok ]") != std::string::npos);
  CHECK(r.document["results"][0]["expect_failed"] == "value");
  CHECK(r.text.find("FAILURES: 1") != std::string::npos);
}

TEST_CASE("input problems throw instead of failing commands") {
  CHECK(throws_errc(Errc::malformed_input, [] { run(json::parse(R"([1,2])")); }));

  json no_schema;
  no_schema["space"] = cross_space();
  CHECK(throws_errc(Errc::malformed_input, [&] { run(no_schema); }));

  json bad_schema = base_doc();
  bad_schema["schema"] = 2;
  CHECK(throws_errc(Errc::malformed_input, [&] { run(bad_schema); }));

  json no_space;
  no_space["schema"] = 1;
  CHECK(throws_errc(Errc::malformed_input, [&] { run(no_space); }));

  json stray = base_doc();
  stray["extra"] = 1;
  CHECK(throws_errc(Errc::malformed_input, [&] { run(stray); }));

  json bad_op = base_doc();
  bad_op["commands"] = json::parse(R"([{"op":"frobnicate"}])");
  CHECK(throws_errc(Errc::malformed_input, [&] { run(bad_op); }));

  json unresolved = base_doc();
  unresolved["commands"] = json::parse(R"([{"op":"variation","measure":"ghost"}])");
  CHECK(throws_errc(Errc::malformed_input, [&] { run(unresolved); }));

  // Hypothesis violations from the core surface unchanged.
  json off_ball = base_doc();
  off_ball["commands"] =
      json::parse(R"([{"op":"is_maximal","p":{"atoms":[{"xstar":[2,0],"w":1}]}}])");
  CHECK(throws_errc(Errc::not_in_ball, [&] { run(off_ball); }));

  json bad_expect = base_doc();
  bad_expect["commands"] = json::parse(R"([{"op":"is_simplexoid","expect":7}])");
  CHECK(throws_errc(Errc::malformed_input, [&] { run(bad_expect); }));
}

TEST_CASE("scenario files run from disk and missing paths are reported") {
  scenario::RunOptions opts;
  CHECK(throws_errc(Errc::malformed_input, [&] {
    scenario::run_file("/nonexistent/choquet_scenario.json", opts);
  }));

  json doc = base_doc();
  doc["commands"] = json::parse(R"([{"op":"extreme_points"}])");
  auto path = std::filesystem::temp_directory_path() / "choquet_scenario_test.json";
  {
    std::ofstream out(path);
    out << doc.dump(2) << "\n";
  }
  scenario::Report r = scenario::run_file(path.string(), opts);
  std::filesystem::remove(path);
  CHECK(r.exit_code == 0);
  CHECK(r.document["results"][0]["extreme_points"]["points"].size() == 4);
}

TEST_CASE("reports are byte-identical under a fixed seed") {
  json doc = base_doc();
  doc["vector_measures"] = json::parse(R"({"mu":{"entries":{"t1":[0.5,0.5]}}})");
  doc["commands"] = json::parse(R"([
    {"op":"transfer","measure":"mu"},
    {"op":"enumerate_minimal","measure":"mu"},
    {"op":"verify","suite":"hustad_roundtrip","trials":25},
    {"op":"verify","suite":"mokobodzki","trials":15}
  ])");

  scenario::RunOptions opts;
  opts.seed = 20260817;
  scenario::Report a = scenario::run_document(doc, opts);
  scenario::Report b = scenario::run_document(doc, opts);
  CHECK(a.exit_code == 0);
  CHECK(a.document.dump() == b.document.dump());
  CHECK(a.text == b.text);
}

TEST_CASE("suites whose hypothesis the scenario space fails are skipped") {
  json doc = base_doc();
  doc["commands"] = json::parse(R"([{"op":"verify","suite":"strict_convexity"}])");

  scenario::Report r = run(doc);
  CHECK(r.exit_code == 0);
  CHECK(r.text.find("skipped") != std::string::npos);
  CHECK(r.document["results"][0]["report"]["skipped"] == true);
  CHECK(r.document["results"][0]["ok"] == true);
}

TEST_CASE("suite registry knows its nine suites and rejects strangers") {
  CHECK(suites::suite_names().size() == 9);
  CHECK(suites::is_suite("mokobodzki"));
  CHECK(suites::is_suite("disintegration"));
  CHECK_FALSE(suites::is_suite(""));
  CHECK_FALSE(suites::is_suite("frobnicate"));
  CHECK(throws_errc(Errc::unknown_suite, [] {
    suites::run_suite("frobnicate", suites::SuiteConfig{});
  }));

  json doc = base_doc();
  doc["commands"] = json::parse(R"([{"op":"verify","suite":"frobnicate"}])");
  CHECK(throws_errc(Errc::unknown_suite, [&] { run(doc); }));
}

TEST_CASE("suite results serialize with their counters") {
  suites::SuiteConfig config;
  config.trials = 20;
  suites::SuiteResult s = suites::run_suite("hustad_roundtrip", config);
  CHECK(s.passed);
  CHECK(s.trials == 20);
  json j = suites::to_json(s);
  CHECK(j["suite"] == "hustad_roundtrip");
  CHECK_FALSE(j["property"].get<std::string>().empty());
  CHECK(j["passed"] == true);
  CHECK(j["failures"] == 0);
  CHECK(j["max_violation"].get<double>() < j["tolerance"].get<double>());
}
