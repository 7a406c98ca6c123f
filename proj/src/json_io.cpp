#include "choquet/json_io.hpp"

#include "choquet/errors.hpp"

namespace choquet::io {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(Errc::malformed_input, what);
}

Vec vec_from(const json& j, const char* where) {
  if (!j.is_array()) bad(std::string(where) + ": expected a number array");
  Vec v;
  for (const auto& c : j) {
    if (!c.is_number()) bad(std::string(where) + ": expected a number array");
    v.push_back(c.get<double>());
  }
  return v;
}

double number_from(const json& j, const char* where) {
  if (!j.is_number()) bad(std::string(where) + ": expected a number");
  return j.get<double>();
}

json vec_to(const Vec& v) {
  json a = json::array();
  for (double c : v) a.push_back(c);
  return a;
}

json weighted_to(const std::vector<WeightedPoint>& atoms) {
  json a = json::array();
  for (const auto& atom : atoms)
    a.push_back(json{{"xstar", vec_to(atom.xstar)}, {"w", atom.weight}});
  return a;
}

}  // namespace

json to_json(const Space& space) {
  json ball;
  if (space.is_euclidean()) {
    ball = json{{"type", "euclidean"}};
  } else {
    json verts = json::array();
    for (const Vec& v : space.vertices()) verts.push_back(vec_to(v));
    ball = json{{"type", "polytope"}, {"vertices", std::move(verts)}};
  }
  return json{{"dim", space.dim()}, {"ball", std::move(ball)}};
}

std::shared_ptr<const Space> space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("ball"))
    bad("space: expected {dim, ball}");
  if (!j["dim"].is_number_integer()) bad("space: dim must be an integer");
  int dim = j["dim"].get<int>();
  const json& ball = j["ball"];
  if (!ball.is_object() || !ball.contains("type")) bad("space: ball needs a type");
  std::string type = ball["type"].is_string() ? ball["type"].get<std::string>() : "";
  if (type == "euclidean") return Space::euclidean(dim);
  if (type != "polytope") bad("space: unknown ball type \"" + type + "\"");
  if (!ball.contains("vertices")) bad("space: polytope ball needs vertices");
  std::vector<Vec> verts;
  for (const auto& v : ball["vertices"]) verts.push_back(vec_from(v, "space vertex"));
  for (const Vec& v : verts)
    if (static_cast<int>(v.size()) != dim) bad("space: vertex length differs from dim");
  return Space::polytope(std::move(verts));
}

json to_json(const VectorMeasure& mu) {
  json entries = json::object();
  for (const auto& [label, v] : mu.entries()) entries[label] = vec_to(v);
  return json{{"entries", std::move(entries)}};
}

VectorMeasure vector_measure_from_json(const json& j,
                                       std::shared_ptr<const Space> space) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_object())
    bad("vector measure: expected {entries}");
  std::map<std::string, Vec> entries;
  for (const auto& [label, v] : j["entries"].items())
    entries[label] = vec_from(v, "vector measure entry");
  return VectorMeasure(std::move(space), std::move(entries));
}

json to_json(const AtomicMeasure& nu) {
  json atoms = json::array();
  for (const auto& a : nu.atoms())
    atoms.push_back(json{{"t", a.label}, {"xstar", vec_to(a.xstar)}, {"w", a.weight}});
  return json{{"atoms", std::move(atoms)}};
}

AtomicMeasure atomic_from_json(const json& j, std::shared_ptr<const Space> space) {
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array())
    bad("atomic measure: expected {atoms}");
  std::vector<Atom> atoms;
  for (const auto& a : j["atoms"]) {
    if (!a.is_object() || !a.contains("t") || !a.contains("xstar") || !a.contains("w"))
      bad("atomic measure: atom needs {t, xstar, w}");
    if (!a["t"].is_string()) bad("atomic measure: t must be a string");
    atoms.push_back({a["t"].get<std::string>(), vec_from(a["xstar"], "atom point"),
                     number_from(a["w"], "atom weight")});
  }
  return AtomicMeasure(std::move(space), std::move(atoms));
}

json to_json(const ProbabilityAtoms& p) {
  return json{{"atoms", weighted_to(p.atoms())}};
}

ProbabilityAtoms probability_from_json(const json& j,
                                       std::shared_ptr<const Space> space) {
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array())
    bad("probability: expected {atoms}");
  std::vector<WeightedPoint> atoms;
  for (const auto& a : j["atoms"]) {
    if (!a.is_object() || !a.contains("xstar") || !a.contains("w"))
      bad("probability: atom needs {xstar, w}");
    atoms.push_back(
        {vec_from(a["xstar"], "atom point"), number_from(a["w"], "atom weight")});
  }
  return ProbabilityAtoms(std::move(space), std::move(atoms));
}

json to_json(const DFunction& f) {
  json pieces = json::object();
  for (const auto& [label, list] : f.pieces()) {
    json arr = json::array();
    for (const Vec& a : list) arr.push_back(vec_to(a));
    pieces[label] = std::move(arr);
  }
  return json{{"pieces", std::move(pieces)}};
}

DFunction dfunction_from_json(const json& j, std::shared_ptr<const Space> space) {
  if (!j.is_object() || !j.contains("pieces") || !j["pieces"].is_object())
    bad("dfunction: expected {pieces}");
  std::map<std::string, std::vector<Vec>> pieces;
  for (const auto& [label, arr] : j["pieces"].items()) {
    if (!arr.is_array()) bad("dfunction: pieces per label must be an array");
    std::vector<Vec> list;
    for (const auto& a : arr) list.push_back(vec_from(a, "dfunction piece"));
    pieces[label] = std::move(list);
  }
  return DFunction(std::move(space), std::move(pieces));
}

json to_json(const ConvexPL& f) {
  json pieces = json::array();
  for (const auto& p : f.pieces)
    pieces.push_back(json{{"a", vec_to(p.a)}, {"c", p.c}});
  return json{{"pieces", std::move(pieces)}};
}

ConvexPL convex_pl_from_json(const json& j) {
  if (!j.is_object() || !j.contains("pieces") || !j["pieces"].is_array())
    bad("convex function: expected {pieces}");
  ConvexPL f;
  for (const auto& p : j["pieces"]) {
    if (!p.is_object() || !p.contains("a")) bad("convex function: piece needs {a}");
    ConvexPL::Piece piece;
    piece.a = vec_from(p["a"], "convex piece");
    if (p.contains("c")) piece.c = number_from(p["c"], "convex piece offset");
    f.pieces.push_back(std::move(piece));
  }
  return f;
}

json to_json(const DilationWitness& w) {
  json pi = json::array();
  for (const Vec& row : w.pi) pi.push_back(vec_to(row));
  return json{{"source", weighted_to(w.source)},
              {"target", weighted_to(w.target)},
              {"pi", std::move(pi)}};
}

json to_json(const ExtremePoints& ep) {
  json points = json::array();
  for (const Vec& p : ep.points) points.push_back(vec_to(p));
  return json{{"whole_sphere", ep.whole_sphere}, {"points", std::move(points)}};
}

json to_json(const Face& face) {
  json out = json::object();
  out["vertex_indices"] = face.vertex_indices;
  if (face.sphere_point) out["sphere_point"] = vec_to(*face.sphere_point);
  out["affine_dim"] = face.affine_dim;
  return out;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("invalid JSON");
  return j;
}

}  // namespace choquet::io
