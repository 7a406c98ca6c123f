#pragma once

#include <memory>
#include <string>

#include "json.hpp"

#include "choquet/ordering.hpp"

// JSON wire forms. ordered_json keeps key order stable so serialized output
// is byte-reproducible. Malformed documents raise Errc::malformed_input.
namespace choquet::io {

using json = nlohmann::ordered_json;

json to_json(const Space& space);
std::shared_ptr<const Space> space_from_json(const json& j);

json to_json(const VectorMeasure& mu);
VectorMeasure vector_measure_from_json(const json& j,
                                       std::shared_ptr<const Space> space);

json to_json(const AtomicMeasure& nu);
AtomicMeasure atomic_from_json(const json& j, std::shared_ptr<const Space> space);

json to_json(const ProbabilityAtoms& p);
ProbabilityAtoms probability_from_json(const json& j,
                                       std::shared_ptr<const Space> space);

json to_json(const DFunction& f);
DFunction dfunction_from_json(const json& j, std::shared_ptr<const Space> space);

json to_json(const ConvexPL& f);
ConvexPL convex_pl_from_json(const json& j);

json to_json(const DilationWitness& w);
json to_json(const ExtremePoints& ep);
json to_json(const Face& face);

// Parses text, mapping syntax errors to Errc::malformed_input.
json parse(const std::string& text);

}  // namespace choquet::io
