#pragma once

#include "valconv/geometry.hpp"
#include "valconv/measure.hpp"
#include "valconv/pair1d.hpp"
#include "valconv/valuation.hpp"

#include "json.hpp"

#include <map>
#include <string>
#include <vector>

namespace valconv {

using Json = nlohmann::json;

// bodies: {"kind": "interval", "lo", "hi"}
//         {"kind": "polygon", "vertices": [[x, y], ...]}
//         {"kind": "support", "dim", "directions": [[...], ...], "values": [...]}
Json body_to_json(const ConvexBody& body);
ConvexBody body_from_json(const Json& j);

// measures: {"dim", "atoms": [[[coords], weight], ...],
//            "grid": {"origin": [...], "spacing", "shape": [...], "values": [...]}}
Json measure_to_json(const Measure& mu);
Measure measure_from_json(const Json& j);

// valuations: {"dim", "terms": [{"coeff", "measure", "body"}, ...]}; the
// standalone parser takes inline objects only, scenes may use name references
Json valuation_to_json(const SmoothValuation& psi);
SmoothValuation valuation_from_json(const Json& j);

Json pair_to_json(const Pair1D& p);
Pair1D pair_from_json(const Json& j);

// named inputs for the command line driver; probes name bodies to evaluate
struct Scene {
    std::map<std::string, ConvexBody> bodies;
    std::map<std::string, Measure> measures;
    std::map<std::string, SmoothValuation> valuations;
    std::vector<std::string> probes;
};

Json scene_to_json(const Scene& scene);
Scene scene_from_json(const Json& j);
Scene load_scene(const std::string& path);

// shortest representation that parses back to the same double, %.17g
std::string format_g17(double v);

} // namespace valconv
