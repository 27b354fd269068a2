#pragma once

// JSON file formats for fans, complexes, polynomial systems and divisor systems.
// Every loader throws InvalidInput with the byte offset or JSON path of the problem.

#include "toricq/complex.hpp"
#include "toricq/configs.hpp"
#include "toricq/fan.hpp"
#include "toricq/polysys.hpp"

#include <json.hpp>

#include <string>

namespace toricq::io {

using Json = nlohmann::ordered_json;

/// Parses text; syntax errors report the byte offset.
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

struct LoadedFan {
    Fan fan;
    bool rays_rescaled = false;  // some input ray was replaced by its primitive generator
};

/// {"dim": m, "rays": [[...], ...], "max_cones": [[i, ...], ...]} with 0-based ray indices.
LoadedFan fan_from_json(const Json& j);
Json fan_to_json(const Fan& fan);

/// {"vertices": r, "min_non_faces": [[...], ...]}
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& k);

/// Coefficient: integer, "p/q" string, or {"re": ..., "im": ...}.
GaussianRational coefficient_from_json(const Json& j, const std::string& path);
Json coefficient_to_json(const GaussianRational& z);

/// {"field": "R"|"C", "n": int, "polys": [[c_0, ..., c_{d-1}], ...]}; leading 1 omitted.
PolySystem system_from_json(const Json& j);
Json system_to_json(const PolySystem& sys);

/// {"n": int, "field": "R"|"C", "divisors": [[{"pt": {"re", "im"}, "mult": int}, ...], ...]}
DivisorSystem divisor_system_from_json(const Json& j);
Json divisor_system_to_json(const DivisorSystem& sys);

Field field_from_string(const std::string& s);

}  // namespace toricq::io
