#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "catkit/billiards/billiard.hpp"
#include "catkit/billiards/hard_balls.hpp"
#include "catkit/cat/quadruple.hpp"
#include "catkit/complex/simplicial.hpp"
#include "catkit/geometry/convex_body.hpp"
#include "catkit/metric/finite_metric.hpp"

namespace catkit::cli {

using Json = nlohmann::ordered_json;

/// Parses one JSON document; errors report the byte offset of the problem,
/// counted from `base_offset`.
Json parse_json(std::string_view text, std::size_t base_offset = 0, const std::string& source = "input");

/// One document per nonempty line; blank lines are skipped.
std::vector<Json> parse_jsonl(std::string_view text, const std::string& source = "input");

/// Reads a whole file (or stdin for "-").
std::string read_text(const std::string& path, std::istream& stdin_stream);

/// "1.5", "pi", "pi/3", "2*pi/5", "2pi/3".
double parse_angle(const std::string& text);
/// Comma-separated reals.
geometry::Vec parse_vector(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

Json to_json(const geometry::Vec& v);
geometry::Vec vec_from_json(const Json& j, const char* what);

// {"labels": [...], "dist": [[...], ...]}
metric::FiniteMetricSpace metric_from_json(const Json& j);
Json to_json(const metric::FiniteMetricSpace& m);

// {"pq":..,"px":..,"py":..,"qx":..,"qy":..,"xy":..}
cat::Quadruple quadruple_from_json(const Json& j);
Json to_json(const cat::Quadruple& q);

// {"vertices": [...], "maximal": [[...], ...]}; faces list vertex identifiers.
complex::SimplicialComplex complex_from_json(const Json& j);
Json to_json(const complex::SimplicialComplex& s);
/// Vertex identifiers of a simplex, as they appear in the complex labels.
Json simplex_to_json(const complex::SimplicialComplex& s, const complex::Simplex& sigma);
/// Simplex given by identifiers, e.g. "a,b".
complex::Simplex simplex_from_ids(const complex::SimplicialComplex& s, const std::string& ids);

// {"halfspace": {"normal": [...], "offset": r}}, {"ball": {"center": [...], "radius": r}},
// {"polytope": {"dim": m, "faces": [{"normal": [...], "offset": r}, ...]}},
// {"cylinder": {...}} or {"type": "cylinder", "i":.., "j":.., "radius":.., "weights": [wi, wj],
//  "dim": 3n, "block": 3}.
geometry::ConvexBody body_from_json(const Json& j, int default_dim = 0);
Json to_json(const geometry::ConvexBody& b);
/// Array of bodies, or {"bodies": [...]} / {"walls": [...]}.
std::vector<geometry::ConvexBody> bodies_from_json(const Json& j);

billiards::BilliardTable table_from_json(const Json& j);

// {"balls": [{"radius":.., "mass":.., "position": [3], "velocity": [3]}, ...]}
billiards::HardBallSystem system_from_json(const Json& j);
Json to_json(const billiards::HardBallSystem& s);

}  // namespace catkit::cli
