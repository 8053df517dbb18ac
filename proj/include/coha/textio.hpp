#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "coha/quiver.hpp"
#include "coha/sympoly.hpp"

namespace coha {

using Json = nlohmann::ordered_json;

// Inline JSON when the argument starts with '{' or '[' (or is a bare number),
// otherwise a file path.
Json load_json(const std::string& arg);

// {"vertices": ["a","b"], "arrows": [{"from":"a","to":"b"}, ...]}
Quiver parse_quiver(const Json& j);
Json quiver_to_json(const Quiver& q);

// {"a": 1, "b": 2}, keyed exactly by the vertices. A bare integer is accepted
// for one-vertex quivers.
DimVector parse_dimvector(const Json& j, const Quiver& q);
Json dimvector_to_json(const DimVector& d, const Quiver& q);

// {"a": "1", "b": "-1/2"}; plain JSON integers are accepted too.
Stability parse_stability(const Json& j, const Quiver& q);

// Sums of terms `c * x[vertex,nu]^e * ...` with nu counted from 1, e.g.
// "x[a,1] - 3/2 * x[a,1]^2 * x[b,1]". The result must be W_d-symmetric.
SymPoly parse_sympoly(std::string_view text, const Quiver& q, const DimVector& d);
std::string format_sympoly(const SymPoly& f, const Quiver& q);

// "(1,0)"
std::string format_dimvector(const DimVector& d);

}  // namespace coha
