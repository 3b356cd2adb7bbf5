#pragma once

#include <string>

#include "json.hpp"

#include "bcx/duality.hpp"
#include "bcx/hardy.hpp"
#include "bcx/linalg.hpp"

// JSON wire formats. Scalars serialize as {"e1": [re, im], "e2": [re, im]};
// the cartesian form {"z": [re, im], "w": [re, im]} is accepted on input.
// Hyperbolic values are [x1, x2] pairs. Malformed input throws ParseError.
namespace bcx {

using Json = nlohmann::json;

Json scalar_to_json(Bicomplex a);
Bicomplex scalar_from_json(const Json& j);

Json hyp_to_json(Hyperbolic h);
Hyperbolic hyp_from_json(const Json& j);

// {"dim": n, "e1": [[re, im] x n], "e2": [[re, im] x n]}
Json vector_to_json(const BCVector& x);
BCVector vector_from_json(const Json& j);

// {"rows": r, "cols": c, "e1": [r rows of c [re, im] entries], "e2": ...}
Json matrix_to_json(const BCMatrix& a);
BCMatrix matrix_from_json(const Json& j);

// {"degree": N, "coeffs": [scalar x (N+1)]}
Json series_to_json(const PowerSeries& f);
PowerSeries series_from_json(const Json& j);

// {"degree": N, "beta": [[x1, x2] x (N+1)]}
Json weights_to_json(const WeightSequence& w);
WeightSequence weights_from_json(const Json& j);

// {"dnorm": [x1, x2], "euclid": v}
Json norm_report_to_json(const OperatorNormReport& r);

// {"max_violation_a": [..], "max_violation_b": [..], "trials": n, "seed": s}
Json duality_report_to_json(const DualityReport& r);

Json parse_text(const std::string& text);
Json parse_file(const std::string& path);

}  // namespace bcx
