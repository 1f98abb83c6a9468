#pragma once

#include <json.hpp>

#include "curvatura/core.hpp"

namespace curvatura {

// Insertion-ordered JSON keeps response bytes reproducible.
using ojson = nlohmann::ordered_json;

// Round to 15 significant digits; serialized values are then the shortest
// representation that round-trips, which pins the output byte-for-byte.
double round_sig(double x, int digits = 15);

ojson num(double x);

// Embedding coordinates: [x, y] for the plane, [x0, x1, x2] otherwise.
ojson point_json(const SpaceForm& s, const Point& p);

}  // namespace curvatura
