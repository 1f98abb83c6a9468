#include "curvatura/jsonfmt.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace curvatura {

double round_sig(double x, int digits) {
    if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

ojson num(double x) { return ojson(round_sig(x)); }

ojson point_json(const SpaceForm& s, const Point& p) {
    if (s.kind == Kind::Euclidean) return ojson::array({num(p.x()), num(p.y())});
    return ojson::array({num(p.coords[0]), num(p.coords[1]), num(p.coords[2])});
}

}  // namespace curvatura
