#pragma once

// Test-side construction oracles.  These deliberately bypass the closed-form
// solvers: everything is built with exp_map / angle_at / distance in the
// embedded models and measured back, so they stay independent of the
// trigonometric code paths they check.

#include <cmath>

#include "curvatura/core.hpp"

namespace oracle {

// Opposite side of an SAS triangle, by placing the two given sides in the
// model and measuring the far endpoints.
inline double sas_side(const curvatura::SpaceForm& s, double b, double c, double A) {
    using namespace curvatura;
    Point v = origin(s);
    Vec3 u1 = base_dir(s).vec;
    Vec3 u2 = rotate_tangent(s, v, u1, A);
    Point pb = exp_map(s, TangentDir{v, u1}, c);  // side AB = c
    Point pc = exp_map(s, TangentDir{v, u2}, b);  // side AC = b
    return distance(s, pb, pc);
}

// Angles of an SSS triangle, by intersecting two distance conditions:
// place A and B, then walk C out from A at a trial angle found by bisection
// against |BC| (monotone in the apex angle).
inline double sss_angle_at_A(const curvatura::SpaceForm& s, double a, double b, double c) {
    using namespace curvatura;
    double lo = 0, hi = 3.14159265358979323846;
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        double mid = 0.5 * (lo + hi);
        (sas_side(s, b, c, mid) < a ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace oracle
