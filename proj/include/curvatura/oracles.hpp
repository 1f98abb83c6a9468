#pragma once

#include "curvatura/core.hpp"

namespace curvatura {

// Independent area oracle: integrate the metric area element over the
// triangle in geodesic polar coordinates about vertex A,
//   area = integral over theta in [0, angle(A)] of R^2 (1 - cs(rho(theta)/R)),
// where rho(theta) is the distance from A to the opposite side along the ray
// at angle theta and cs is cos/cosh.  Shares no code path with the
// defect/excess formula; non-Euclidean only.
double triangle_area_by_quadrature(const SpaceForm& s, const Point& A, const Point& B,
                                   const Point& C, int panels = 64);

// Distance from A along the interior ray at `theta` from direction(A->B)
// (rotating toward C) to the line BC; exposed for the oracle's own tests.
double ray_distance_to_line(const SpaceForm& s, const Point& A, const Vec3& ray, const Line& bc);

}  // namespace curvatura
