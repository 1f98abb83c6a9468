#pragma once

#include <variant>
#include <vector>

#include "curvatura/core.hpp"

namespace curvatura {

// Equilateral polygon chain: n congruent segments of length s meeting at the
// common interior angle theta.  vertices has n+1 entries (closed chains
// repeat the start within tolerance).
struct PolygonChain {
    SpaceForm space;
    double s = 0;
    double theta = 0;
    int n = 0;
    std::vector<Point> vertices;

    void validate(double tol = 1e-10) const;
};

struct ChainCircle {
    Point center;
    double radius;
};
struct ChainHorocycle {};
struct ChainEquidistant {
    Line axis;
};

// Vertex locus of a chain: a circle when the perpendicular bisectors of the
// segments meet, an equidistant curve about the bisectors' common
// perpendicular when they are ultraparallel, a horocycle on the boundary.
using ChainCenter = std::variant<ChainCircle, ChainHorocycle, ChainEquidistant>;

// Angle of parallelism P(p): supremum of the angles at G (raised
// perpendicularly to height p above a base line) at which a ray through G
// still meets the base.  Hyperbolic only; the Euclidean plane returns
// exactly pi/2 (the supremum is attained in the limit), the sphere is
// rejected.  Primary path is bisection over the ray-intersection predicate;
// the closed form 2*atan(exp(-p/R)) is a cross-check.
double angle_of_parallelism(const SpaceForm& s, double p);

// Ray-intersection predicate behind the bisection: does the ray leaving G at
// angle theta from the downward perpendicular meet the base line?
bool parallelism_predicate(const SpaceForm& s, double p, double theta);

// Measured angle at G between the rays to the base foot F and to the base
// point at arc length `dist` from F; increases toward P(p) as dist grows.
double approach_angle(const SpaceForm& s, double p, double dist);

// Iterate the rigid motion "advance s, turn by pi - theta" n times.
PolygonChain build_chain(const SpaceForm& s, double seg, double theta, int n);

// Classify the vertex locus via the perpendicular bisectors of the first two
// segments, then verify every vertex against the resulting center/axis.
ChainCenter classify_chain_center(const PolygonChain& chain);

}  // namespace curvatura
