#pragma once

#include <vector>

#include "curvatura/core.hpp"

namespace curvatura {

// Trirectangular quadrilateral ABCD: right angles at A, B and C, fourth
// angle phi at D.  Side a = AB, b = BC, c = CD, d = DA; the sign of
// phi - pi/2 matches the curvature sign, and the sides adjacent to phi
// compare against their opposites the same way (d vs b, c vs a).
struct LambertQuad {
    SpaceForm space;
    double a = 0, b = 0, c = 0, d = 0;
    double phi = 0;
    Point A, B, C, D;

    void validate(double tol = 1e-9) const;
};

// Isosceles birectangular quadrilateral: equal legs erected perpendicularly
// at both ends of the base; the two summit angles are equal.
struct SaccheriQuad {
    SpaceForm space;
    double base = 0, leg = 0, summit = 0;
    double summit_angle = 0;
    Point P0, P1;  // base vertices
    Point S0, S1;  // summit vertices above P0, P1

    void validate(double tol = 1e-9) const;
};

struct ProfileSample {
    double t;    // arc length along the upper line from B
    double h;    // perpendicular distance back to the base line
    double phi;  // angle at the sample between the backward upper-line
                 // direction and the dropped perpendicular (the quadrilateral's
                 // fourth angle at the sample)
};

struct PerpProfile {
    SpaceForm space;
    double h0 = 0;
    std::vector<ProfileSample> samples;
};

// The closing perpendiculars of a Lambert quadrilateral can fail to meet on
// the hyperbolic plane; that outcome is a theorem, reported with the
// classification of the failed closing pair.
struct NoFourthVertex : Error {
    LinePairClass closing;
    NoFourthVertex(LinePairClass cls, const std::string& what)
        : Error("no-fourth-vertex", what), closing(std::move(cls)) {}
};

// Construct ABCD from the two sides flanking the right angle at B.
// A sits at the canonical origin, B at distance a along the base direction,
// C at distance b up the perpendicular at B; D closes the figure as the meet
// of the perpendiculars at A (to AB) and at C (to BC).
// Spherical preconditions a, b < pi*R/2 keep the construction in a quarter
// sphere.  Throws NoFourthVertex on the hyperbolic plane when
// cosh(a/R)*tanh(b/R) >= 1.
LambertQuad lambert_quadrilateral(const SpaceForm& s, double a, double b);

SaccheriQuad saccheri_quadrilateral(const SpaceForm& s, double base, double leg);

// Cut the Saccheri quadrilateral along the perpendicular bisector of its
// base and rebuild the resulting half independently as a Lambert
// quadrilateral (a = base/2, b = midline height, so that c = summit/2 and
// d = leg).  The fold correspondence summit = 2c, summit_angle = phi is
// asserted to 1e-10 between the two constructions.
struct FoldResult {
    SaccheriQuad saccheri;
    LambertQuad lambert;
};
FoldResult fold_lambert(const SpaceForm& s, double base, double leg);

// Perpendicular-distance profile: base line through A, B at height h0 above
// A, upper line through B perpendicular to AB; each sample drops the
// perpendicular from the point at arc length t along the upper line.
// Spherical domain: h0 < pi*R/2 and t <= pi*R/2 (h vanishes at t = pi*R/2,
// where the lines meet).
PerpProfile perpendicular_profile(const SpaceForm& s, double h0,
                                  const std::vector<double>& t_values);

// Geometric default grid t0 * 2^k, k = 0..count-1.
std::vector<double> geometric_grid(double t0, int count);

// Threshold arc length t* of the two-perpendiculars configuration: lines AE
// and BH share the perpendicular AB of length h0; the perpendicular to AE
// erected at distance t from A meets BH iff t < t*.  Hyperbolic only;
// Euclidean and spherical inputs return +infinity (the erected perpendicular
// always meets BH, at infinity resp. within a quarter turn).
// Bisection over the intersection predicate; closed form artanh(sech(h0/R))*R
// is a cross-check, not the implementation.
double intersection_threshold(const SpaceForm& s, double h0);

// Predicate behind the threshold: does the perpendicular at distance t meet BH?
bool threshold_predicate(const SpaceForm& s, double h0, double t);

}  // namespace curvatura
