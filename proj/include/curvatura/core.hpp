#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "curvatura/errors.hpp"
#include "curvatura/vec3.hpp"

namespace curvatura {

enum class Kind { Spherical, Euclidean, Hyperbolic };

const char* kind_name(Kind k);

// One of the three complete simply connected surfaces of constant curvature,
// selected by kind and radius R.  Curvature is +1/R^2, 0 or -1/R^2; the
// radius is ignored for the Euclidean plane.
//
// The sphere is embedded as { x : <x,x> = R^2 } for the definite form
// <x,y> = x0*y0 + x1*y1 + x2*y2, the hyperbolic plane as the upper sheet of
// { x : B(x,x) = R^2 } for the indefinite form B(x,y) = x0*y0 - x1*y1 - x2*y2.
// Euclidean points ride along as homogeneous vectors (1, x, y).
struct SpaceForm {
    Kind kind = Kind::Euclidean;
    double radius = 1.0;
    // Default postcondition / tie-break tolerance; see classify_line_pair.
    double tolerance = 1e-9;

    static SpaceForm spherical(double R = 1.0, double tol = 1e-9);
    static SpaceForm euclidean(double tol = 1e-9);
    static SpaceForm hyperbolic(double R = 1.0, double tol = 1e-9);

    // +1, 0, -1
    int curvature_sign() const;
    double curvature() const;

    // The model bilinear form (definite, degenerate-affine, or Lorentzian).
    double form(const Vec3& a, const Vec3& b) const;
};

// A position on the model surface.
struct Point {
    Vec3 coords;

    double x() const { return coords[1]; }  // Euclidean accessors
    double y() const { return coords[2]; }
};

// A unit direction in the tangent plane at `base`:  B(base, vec) = 0 and the
// tangent metric (the form itself, negated for the hyperboloid) gives vec
// unit length.
struct TangentDir {
    Point base;
    Vec3 vec;
};

// A complete geodesic: great circle, straight line, or hyperbolic geodesic.
struct Line {
    Point base;
    TangentDir dir;
};

// --- classification of a pair of lines -------------------------------------

struct LinesIntersect {
    Point point;   // canonical representative of the crossing
    double angle;  // acute crossing angle, in (0, pi/2]
};

struct LinesUltraparallel {
    Point foot1, foot2;  // feet of the common perpendicular on each line
    double gap;          // minimal distance between the lines
};

struct LinesAsymptotic {};
struct LinesCoincident {};

using LinePairClass =
    std::variant<LinesIntersect, LinesUltraparallel, LinesAsymptotic, LinesCoincident>;

// --- constructors -----------------------------------------------------------

// Canonical base point: (R,0,0) on the non-Euclidean surfaces, the origin of
// the plane otherwise.
Point origin(const SpaceForm& s);

// The canonical unit tangent at origin(), pointing along the second axis.
TangentDir base_dir(const SpaceForm& s);

// Validating constructor from raw embedding coordinates (Euclidean input is
// (x, y)); throws DomainError when the surface equation fails beyond tol.
Point make_point(const SpaceForm& s, const Vec3& coords);
Point make_point_euclidean(double x, double y);

// Project a near-surface vector back onto the model surface.  exp_map and the
// rigid motions call this to stop drift from accumulating in long chains.
Point renormalize(const SpaceForm& s, const Vec3& raw);

// Unit tangent at `at` rotated a quarter turn from u (fixed orientation).
Vec3 rotate90(const SpaceForm& s, const Point& at, const Vec3& u);

// Rotate the unit tangent u at `at` by `angle` (positive sense of rotate90).
Vec3 rotate_tangent(const SpaceForm& s, const Point& at, const Vec3& u, double angle);

// Initial direction of the geodesic from p to q.
// Throws DegenerateAngle when undefined (coincident or antipodal points).
TangentDir direction(const SpaceForm& s, const Point& p, const Point& q);

Line line_through(const SpaceForm& s, const Point& p, const Point& q);
Line line_from(const SpaceForm& s, const Point& p, const Vec3& unit_tangent);

// Tangent direction of l at a point q on l (oriented along l.dir).
Vec3 line_tangent_at(const SpaceForm& s, const Line& l, const Point& q);

bool contains(const SpaceForm& s, const Line& l, const Point& p, double tol = -1);
bool same_line(const SpaceForm& s, const Line& l1, const Line& l2, double tol = -1);

// --- metric operations ------------------------------------------------------

// Geodesic distance.  Spherical result lies in [0, pi*R]; the hyperbolic
// branch uses a log1p-based acosh on the difference vector so that nearby
// points do not cancel catastrophically.
double distance(const SpaceForm& s, const Point& p, const Point& q);

// Point reached from dir.base after arc length t along the geodesic with
// initial direction dir.  Accepts any real t (negative runs backwards).
Point exp_map(const SpaceForm& s, const TangentDir& dir, double t);

// Unit tangent of t -> exp_map(dir, t) at parameter t.
TangentDir exp_map_tangent(const SpaceForm& s, const TangentDir& dir, double t);

// Unsigned angle in [0, pi] between the initial directions of the geodesics
// vertex->p and vertex->q.
double angle_at(const SpaceForm& s, const Point& vertex, const Point& p, const Point& q);

// Angle in [0, pi] between two unit tangents in the same tangent plane.
double angle_between(const SpaceForm& s, const Point& at, const Vec3& u1, const Vec3& u2);

// Foot of the perpendicular dropped from p onto l and its length.
// Throws PoleError when p is equidistant from all of l (spherical pole).
struct FootResult {
    Point foot;
    double h;
};
FootResult foot_of_perpendicular(const SpaceForm& s, const Point& p, const Line& l);

// The line through q (which must lie on l) orthogonal to l.
Line perpendicular_at(const SpaceForm& s, const Line& l, const Point& q);

// Midpoint of the geodesic segment pq; spherical antipodal pairs are
// rejected (the midpoint is not unique).
Point midpoint(const SpaceForm& s, const Point& p, const Point& q);

// Full trichotomy of a line pair.  Ties are broken by SpaceForm::tolerance:
// the pair is Asymptotic exactly when the normals' Gram value sits within
// tolerance of the intersection/ultraparallel boundary, so that the
// measure-zero boundary stays detectable.
LinePairClass classify_line_pair(const SpaceForm& s, const Line& l1, const Line& l2);

// --- internal helpers shared by the higher modules --------------------------

// Normal vector of the geodesic plane (unit Euclidean normal on the sphere,
// B-unit spacelike normal on the hyperboloid, homogeneous line coordinates
// [c, -dy, dx] in the Euclidean plane).
Vec3 line_normal(const SpaceForm& s, const Line& l);

// Round-off bound for metric quantities measured at p.  Hyperboloid
// coordinates grow like exp(r/R) while the geometry stays unit scale, so the
// usable precision of any distance or angle read off the embedding decays
// with the squared coordinate magnitude; validation code grades its
// tolerances by this bound instead of pretending doubles are exact far out.
double metric_noise(const SpaceForm& s, const Point& p);

}  // namespace curvatura
