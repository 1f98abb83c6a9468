#include "curvatura/core.hpp"

#include <algorithm>
#include <cmath>

namespace curvatura {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp1(double x) { return std::clamp(x, -1.0, 1.0); }

// acosh(1 + x) for x >= 0 without cancellation near x = 0.
double acosh1p(double x) {
    if (x < 0) x = 0;
    return std::log1p(x + std::sqrt(x * (x + 2.0)));
}

}  // namespace

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Spherical: return "spherical";
        case Kind::Euclidean: return "euclidean";
        case Kind::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

SpaceForm SpaceForm::spherical(double R, double tol) {
    if (!(R > 0) || !std::isfinite(R)) throw DomainError("spherical radius must be finite and > 0");
    return SpaceForm{Kind::Spherical, R, tol};
}

SpaceForm SpaceForm::euclidean(double tol) { return SpaceForm{Kind::Euclidean, 1.0, tol}; }

SpaceForm SpaceForm::hyperbolic(double R, double tol) {
    if (!(R > 0) || !std::isfinite(R)) throw DomainError("hyperbolic radius must be finite and > 0");
    return SpaceForm{Kind::Hyperbolic, R, tol};
}

int SpaceForm::curvature_sign() const {
    switch (kind) {
        case Kind::Spherical: return 1;
        case Kind::Euclidean: return 0;
        case Kind::Hyperbolic: return -1;
    }
    return 0;
}

double SpaceForm::curvature() const { return curvature_sign() / (radius * radius); }

double SpaceForm::form(const Vec3& a, const Vec3& b) const {
    if (kind == Kind::Hyperbolic)
        return a[0] * b[0] - a[1] * b[1] - a[2] * b[2];
    return dot(a, b);
}

Point origin(const SpaceForm& s) {
    if (s.kind == Kind::Euclidean) return Point{{1, 0, 0}};
    return Point{{s.radius, 0, 0}};
}

TangentDir base_dir(const SpaceForm& s) { return TangentDir{origin(s), Vec3{0, 1, 0}}; }

Point renormalize(const SpaceForm& s, const Vec3& raw) {
    if (s.kind == Kind::Euclidean) {
        return Point{{1.0, raw[1], raw[2]}};
    }
    double q = s.form(raw, raw);
    if (s.kind == Kind::Spherical) {
        if (!(q > 0)) throw DomainError("vector cannot be projected onto the model surface");
        return Point{raw * (s.radius / std::sqrt(q))};
    }
    // Hyperboloid: B(x,x) on large coordinates cancels catastrophically, so
    // rescale only while the computed form is trustworthy; far-field
    // near-surface combinations pass through (they are already as close to
    // the sheet as doubles can express).
    double mag2 = dot(raw, raw);
    double R2 = s.radius * s.radius;
    if (q > 0 && (mag2 < 5e4 * R2 || q > 1e-5 * mag2)) {
        Vec3 p = raw * (s.radius / std::sqrt(q));
        if (p[0] < 0) p = -p;  // upper sheet
        return Point{p};
    }
    if (mag2 >= 5e4 * R2) {
        Vec3 p = raw;
        if (p[0] < 0) p = -p;
        return Point{p};
    }
    throw DomainError("vector cannot be projected onto the model surface");
}

Point make_point(const SpaceForm& s, const Vec3& coords) {
    if (s.kind == Kind::Euclidean) return Point{{1.0, coords[0], coords[1]}};
    double q = s.form(coords, coords);
    double R2 = s.radius * s.radius;
    if (std::abs(q - R2) > 1e-6 * R2)
        throw DomainError("coordinates do not satisfy the surface equation");
    if (s.kind == Kind::Hyperbolic && coords[0] <= 0)
        throw DomainError("hyperboloid point must lie on the upper sheet");
    return renormalize(s, coords);
}

Point make_point_euclidean(double x, double y) { return Point{{1.0, x, y}}; }

Vec3 rotate90(const SpaceForm& s, const Point& at, const Vec3& u) {
    switch (s.kind) {
        case Kind::Spherical:
            return cross(at.coords, u) * (1.0 / s.radius);
        case Kind::Hyperbolic:
            return lorentz_flip(cross(at.coords, u)) * (1.0 / s.radius);
        case Kind::Euclidean:
            return Vec3{0, -u[2], u[1]};
    }
    return u;
}

Vec3 rotate_tangent(const SpaceForm& s, const Point& at, const Vec3& u, double angle) {
    return u * std::cos(angle) + rotate90(s, at, u) * std::sin(angle);
}

// Tangent-space inner product (positive definite in all three models).
static double tangent_dot(const SpaceForm& s, const Vec3& a, const Vec3& b) {
    if (s.kind == Kind::Hyperbolic) return -s.form(a, b);
    return dot(a, b);
}

TangentDir direction(const SpaceForm& s, const Point& p, const Point& q) {
    Vec3 w;
    if (s.kind == Kind::Euclidean) {
        w = q.coords - p.coords;  // first component cancels to 0
    } else {
        double R2 = s.radius * s.radius;
        w = q.coords - p.coords * (s.form(p.coords, q.coords) / R2);
    }
    double n2 = tangent_dot(s, w, w);
    double scale = (s.kind == Kind::Euclidean) ? 1.0 : s.radius;
    if (!(n2 > 1e-24 * scale * scale))
        throw DegenerateAngle("geodesic direction undefined: coincident or antipodal points");
    return TangentDir{p, w * (1.0 / std::sqrt(n2))};
}

Line line_from(const SpaceForm&, const Point& p, const Vec3& unit_tangent) {
    return Line{p, TangentDir{p, unit_tangent}};
}

Line line_through(const SpaceForm& s, const Point& p, const Point& q) {
    return Line{p, direction(s, p, q)};
}

double distance(const SpaceForm& s, const Point& p, const Point& q) {
    switch (s.kind) {
        case Kind::Euclidean:
            return std::hypot(q.coords[1] - p.coords[1], q.coords[2] - p.coords[2]);
        case Kind::Spherical:
            // atan2 of |p x q| against p.q is well conditioned at both ends.
            return s.radius * std::atan2(norm(cross(p.coords, q.coords)) / (s.radius * s.radius),
                                         dot(p.coords, q.coords) / (s.radius * s.radius));
        case Kind::Hyperbolic: {
            Vec3 d = q.coords - p.coords;
            double x = (-s.form(d, d)) / (2.0 * s.radius * s.radius);
            return s.radius * acosh1p(x);
        }
    }
    return 0;
}

Point exp_map(const SpaceForm& s, const TangentDir& dir, double t) {
    switch (s.kind) {
        case Kind::Euclidean:
            return Point{dir.base.coords + dir.vec * t};
        case Kind::Spherical: {
            double a = t / s.radius;
            return renormalize(s, dir.base.coords * std::cos(a) + dir.vec * (s.radius * std::sin(a)));
        }
        case Kind::Hyperbolic: {
            double a = t / s.radius;
            return renormalize(s, dir.base.coords * std::cosh(a) + dir.vec * (s.radius * std::sinh(a)));
        }
    }
    return dir.base;
}

TangentDir exp_map_tangent(const SpaceForm& s, const TangentDir& dir, double t) {
    Point at = exp_map(s, dir, t);
    switch (s.kind) {
        case Kind::Euclidean:
            return TangentDir{at, dir.vec};
        case Kind::Spherical: {
            double a = t / s.radius;
            Vec3 v = dir.base.coords * (-std::sin(a) / s.radius) + dir.vec * std::cos(a);
            return TangentDir{at, v * (1.0 / std::sqrt(tangent_dot(s, v, v)))};
        }
        case Kind::Hyperbolic: {
            double a = t / s.radius;
            Vec3 v = dir.base.coords * (std::sinh(a) / s.radius) + dir.vec * std::cosh(a);
            // trust the computed norm only where it is well conditioned
            double n2 = tangent_dot(s, v, v);
            if (n2 > 0.5 && n2 < 2.0) v = v * (1.0 / std::sqrt(n2));
            return TangentDir{at, v};
        }
    }
    return dir;
}

double angle_between(const SpaceForm& s, const Point&, const Vec3& u1, const Vec3& u2) {
    double c = tangent_dot(s, u1, u2);
    Vec3 w = u2 - u1 * c;  // component of u2 orthogonal to u1
    double sn = std::sqrt(std::max(0.0, tangent_dot(s, w, w)));
    return std::atan2(sn, c);
}

double angle_at(const SpaceForm& s, const Point& vertex, const Point& p, const Point& q) {
    TangentDir up = direction(s, vertex, p);
    TangentDir uq = direction(s, vertex, q);
    return angle_between(s, vertex, up.vec, uq.vec);
}

double metric_noise(const SpaceForm& s, const Point& p) {
    constexpr double eps = 2.220446049250313e-16;
    if (s.kind != Kind::Hyperbolic) return 32 * eps * s.radius;
    double mag2 = dot(p.coords, p.coords) / (s.radius * s.radius);
    return 64 * eps * std::max(1.0, mag2) * s.radius;
}

Vec3 line_normal(const SpaceForm& s, const Line& l) {
    const Vec3& b = l.base.coords;
    const Vec3& d = l.dir.vec;
    switch (s.kind) {
        case Kind::Spherical:
            return cross(b, d) * (1.0 / s.radius);
        case Kind::Hyperbolic:
            return lorentz_flip(cross(b, d)) * (1.0 / s.radius);
        case Kind::Euclidean:
            // [c, -dy, dx]; plain dot with (1, x, y) is the signed distance.
            return Vec3{d[2] * b[1] - d[1] * b[2], -d[2], d[1]};
    }
    return {};
}

// Signed incidence of p against the line normal; zero iff p lies on the line.
static double incidence(const SpaceForm& s, const Vec3& n, const Point& p) {
    if (s.kind == Kind::Hyperbolic) return s.form(p.coords, n);
    return dot(p.coords, n);
}

bool contains(const SpaceForm& s, const Line& l, const Point& p, double tol) {
    if (tol < 0) tol = s.tolerance;
    double inc = incidence(s, line_normal(s, l), p);
    double scale = (s.kind == Kind::Euclidean) ? 1.0 : s.radius;
    return std::abs(inc) <= tol * scale * 10.0;
}

bool same_line(const SpaceForm& s, const Line& l1, const Line& l2, double tol) {
    if (tol < 0) tol = s.tolerance;
    return contains(s, l1, l2.base, tol) &&
           contains(s, l1, exp_map(s, l2.dir, 0.5 * ((s.kind == Kind::Euclidean) ? 1.0 : s.radius)),
                    tol);
}

FootResult foot_of_perpendicular(const SpaceForm& s, const Point& p, const Line& l) {
    Vec3 n = line_normal(s, l);
    switch (s.kind) {
        case Kind::Euclidean: {
            double d = dot(p.coords, n);  // n is [c, -dy, dx] with unit (dy,dx)
            Point foot{{1.0, p.coords[1] - d * n[1], p.coords[2] - d * n[2]}};
            return {foot, std::abs(d)};
        }
        case Kind::Spherical: {
            double d = dot(p.coords, n);
            Vec3 f = p.coords - n * d;
            double fn = norm(f);
            if (fn < 1e-12 * s.radius)
                throw PoleError("point is a pole of the line: every point of the line is equidistant");
            Point foot{f * (s.radius / fn)};
            return {foot, distance(s, p, foot)};
        }
        case Kind::Hyperbolic: {
            // B(p, n) = R sinh(h/R) for the B-unit normal; this pairing stays
            // accurate arbitrarily far out, unlike the difference-vector path.
            double d = s.form(p.coords, n);
            Vec3 f = p.coords + n * d;
            Point foot = renormalize(s, f);
            return {foot, s.radius * std::asinh(std::abs(d) / s.radius)};
        }
    }
    return {p, 0};
}

Vec3 line_tangent_at(const SpaceForm& s, const Line& l, const Point& q) {
    switch (s.kind) {
        case Kind::Euclidean:
            return l.dir.vec;
        case Kind::Spherical: {
            Vec3 n = line_normal(s, l);
            Vec3 t = cross(n, q.coords);
            return t * (1.0 / norm(t));
        }
        case Kind::Hyperbolic: {
            Vec3 n = line_normal(s, l);
            Vec3 t = cross(lorentz_flip(q.coords), lorentz_flip(n));
            double n2 = -s.form(t, t);
            return t * (1.0 / std::sqrt(n2));
        }
    }
    return l.dir.vec;
}

Line perpendicular_at(const SpaceForm& s, const Line& l, const Point& q) {
    if (!contains(s, l, q, std::max(s.tolerance, 1e-7)))
        throw OffLine("perpendicular_at: point does not lie on the line");
    Vec3 t = line_tangent_at(s, l, q);
    return line_from(s, q, rotate90(s, q, t));
}

Point midpoint(const SpaceForm& s, const Point& p, const Point& q) {
    double d = distance(s, p, q);
    if (s.kind == Kind::Spherical && d > kPi * s.radius - 1e-9 * s.radius)
        throw AntipodalError("midpoint of an antipodal pair is not unique");
    TangentDir u = direction(s, p, q);
    return exp_map(s, u, 0.5 * d);
}

namespace {

// Canonical sign for a spherical intersection representative: prefer the
// candidate nearest the two base points, tie-broken lexicographically.
Vec3 canonical_sign(const Vec3& x, const Vec3& ref) {
    double c = dot(x, ref);
    if (c > 1e-12) return x;
    if (c < -1e-12) return -x;
    for (int i = 0; i < 3; ++i) {
        if (x[i] > 1e-12) return x;
        if (x[i] < -1e-12) return -x;
    }
    return x;
}

double acute(double ang) { return std::min(ang, kPi - ang); }

}  // namespace

LinePairClass classify_line_pair(const SpaceForm& s, const Line& l1, const Line& l2) {
    const double tol = s.tolerance;
    switch (s.kind) {
        case Kind::Euclidean: {
            const Vec3& d1 = l1.dir.vec;
            const Vec3& d2 = l2.dir.vec;
            double cr = d1[1] * d2[2] - d1[2] * d2[1];
            if (std::abs(cr) <= tol) {
                if (contains(s, l1, l2.base, tol)) return LinesCoincident{};
                FootResult fr = foot_of_perpendicular(s, l2.base, l1);
                return LinesUltraparallel{fr.foot, l2.base, fr.h};
            }
            // Solve base1 + t1 d1 = base2 + t2 d2 in the plane.
            double bx = l2.base.coords[1] - l1.base.coords[1];
            double by = l2.base.coords[2] - l1.base.coords[2];
            double t1 = (bx * d2[2] - by * d2[1]) / cr;
            Point x{{1.0, l1.base.coords[1] + t1 * d1[1], l1.base.coords[2] + t1 * d1[2]}};
            double ang = acute(angle_between(s, x, d1, d2));
            return LinesIntersect{x, ang};
        }
        case Kind::Spherical: {
            Vec3 n1 = line_normal(s, l1), n2 = line_normal(s, l2);
            double c = clamp1(dot(n1, n2));
            if (1.0 - std::abs(c) <= tol) return LinesCoincident{};
            Vec3 x = cross(n1, n2);
            x = canonical_sign(x, l1.base.coords + l2.base.coords);
            Point pt{x * (s.radius / norm(x))};
            double ang = acute(angle_between(s, pt, line_tangent_at(s, l1, pt),
                                             line_tangent_at(s, l2, pt)));
            return LinesIntersect{pt, ang};
        }
        case Kind::Hyperbolic: {
            Vec3 n1 = line_normal(s, l1), n2 = line_normal(s, l2);
            double g = -s.form(n1, n2);  // Gram value of the unit spacelike normals
            double k = std::abs(g);
            if (std::abs(k - 1.0) <= tol) {
                // Boundary window: coincident if the normals are parallel.
                Vec3 dplus = n1 + n2, dminus = n1 - n2;
                if (std::min(norm(dplus), norm(dminus)) <= 1e-6) return LinesCoincident{};
                return LinesAsymptotic{};
            }
            if (k < 1.0) {
                Vec3 x = cross(lorentz_flip(n1), lorentz_flip(n2));
                Point pt = renormalize(s, x);
                double ang = acute(angle_between(s, pt, line_tangent_at(s, l1, pt),
                                                 line_tangent_at(s, l2, pt)));
                return LinesIntersect{pt, ang};
            }
            // Ultraparallel: the dual vector of the pair is the normal of the
            // common perpendicular geodesic; its meets with l1, l2 are the feet.
            Vec3 m = cross(lorentz_flip(n1), lorentz_flip(n2));
            Vec3 mu = m * (1.0 / std::sqrt(-s.form(m, m)));
            Point foot1 = renormalize(s, cross(lorentz_flip(mu), lorentz_flip(n1)));
            Point foot2 = renormalize(s, cross(lorentz_flip(mu), lorentz_flip(n2)));
            return LinesUltraparallel{foot1, foot2, distance(s, foot1, foot2)};
        }
    }
    return LinesCoincident{};
}

}  // namespace curvatura
