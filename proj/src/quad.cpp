#include "curvatura/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace curvatura {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_positive(double x, const char* name) {
    if (!(x > 0) || !std::isfinite(x))
        throw DomainError(std::string(name) + " must be a positive finite length");
}

void check_quarter(const SpaceForm& s, double x, const char* name) {
    if (s.kind == Kind::Spherical && !(x < kPi * s.radius / 2))
        throw DomainError(std::string(name) + " must be < pi*R/2 on the sphere");
}

double right_angle_err(const SpaceForm& s, const Point& v, const Point& p, const Point& q) {
    return std::abs(angle_at(s, v, p, q) - kPi / 2);
}

}  // namespace

void LambertQuad::validate(double tol) const {
    const SpaceForm& s = space;
    if (right_angle_err(s, A, D, B) > tol || right_angle_err(s, B, A, C) > tol ||
        right_angle_err(s, C, B, D) > tol)
        throw DomainError("Lambert quadrilateral corner is not right");
    int sgn = s.curvature_sign();
    double dev = phi - kPi / 2;
    if (sgn == 0 ? std::abs(dev) > tol : sgn * dev <= 0)
        throw DomainError("fourth angle violates the space's trichotomy");
    if (sgn < 0 && !(d > b && c > a))
        throw DomainError("sides adjacent to the acute angle must exceed their opposites");
    if (sgn > 0 && !(d < b && c < a))
        throw DomainError("sides adjacent to the obtuse angle must be shorter than their opposites");
}

void SaccheriQuad::validate(double tol) const {
    const SpaceForm& s = space;
    double a0 = angle_at(s, S0, P0, S1);
    double a1 = angle_at(s, S1, P1, S0);
    if (std::abs(a0 - a1) > tol) throw DomainError("summit angles differ");
    int sgn = s.curvature_sign();
    double dev = summit_angle - kPi / 2;
    if (sgn == 0 ? std::abs(dev) > tol : sgn * dev <= 0)
        throw DomainError("summit angle violates the space's trichotomy");
}

LambertQuad lambert_quadrilateral(const SpaceForm& s, double a, double b) {
    check_positive(a, "a");
    check_positive(b, "b");
    check_quarter(s, a, "a");
    check_quarter(s, b, "b");

    Point A = origin(s);
    TangentDir u = base_dir(s);
    Line base = line_from(s, A, u.vec);
    Point B = exp_map(s, u, a);

    // Erect the leg at B on the +rotation side of the base direction.
    Vec3 up_b = rotate90(s, B, line_tangent_at(s, base, B));
    Point C = exp_map(s, TangentDir{B, up_b}, b);
    Line side_bc = line_through(s, B, C);

    Line closing_a = perpendicular_at(s, base, A);
    Line closing_c = perpendicular_at(s, side_bc, C);
    LinePairClass pc = classify_line_pair(s, closing_a, closing_c);
    const auto* hit = std::get_if<LinesIntersect>(&pc);
    if (!hit) {
        double k = std::cosh(a / s.radius) * std::tanh(b / s.radius);
        throw NoFourthVertex(pc, "closing perpendiculars do not meet (cosh(a/R)*tanh(b/R) = " +
                                     std::to_string(k) + " >= 1)");
    }
    Point D = hit->point;
    if (s.kind == Kind::Spherical) {
        Point D2{-D.coords};
        // Keep the candidate on the quadrilateral's side.
        if (dot(D2.coords, A.coords + C.coords) > dot(D.coords, A.coords + C.coords)) D = D2;
    }

    LambertQuad q;
    q.space = s;
    q.A = A;
    q.B = B;
    q.C = C;
    q.D = D;
    q.a = distance(s, A, B);
    q.b = distance(s, B, C);
    q.c = distance(s, C, D);
    q.d = distance(s, D, A);
    q.phi = angle_at(s, D, A, C);
    q.validate(std::max(s.tolerance, 1e-9));
    return q;
}

SaccheriQuad saccheri_quadrilateral(const SpaceForm& s, double base_len, double leg) {
    check_positive(base_len, "base");
    check_positive(leg, "leg");
    check_quarter(s, base_len, "base");
    check_quarter(s, leg, "leg");

    Point P0 = origin(s);
    TangentDir u = base_dir(s);
    Line base = line_from(s, P0, u.vec);
    Point P1 = exp_map(s, u, base_len);

    // Erect both legs on the same side of the base.
    Vec3 up0 = rotate90(s, P0, line_tangent_at(s, base, P0));
    Vec3 up1 = rotate90(s, P1, line_tangent_at(s, base, P1));
    Point S0 = exp_map(s, TangentDir{P0, up0}, leg);
    Point S1 = exp_map(s, TangentDir{P1, up1}, leg);

    SaccheriQuad q;
    q.space = s;
    q.base = base_len;
    q.leg = leg;
    q.P0 = P0;
    q.P1 = P1;
    q.S0 = S0;
    q.S1 = S1;
    q.summit = distance(s, S0, S1);
    double a0 = angle_at(s, S0, P0, S1);
    double a1 = angle_at(s, S1, P1, S0);
    q.summit_angle = 0.5 * (a0 + a1);
    if (std::abs(a0 - a1) > std::max(s.tolerance, 1e-9))
        throw DomainError("summit angles of the constructed quadrilateral differ");
    q.validate(std::max(s.tolerance, 1e-9));
    return q;
}

FoldResult fold_lambert(const SpaceForm& s, double base_len, double leg) {
    SaccheriQuad sac = saccheri_quadrilateral(s, base_len, leg);

    // Cut along the perpendicular bisector of the base: it passes through the
    // base midpoint M and the summit midpoint N, meeting both at right angles.
    Point M = midpoint(s, sac.P0, sac.P1);
    Point N = midpoint(s, sac.S0, sac.S1);
    double h = distance(s, M, N);

    // Rebuild the half-quadrilateral from scratch: right angles sit at the
    // base end, the base midpoint and the summit midpoint, so the Lambert
    // parameters are a = base/2 and b = the midline height h; the leg comes
    // back as side d and the half summit as side c.
    LambertQuad lam = lambert_quadrilateral(s, base_len / 2, h);

    double tol = 1e-10 * std::max(1.0, sac.summit);
    if (std::abs(sac.summit - 2 * lam.c) > tol)
        throw DomainError("fold correspondence failed: summit != 2c");
    if (std::abs(sac.summit_angle - lam.phi) > 1e-10)
        throw DomainError("fold correspondence failed: summit angle != phi");
    if (std::abs(lam.d - leg) > 1e-9 * std::max(1.0, leg))
        throw DomainError("fold correspondence failed: d != leg");
    return FoldResult{sac, lam};
}

std::vector<double> geometric_grid(double t0, int count) {
    std::vector<double> ts;
    ts.reserve(count);
    double t = t0;
    for (int i = 0; i < count; ++i, t *= 2) ts.push_back(t);
    return ts;
}

PerpProfile perpendicular_profile(const SpaceForm& s, double h0,
                                  const std::vector<double>& t_values) {
    check_positive(h0, "h0");
    check_quarter(s, h0, "h0");
    double tmax = kPi * s.radius / 2;
    for (double t : t_values) {
        if (!(t >= 0) || !std::isfinite(t)) throw DomainError("profile t values must be >= 0");
        if (s.kind == Kind::Spherical && t > tmax + 1e-12)
            throw DomainError("spherical profile t must be <= pi*R/2 (lines meet there)");
    }

    for (size_t i = 1; i < t_values.size(); ++i)
        if (!(t_values[i] > t_values[i - 1]))
            throw DomainError("profile t grid must be strictly increasing");

    Point A = origin(s);
    TangentDir u = base_dir(s);
    Line base = line_from(s, A, u.vec);
    Vec3 up = rotate90(s, A, u.vec);
    TangentDir riser{A, up};
    Point B = exp_map(s, riser, h0);
    // Upper line through B, perpendicular to AB.  Rotating the riser tangent a
    // quarter turn lands on the backward side (J^2 = -1), so negate to march
    // in the same sense as the base direction.
    Vec3 riser_at_b = exp_map_tangent(s, riser, h0).vec;
    TangentDir fwd{B, -rotate90(s, B, riser_at_b)};

    PerpProfile out;
    out.space = s;
    out.h0 = h0;
    out.samples.reserve(t_values.size());
    for (double t : t_values) {
        Point P = exp_map(s, fwd, t);
        FootResult fr = foot_of_perpendicular(s, P, base);
        Vec3 backward = -exp_map_tangent(s, fwd, t).vec;
        double phi;
        double scale = (s.kind == Kind::Euclidean) ? 1.0 : s.radius;
        if (s.kind == Kind::Hyperbolic && P.coords[0] > 1e6 * s.radius) {
            // Beyond double precision for tangent subtraction; fall back to the
            // quadrilateral relation cos(phi) = sinh(h0/R) sinh(u/R) with u the
            // foot's arc position, which stays conditioned (u tends to the
            // finite threshold length).
            double u = distance(s, A, fr.foot) / s.radius;
            phi = std::acos(std::clamp(std::sinh(h0 / s.radius) * std::sinh(u), -1.0, 1.0));
        } else if (fr.h > 1e-9 * scale) {
            phi = angle_between(s, P, backward, direction(s, P, fr.foot).vec);
        } else {
            // The sample sits on the base line (spherical meet at t = pi*R/2):
            // continue phi as the obtuse angle against the base line itself.
            Vec3 w = line_tangent_at(s, base, P);
            double raw = angle_between(s, P, backward, w);
            phi = std::max(raw, kPi - raw);
        }
        out.samples.push_back(ProfileSample{t, fr.h, phi});
    }
    return out;
}

bool threshold_predicate(const SpaceForm& s, double h0, double t) {
    Point A = origin(s);
    TangentDir u = base_dir(s);
    Line base_ae = line_from(s, A, u.vec);
    Vec3 up = rotate90(s, A, u.vec);
    TangentDir riser{A, up};
    Point B = exp_map(s, riser, h0);
    Vec3 riser_at_b = exp_map_tangent(s, riser, h0).vec;
    Line line_bh = line_from(s, B, -rotate90(s, B, riser_at_b));

    Point Pt = exp_map(s, u, t);
    Line erected = perpendicular_at(s, base_ae, Pt);
    return std::holds_alternative<LinesIntersect>(classify_line_pair(s, erected, line_bh));
}

double intersection_threshold(const SpaceForm& s, double h0) {
    check_positive(h0, "h0");
    if (s.kind != Kind::Hyperbolic) {
        // Euclidean: the erected perpendicular is parallel to BH for every t;
        // spherical: it always meets BH.  Both get the +infinity sentinel.
        check_quarter(s, h0, "h0");
        return std::numeric_limits<double>::infinity();
    }
    double lo = 0.0, hi = s.radius;
    while (threshold_predicate(s, h0, hi)) {
        lo = hi;
        hi *= 2;
        if (hi > 1e6 * s.radius)
            throw DomainError("threshold bracket failed; h0 too small to resolve");
    }
    while (hi - lo > 1e-11 * std::max(1.0, hi)) {
        double mid = 0.5 * (lo + hi);
        (threshold_predicate(s, h0, mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace curvatura
