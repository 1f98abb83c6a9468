#include "curvatura/trig.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace curvatura {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp1(double x) { return std::clamp(x, -1.0, 1.0); }

void check_side(const SpaceForm& s, double x, const char* name) {
    if (!(x > 0) || !std::isfinite(x))
        throw DomainError(std::string(name) + " must be a positive finite length");
    if (s.kind == Kind::Spherical && !(x < kPi * s.radius))
        throw DomainError(std::string(name) + " must be < pi*R on the sphere");
}

}  // namespace

double Triangle::defect() const { return kPi - angle_sum(); }

void Triangle::validate(double tol) const {
    const SpaceForm& s = space;
    check_side(s, a, "a");
    check_side(s, b, "b");
    check_side(s, c, "c");
    for (double ang : {A, B, C})
        if (!(ang > 0 && ang < kPi)) throw DomainError("triangle angle out of (0, pi)");
    int sgn = s.curvature_sign();
    double sum = angle_sum() - kPi;
    if (sgn == 0 ? std::abs(sum) > 1e-6 : sgn * sum <= 0)
        throw DomainError("angle sum violates the space's trichotomy");
    // Law-of-cosines residual on the first side.
    double lhs, rhs;
    double R = s.radius;
    switch (s.kind) {
        case Kind::Euclidean:
            lhs = a * a;
            rhs = b * b + c * c - 2 * b * c * std::cos(A);
            break;
        case Kind::Spherical:
            lhs = std::cos(a / R);
            rhs = std::cos(b / R) * std::cos(c / R) + std::sin(b / R) * std::sin(c / R) * std::cos(A);
            break;
        case Kind::Hyperbolic:
            lhs = std::cosh(a / R);
            rhs = std::cosh(b / R) * std::cosh(c / R) - std::sinh(b / R) * std::sinh(c / R) * std::cos(A);
            break;
        default:
            return;
    }
    double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    if (std::abs(lhs - rhs) > tol * scale)
        throw DomainError("law-of-cosines residual exceeds tolerance");
}

double side_from_sas(const SpaceForm& s, double b, double c, double A) {
    check_side(s, b, "b");
    check_side(s, c, "c");
    if (!(A > 0 && A < kPi)) throw DomainError("included angle must lie in (0, pi)");
    double R = s.radius;
    switch (s.kind) {
        case Kind::Euclidean:
            return std::sqrt(std::max(0.0, b * b + c * c - 2 * b * c * std::cos(A)));
        case Kind::Spherical: {
            double ca = std::cos(b / R) * std::cos(c / R) +
                        std::sin(b / R) * std::sin(c / R) * std::cos(A);
            return R * std::acos(clamp1(ca));
        }
        case Kind::Hyperbolic: {
            double ca = std::cosh(b / R) * std::cosh(c / R) -
                        std::sinh(b / R) * std::sinh(c / R) * std::cos(A);
            return R * std::acosh(std::max(1.0, ca));
        }
    }
    return 0;
}

AngleTriple angles_from_sss(const SpaceForm& s, double a, double b, double c) {
    check_side(s, a, "a");
    check_side(s, b, "b");
    check_side(s, c, "c");
    if (!(a < b + c && b < a + c && c < a + b))
        throw NotATriangle("sides violate the strict triangle inequality");
    if (s.kind == Kind::Spherical && !(a + b + c < 2 * kPi * s.radius))
        throw NotATriangle("spherical perimeter must be < 2*pi*R");
    double R = s.radius;
    auto angle = [&](double x, double y, double z) {
        // angle opposite x from sides (x, y, z)
        switch (s.kind) {
            case Kind::Euclidean:
                return std::acos(clamp1((y * y + z * z - x * x) / (2 * y * z)));
            case Kind::Spherical:
                return std::acos(clamp1((std::cos(x / R) - std::cos(y / R) * std::cos(z / R)) /
                                        (std::sin(y / R) * std::sin(z / R))));
            case Kind::Hyperbolic:
                return std::acos(clamp1((std::cosh(y / R) * std::cosh(z / R) - std::cosh(x / R)) /
                                        (std::sinh(y / R) * std::sinh(z / R))));
        }
        return 0.0;
    };
    return AngleTriple{angle(a, b, c), angle(b, c, a), angle(c, a, b)};
}

Triangle triangle_from_sss(const SpaceForm& s, double a, double b, double c) {
    AngleTriple t = angles_from_sss(s, a, b, c);
    return Triangle{s, a, b, c, t.A, t.B, t.C};
}

Triangle triangle_from_sas(const SpaceForm& s, double b, double c, double A) {
    double a = side_from_sas(s, b, c, A);
    AngleTriple t = angles_from_sss(s, a, b, c);
    return Triangle{s, a, b, c, t.A, t.B, t.C};
}

double area_from_angles(const SpaceForm& s, double A, double B, double C) {
    for (double ang : {A, B, C})
        if (!(ang >= 0 && ang < kPi) || !std::isfinite(ang))
            throw UnrealizableAngles("each angle must lie in [0, pi)");
    double sum = A + B + C;
    double R2 = s.radius * s.radius;
    switch (s.kind) {
        case Kind::Euclidean:
            if (std::abs(sum - kPi) > 1e-9)
                throw UnrealizableAngles("Euclidean angle sum must equal pi");
            throw NotDeterminedByAngles(
                "Euclidean area is not a function of the angles (similar triangles share them)");
        case Kind::Spherical:
            if (!(sum > kPi && sum < 3 * kPi))
                throw UnrealizableAngles("spherical angle sum must lie in (pi, 3*pi)");
            return R2 * (sum - kPi);
        case Kind::Hyperbolic:
            if (!(sum < kPi))
                throw UnrealizableAngles("hyperbolic angle sum must be < pi");
            return R2 * (kPi - sum);
    }
    return 0;
}

double equilateral_angle_for_side(const SpaceForm& s, double side) {
    check_side(s, side, "side");
    if (s.kind == Kind::Euclidean) return kPi / 3;
    if (s.kind == Kind::Spherical && !(side < 2 * kPi * s.radius / 3))
        throw NotATriangle("spherical equilateral side must be < 2*pi*R/3");
    // Equilateral specialization of the law of cosines,
    //   cos(alpha) = cs(s/R) / (1 + cs(s/R)),
    // written through cs - 1 = -+2 sn(s/2R)^2 so tiny sides do not cancel.
    double half = side / (2 * s.radius);
    if (s.kind == Kind::Hyperbolic) {
        double m = 2 * std::sinh(half) * std::sinh(half);  // cosh - 1
        return std::acos((1 + m) / (2 + m));
    }
    double m = 2 * std::sin(half) * std::sin(half);  // 1 - cos
    return std::acos(clamp1((1 - m) / (2 - m)));
}

double equilateral_side_closed_form(const SpaceForm& s, double alpha) {
    double ca = std::cos(alpha);
    if (s.kind == Kind::Hyperbolic) return s.radius * std::acosh(ca / (1 - ca));
    if (s.kind == Kind::Spherical) return s.radius * std::acos(ca / (1 - ca));
    throw NoCanonicalUnit("Euclidean geometry has no canonical length unit");
}

double equilateral_side_for_angle(const SpaceForm& s, double alpha) {
    if (s.kind == Kind::Euclidean)
        throw NoCanonicalUnit("Euclidean geometry has no canonical length unit");
    const bool hyp = s.kind == Kind::Hyperbolic;
    if (hyp && !(alpha > 0 && alpha < kPi / 3))
        throw OutOfRange("hyperbolic equilateral angle must lie in (0, pi/3)");
    if (!hyp && !(alpha > kPi / 3 && alpha < kPi))
        throw OutOfRange("spherical equilateral angle must lie in (pi/3, pi)");

    // alpha(side) is strictly decreasing (hyperbolic) / increasing (spherical);
    // bracket then bisect.  The closed form is only a cross-check.
    double lo = 0.0;  // angle(0+) -> pi/3 in both models
    double hi;
    if (hyp) {
        hi = s.radius;
        while (equilateral_angle_for_side(s, hi) > alpha) {
            hi *= 2;
            if (hi > 1e4 * s.radius) throw OutOfRange("angle too close to 0 to bracket");
        }
    } else {
        hi = 2 * kPi * s.radius / 3;  // angle -> pi as side -> 2*pi*R/3
    }
    // f(side) = angle(side) - alpha has sign(+) at lo in both models after
    // orienting by the monotonicity direction.
    auto above = [&](double side) {
        double ang = (side == 0.0) ? kPi / 3 : equilateral_angle_for_side(s, side);
        return hyp ? ang > alpha : ang < alpha;
    };
    for (int i = 0; i < 200 && (hi - lo) > 1e-12 * std::max(1.0, hi); ++i) {
        double mid = 0.5 * (lo + hi);
        (above(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

MedianSplit equilateral_median_split(const SpaceForm& s, double side) {
    check_side(s, side, "side");
    if (s.kind == Kind::Spherical && !(side < 2 * kPi * s.radius / 3))
        throw DomainError("spherical equilateral side must be < 2*pi*R/3");

    // Build the triangle in the model.
    double alpha = (s.kind == Kind::Euclidean) ? kPi / 3 : equilateral_angle_for_side(s, side);
    Point A = origin(s);
    TangentDir u = base_dir(s);
    Point B = exp_map(s, u, side);
    TangentDir u2 = TangentDir{A, rotate_tangent(s, A, u.vec, alpha)};
    Point C = exp_map(s, u2, side);

    Point F = midpoint(s, B, C);
    // Perpendicular bisectors of AB and AC.
    Line bis_ab = perpendicular_at(s, line_through(s, A, B), midpoint(s, A, B));
    Line bis_ac = perpendicular_at(s, line_through(s, A, C), midpoint(s, A, C));
    LinePairClass pc = classify_line_pair(s, bis_ab, bis_ac);
    const auto* hit = std::get_if<LinesIntersect>(&pc);
    if (!hit) throw NoCircumcenter("perpendicular bisectors of the sides do not meet");
    Point D = hit->point;
    if (s.kind == Kind::Spherical) {
        // Of the two antipodal candidates keep the near circumcenter.
        Point D2{-D.coords};
        if (distance(s, D2, A) < distance(s, D, A)) D = D2;
    }
    double rA = distance(s, D, A), rB = distance(s, D, B), rC = distance(s, D, C);
    double scale = std::max(1.0, rA);
    if (std::abs(rA - rB) > 1e-9 * scale || std::abs(rA - rC) > 1e-9 * scale)
        throw NoCircumcenter("computed center is not equidistant from the vertices");
    return MedianSplit{distance(s, A, F), distance(s, D, F)};
}

}  // namespace curvatura
