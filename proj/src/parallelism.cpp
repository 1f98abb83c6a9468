#include "curvatura/parallelism.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace curvatura {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Perturbations injected at one chain vertex get stretched by roughly e^(s/R)
// per subsequent step (geodesic divergence), so validation bounds grow
// geometrically with that base along the chain.
double chain_growth(double s_hat, int steps) {
    double base = std::max(4.0, 2.0 * std::exp(std::min(s_hat, 25.0)));
    return std::min(1e15, std::pow(base, steps));
}

}  // namespace

bool parallelism_predicate(const SpaceForm& s, double p, double theta) {
    Point F = origin(s);
    TangentDir along = base_dir(s);
    Line base = line_from(s, F, along.vec);
    TangentDir riser{F, rotate90(s, F, along.vec)};
    Point G = exp_map(s, riser, p);
    Vec3 down = -exp_map_tangent(s, riser, p).vec;
    Vec3 ray = rotate_tangent(s, G, down, theta);
    Line l = line_from(s, G, ray);
    return std::holds_alternative<LinesIntersect>(classify_line_pair(s, l, base));
}

double angle_of_parallelism(const SpaceForm& s, double p) {
    if (!(p >= 0) || !std::isfinite(p)) throw DomainError("p must be a finite length >= 0");
    if (s.kind == Kind::Spherical)
        throw NotApplicable("no angle of parallelism on the sphere: great circles always meet");
    if (s.kind == Kind::Euclidean) return kPi / 2;  // supremum, attained in the limit
    if (p == 0) return kPi / 2;                     // G lies on the base line

    double lo = 0.0, hi = kPi / 2;
    for (int i = 0; i < 80 && hi - lo > 1e-13; ++i) {
        double mid = 0.5 * (lo + hi);
        (parallelism_predicate(s, p, mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double approach_angle(const SpaceForm& s, double p, double dist) {
    if (s.kind == Kind::Spherical) throw NotApplicable("no angle of parallelism on the sphere");
    Point F = origin(s);
    TangentDir along = base_dir(s);
    TangentDir riser{F, rotate90(s, F, along.vec)};
    Point G = exp_map(s, riser, p);
    Point A = exp_map(s, along, dist);
    return angle_at(s, G, A, F);
}

void PolygonChain::validate(double tol) const {
    const SpaceForm& sp = space;
    double shat = std::max(s / sp.radius, 1e-3);
    double lever = std::min(1.0, std::sinh(shat));
    for (int i = 0; i + 1 < static_cast<int>(vertices.size()); ++i) {
        double noise = chain_growth(shat, i + 1) *
                       (metric_noise(sp, vertices[i]) + metric_noise(sp, vertices[i + 1])) / lever;
        if (noise > 0.05 * std::max(1.0, s)) continue;  // beyond measurable range
        double bound = std::max(tol * std::max(1.0, s), noise);
        if (std::abs(distance(sp, vertices[i], vertices[i + 1]) - s) > bound)
            throw DomainError("chain segment length drifted");
    }
    for (int i = 1; i + 1 < static_cast<int>(vertices.size()); ++i) {
        double noise = chain_growth(shat, i + 1) *
                       (metric_noise(sp, vertices[i - 1]) + metric_noise(sp, vertices[i]) +
                        metric_noise(sp, vertices[i + 1])) /
                       (lever * std::max(s, 1e-12));
        if (noise > 0.05) continue;
        double bound = std::max(tol, noise);
        if (std::abs(angle_at(sp, vertices[i], vertices[i - 1], vertices[i + 1]) - theta) > bound)
            throw DomainError("chain junction angle drifted");
    }
}

PolygonChain build_chain(const SpaceForm& s, double seg, double theta, int n) {
    if (!(seg > 0) || !std::isfinite(seg)) throw DomainError("segment length must be > 0");
    if (s.kind == Kind::Spherical && !(seg < kPi * s.radius))
        throw DomainError("spherical segment must be < pi*R");
    if (!(theta > 0 && theta < kPi)) throw DomainError("junction angle must lie in (0, pi)");
    if (n < 3) throw DomainError("chain needs at least 3 segments");

    PolygonChain chain;
    chain.space = s;
    chain.s = seg;
    chain.theta = theta;
    chain.n = n;
    chain.vertices.reserve(n + 1);

    Point v = origin(s);
    Vec3 heading = base_dir(s).vec;
    chain.vertices.push_back(v);
    for (int i = 0; i < n; ++i) {
        TangentDir step{v, heading};
        Point next = exp_map(s, step, seg);
        Vec3 incoming = exp_map_tangent(s, step, seg).vec;
        v = next;
        // Interior angle theta between the back-direction and the new heading,
        // always turning to the same side.
        heading = rotate_tangent(s, v, -incoming, theta);
        chain.vertices.push_back(v);
    }
    chain.validate(1e-10);
    return chain;
}

ChainCenter classify_chain_center(const PolygonChain& chain) {
    const SpaceForm& s = chain.space;
    if (chain.n < 3 || chain.vertices.size() < 4)
        throw DomainError("chain center needs at least 3 segments");
    if (std::abs(chain.theta - kPi) < 1e-12)
        throw DegenerateChain("collinear chain has no center");

    auto bisector = [&](const Point& p, const Point& q) {
        return perpendicular_at(s, line_through(s, p, q), midpoint(s, p, q));
    };
    Line b1 = bisector(chain.vertices[0], chain.vertices[1]);
    Line b2 = bisector(chain.vertices[1], chain.vertices[2]);
    LinePairClass pc = classify_line_pair(s, b1, b2);

    if (const auto* hit = std::get_if<LinesIntersect>(&pc)) {
        Point center = hit->point;
        if (s.kind == Kind::Spherical) {
            Point c2{-center.coords};
            if (distance(s, c2, chain.vertices[0]) < distance(s, center, chain.vertices[0]))
                center = c2;
        }
        double r = distance(s, center, chain.vertices[0]);
        double shat = chain.s / s.radius;
        for (size_t i = 0; i < chain.vertices.size(); ++i) {
            const Point& v = chain.vertices[i];
            double grow = chain_growth(shat, static_cast<int>(i) + 1);
            double bound = std::max(1e-9 * std::max(1.0, r), grow * metric_noise(s, v));
            if (std::abs(distance(s, center, v) - r) > bound)
                throw DomainError("chain vertices are not equidistant from the bisector meet");
        }
        return ChainCircle{center, r};
    }
    if (const auto* up = std::get_if<LinesUltraparallel>(&pc)) {
        // The bisectors' common perpendicular is the translation axis; the
        // vertices lie on an equidistant curve about it.  Close to the
        // parabolic boundary the axis itself is determined only to
        // noise/gap^2, so the verification grades its bound accordingly.
        Line axis = line_through(s, up->foot1, up->foot2);
        double ghat = std::max(up->gap / s.radius, 1e-7);
        double axis_noise = 1e-13 * s.radius / (ghat * ghat);
        double h = foot_of_perpendicular(s, chain.vertices[0], axis).h;
        double shat = chain.s / s.radius;
        for (size_t i = 0; i < chain.vertices.size(); ++i) {
            const Point& v = chain.vertices[i];
            double grow = chain_growth(shat, static_cast<int>(i) + 1);
            double bound = std::max(1e-9 * std::max(1.0, h),
                                    grow * metric_noise(s, v) + axis_noise);
            if (std::abs(foot_of_perpendicular(s, v, axis).h - h) > bound)
                throw DomainError("chain vertices are not equidistant from the axis");
        }
        return ChainEquidistant{axis};
    }
    if (std::holds_alternative<LinesCoincident>(pc))
        throw DegenerateChain("segment bisectors coincide");
    return ChainHorocycle{};
}

}  // namespace curvatura
