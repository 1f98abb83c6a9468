#include "curvatura/oracles.hpp"

#include <cmath>

namespace curvatura {

namespace {

// 8-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kNodes[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                              -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                              0.7966664774136267,  0.9602898564975363};
constexpr double kWeights[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                0.2223810344533745, 0.1012285362903763};

}  // namespace

double ray_distance_to_line(const SpaceForm& s, const Point& A, const Vec3& ray, const Line& bc) {
    Line l = line_from(s, A, ray);
    LinePairClass pc = classify_line_pair(s, l, bc);
    const auto* hit = std::get_if<LinesIntersect>(&pc);
    if (!hit) throw DomainError("interior ray does not meet the opposite side");
    Point x = hit->point;
    if (s.kind == Kind::Spherical) {
        // pick the representative the ray actually reaches
        Vec3 to_x = direction(s, A, x).vec;
        double fwd = dot(to_x, ray);
        if (fwd < 0) x = Point{-x.coords};
    }
    return distance(s, A, x);
}

double triangle_area_by_quadrature(const SpaceForm& s, const Point& A, const Point& B,
                                   const Point& C, int panels) {
    if (s.kind == Kind::Euclidean)
        throw DomainError("quadrature oracle is defined for the curved models only");
    const double R = s.radius;
    double angle_a = angle_at(s, A, B, C);
    Vec3 toward_b = direction(s, A, B).vec;
    Vec3 toward_c = direction(s, A, C).vec;
    // Rotation sense from B toward C.
    double plus = angle_between(s, A, rotate_tangent(s, A, toward_b, angle_a), toward_c);
    double sense = (plus < 1e-6) ? 1.0 : -1.0;
    Line bc = line_through(s, B, C);

    double acc = 0;
    for (int p = 0; p < panels; ++p) {
        double lo = angle_a * p / panels, hi = angle_a * (p + 1) / panels;
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (int k = 0; k < 8; ++k) {
            double theta = mid + half * kNodes[k];
            Vec3 ray = rotate_tangent(s, A, toward_b, sense * theta);
            double rho = ray_distance_to_line(s, A, ray, bc);
            double g = (s.kind == Kind::Spherical) ? 1.0 - std::cos(rho / R)
                                                   : std::cosh(rho / R) - 1.0;
            acc += kWeights[k] * half * g;
        }
    }
    return R * R * acc;
}

}  // namespace curvatura
