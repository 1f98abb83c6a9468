#include "curvatura/sampling.hpp"

#include <cmath>

namespace curvatura {

namespace {

constexpr double kPi = 3.14159265358979323846;

uint64_t fnv1a(std::string_view s, uint64_t h = 0xcbf29ce484222325ULL) {
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

uint64_t derive_seed(uint64_t seed, std::string_view suite, std::string_view space) {
    uint64_t h = fnv1a(space, fnv1a(suite));
    // mix the user seed through one splitmix step
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (h | 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Point random_point(const SpaceForm& s, Rng& rng, double spread) {
    double angle = rng.uniform(0, 2 * kPi);
    double r = spread * std::sqrt(rng.uniform());  // area-uniform-ish
    Vec3 dir = rotate_tangent(s, origin(s), base_dir(s).vec, angle);
    return exp_map(s, TangentDir{origin(s), dir}, r);
}

Vec3 random_tangent(const SpaceForm& s, const Point& p, Rng& rng) {
    // Build one tangent by transporting the base direction, then spin it.
    Vec3 u;
    if (s.kind == Kind::Euclidean) {
        u = Vec3{0, 1, 0};
    } else {
        // Gram-Schmidt a coordinate axis against p.
        double R2 = s.radius * s.radius;
        Vec3 axis{0, 1, 0};
        Vec3 w = axis - p.coords * (s.form(p.coords, axis) / R2);
        double n2 = (s.kind == Kind::Hyperbolic) ? -s.form(w, w) : dot(w, w);
        if (n2 < 1e-12 * R2) {
            axis = Vec3{0, 0, 1};
            w = axis - p.coords * (s.form(p.coords, axis) / R2);
            n2 = (s.kind == Kind::Hyperbolic) ? -s.form(w, w) : dot(w, w);
        }
        u = w * (1.0 / std::sqrt(n2));
    }
    return rotate_tangent(s, p, u, rng.uniform(0, 2 * kPi));
}

ModelTriangle random_triangle(const SpaceForm& s, Rng& rng) {
    const double R = s.radius;
    const bool sph = s.kind == Kind::Spherical;
    const double spread = sph ? 0.25 * R : 0.8 * R;
    const double lmin = 0.15 * R;
    const double lmax = sph ? 1.0 * R : 2.0 * R;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Point A = random_point(s, rng, spread);
        Vec3 u1 = random_tangent(s, A, rng);
        double ang = rng.uniform(0.25, kPi - 0.25);
        Vec3 u2 = rotate_tangent(s, A, u1, ang);
        Point B = exp_map(s, TangentDir{A, u1}, rng.uniform(lmin, lmax));
        Point C = exp_map(s, TangentDir{A, u2}, rng.uniform(lmin, lmax));
        double ab = distance(s, A, B), ac = distance(s, A, C), bc = distance(s, B, C);
        if (bc < lmin * 0.3) continue;  // too thin
        Triangle t;
        t.space = s;
        t.a = bc;  // opposite A
        t.b = ac;
        t.c = ab;
        t.A = angle_at(s, A, B, C);
        t.B = angle_at(s, B, C, A);
        t.C = angle_at(s, C, A, B);
        if (t.A < 0.05 || t.B < 0.05 || t.C < 0.05) continue;
        return ModelTriangle{A, B, C, t};
    }
    throw DomainError("failed to sample a non-degenerate triangle");
}

Point Isometry::apply(const SpaceForm& s, const Point& p) const {
    Vec3 r;
    for (int i = 0; i < 3; ++i)
        r[i] = m[i][0] * p.coords[0] + m[i][1] * p.coords[1] + m[i][2] * p.coords[2];
    return renormalize(s, r);
}

Isometry random_isometry(const SpaceForm& s, Rng& rng) {
    auto mat_mul = [](const Isometry& a, const Isometry& b) {
        Isometry c{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double acc = 0;
                for (int k = 0; k < 3; ++k) acc += a.m[i][k] * b.m[k][j];
                c.m[i][j] = acc;
            }
        return c;
    };
    double t1 = rng.uniform(0, 2 * kPi);
    double t2 = rng.uniform(0, 2 * kPi);
    switch (s.kind) {
        case Kind::Euclidean: {
            // rotation by t1 plus translation
            double tx = rng.uniform(-2, 2), ty = rng.uniform(-2, 2);
            Isometry iso{{{{1, 0, 0},
                           {tx, std::cos(t1), -std::sin(t1)},
                           {ty, std::sin(t1), std::cos(t1)}}}};
            return iso;
        }
        case Kind::Spherical: {
            // product of rotations about the x0 and x1 axes
            Isometry r0{{{{1, 0, 0}, {0, std::cos(t1), -std::sin(t1)}, {0, std::sin(t1), std::cos(t1)}}}};
            Isometry r1{{{{std::cos(t2), 0, std::sin(t2)}, {0, 1, 0}, {-std::sin(t2), 0, std::cos(t2)}}}};
            return mat_mul(r0, r1);
        }
        case Kind::Hyperbolic: {
            // rotation * boost * rotation (moderate rapidity keeps doubles honest)
            double xi = rng.uniform(-1.5, 1.5);
            Isometry r0{{{{1, 0, 0}, {0, std::cos(t1), -std::sin(t1)}, {0, std::sin(t1), std::cos(t1)}}}};
            Isometry bo{{{{std::cosh(xi), std::sinh(xi), 0}, {std::sinh(xi), std::cosh(xi), 0}, {0, 0, 1}}}};
            Isometry r1{{{{1, 0, 0}, {0, std::cos(t2), -std::sin(t2)}, {0, std::sin(t2), std::cos(t2)}}}};
            return mat_mul(mat_mul(r0, bo), r1);
        }
    }
    return Isometry{{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
}

}  // namespace curvatura
