#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "curvatura/core.hpp"
#include "curvatura/trig.hpp"

namespace curvatura {

// splitmix64: small, deterministic across platforms, plenty for sampling.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
    }

private:
    uint64_t state_;
};

// Stream derivation so that every (suite, space) pair owns an independent
// generator: results never depend on evaluation order.
uint64_t derive_seed(uint64_t seed, std::string_view suite, std::string_view space);

// Random point at distance <= spread from the canonical origin.
Point random_point(const SpaceForm& s, Rng& rng, double spread);

// Random unit tangent at p.
Vec3 random_tangent(const SpaceForm& s, const Point& p, Rng& rng);

// Non-degenerate triangle built in the model: vertex, two rays, measured
// sides.  Spherical output stays inside an open hemisphere.
struct ModelTriangle {
    Point A, B, C;
    Triangle measured;  // sides and angles measured back from the vertices
};
ModelTriangle random_triangle(const SpaceForm& s, Rng& rng);

// Random model isometry (orthogonal / Lorentz-orthochronous / planar rigid),
// applied as a matrix on embedding coordinates.
struct Isometry {
    std::array<std::array<double, 3>, 3> m;
    Point apply(const SpaceForm& s, const Point& p) const;
};
Isometry random_isometry(const SpaceForm& s, Rng& rng);

}  // namespace curvatura
