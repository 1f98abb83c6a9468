#pragma once

#include <array>
#include <cmath>

namespace curvatura {

// Plain 3-vector used for embedding coordinates.  Euclidean points are
// stored homogeneously as (1, x, y) so that all three models share the
// same storage and the same rigid-motion machinery.
struct Vec3 {
    double v[3]{0, 0, 0};

    Vec3() = default;
    Vec3(double a, double b, double c) : v{a, b, c} {}

    double operator[](int i) const { return v[i]; }
    double& operator[](int i) { return v[i]; }

    Vec3 operator+(const Vec3& o) const { return {v[0] + o.v[0], v[1] + o.v[1], v[2] + o.v[2]}; }
    Vec3 operator-(const Vec3& o) const { return {v[0] - o.v[0], v[1] - o.v[1], v[2] - o.v[2]}; }
    Vec3 operator*(double s) const { return {v[0] * s, v[1] * s, v[2] * s}; }
    Vec3 operator-() const { return {-v[0], -v[1], -v[2]}; }
};

inline Vec3 operator*(double s, const Vec3& a) { return a * s; }

inline double dot(const Vec3& a, const Vec3& b) {
    return a.v[0] * b.v[0] + a.v[1] * b.v[1] + a.v[2] * b.v[2];
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.v[1] * b.v[2] - a.v[2] * b.v[1],
            a.v[2] * b.v[0] - a.v[0] * b.v[2],
            a.v[0] * b.v[1] - a.v[1] * b.v[0]};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// Sign flip of the spatial components; conjugation by this matrix turns the
// Euclidean inner product into the Lorentzian one used by the hyperboloid.
inline Vec3 lorentz_flip(const Vec3& a) { return {a.v[0], -a.v[1], -a.v[2]}; }

}  // namespace curvatura
