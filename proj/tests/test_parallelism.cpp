#include <doctest.h>

#include <cmath>

#include "curvatura/parallelism.hpp"
#include "curvatura/quad.hpp"
#include "curvatura/sampling.hpp"

using namespace curvatura;

namespace {
constexpr double kPi = 3.14159265358979323846;

const SpaceForm kSph = SpaceForm::spherical(1.0);
const SpaceForm kEuc = SpaceForm::euclidean();
const SpaceForm kHyp = SpaceForm::hyperbolic(1.0);
}  // namespace

TEST_CASE("angle of parallelism: endpoints and pinned value") {
    CHECK(angle_of_parallelism(kHyp, 0.0) == kPi / 2);  // exact
    CHECK(angle_of_parallelism(kEuc, 2.0) == kPi / 2);
    CHECK_THROWS_AS((void)angle_of_parallelism(kSph, 1.0), NotApplicable);

    double p1 = angle_of_parallelism(kHyp, 1.0);
    CHECK(p1 == doctest::Approx(0.70502684355523804).epsilon(1e-9));  // 2 atan(1/e)
    CHECK(p1 == doctest::Approx(2 * std::atan(std::exp(-1.0))).epsilon(1e-9));
}

TEST_CASE("angle of parallelism: closed form across a range") {
    for (double p : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        double got = angle_of_parallelism(kHyp, p);
        CHECK(std::abs(got - 2 * std::atan(std::exp(-p))) < 1e-7);
    }
    // monotone decrease toward 0 (p <= 8 keeps the embedding well conditioned)
    double prev = kPi / 2;
    for (int i = 1; i <= 25; ++i) {
        double got = angle_of_parallelism(kHyp, 0.32 * i);
        CHECK(got < prev);
        prev = got;
    }
    CHECK(angle_of_parallelism(kHyp, 8.0) < 1e-3);
}

TEST_CASE("angle of parallelism: radius scaling") {
    SpaceForm hyp2 = SpaceForm::hyperbolic(2.0);
    CHECK(angle_of_parallelism(hyp2, 2.0) ==
          doctest::Approx(2 * std::atan(std::exp(-1.0))).epsilon(1e-7));
}

TEST_CASE("measured angles approach the parallelism angle from below") {
    double p = 1.0;
    double limit = angle_of_parallelism(kHyp, p);
    double prev = 0;
    for (double dist : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0}) {
        double ang = approach_angle(kHyp, p, dist);
        CHECK(ang > prev);
        // the computed supremum sits on the boundary-detection window
        CHECK(ang < limit + 1e-8);
        prev = ang;
    }
    CHECK(limit - prev < 1e-3);

    // Euclidean angles approach the right angle instead
    CHECK(kPi / 2 - approach_angle(kEuc, 1.0, 500.0) < 1e-2);
}

TEST_CASE("parallelism threshold consistency with the quad module") {
    // tanh(t*) cosh(h0) = 1 ties the two-perpendiculars threshold to the
    // asymptotic direction at G.
    for (double h0 : {0.3, 0.7, 1.0, 1.6}) {
        double tstar = intersection_threshold(kHyp, h0);
        CHECK(std::abs(std::tanh(tstar) * std::cosh(h0) - 1.0) < 1e-8);
    }
    // at the converged threshold the closing pair sits in the asymptotic band
    Point A = origin(kHyp);
    TangentDir along = base_dir(kHyp);
    Line base_ae = line_from(kHyp, A, along.vec);
    Vec3 up = rotate90(kHyp, A, along.vec);
    TangentDir riser{A, up};
    Point B = exp_map(kHyp, riser, 1.0);
    Line line_bh = line_from(kHyp, B, -rotate90(kHyp, B, exp_map_tangent(kHyp, riser, 1.0).vec));
    // the detection window has width ~tol/kappa' in t; probe its center
    double tstar = intersection_threshold(kHyp, 1.0);
    double half_band = 1e-9 / (std::cosh(tstar) * std::sinh(1.0));
    Line erected = perpendicular_at(kHyp, base_ae, exp_map(kHyp, along, tstar + half_band));
    CHECK(std::holds_alternative<LinesAsymptotic>(classify_line_pair(kHyp, erected, line_bh)));
}

TEST_CASE("build_chain: Euclidean hexagon closes") {
    PolygonChain hex = build_chain(kEuc, 1.0, 2 * kPi / 3, 6);
    REQUIRE(hex.vertices.size() == 7);
    CHECK(distance(kEuc, hex.vertices[6], hex.vertices[0]) < 1e-9);
    ChainCenter cc = classify_chain_center(hex);
    const auto* circle = std::get_if<ChainCircle>(&cc);
    REQUIRE(circle != nullptr);
    CHECK(circle->radius == doctest::Approx(1.0).epsilon(1e-10));  // circumradius = side
}

TEST_CASE("build_chain: segment and angle invariants hold per space") {
    Rng rng(83);
    for (const SpaceForm& s : {kSph, kEuc, kHyp}) {
        for (int i = 0; i < 25; ++i) {
            double seg = rng.uniform(0.1, s.kind == Kind::Spherical ? 0.8 : 1.5);
            double theta = rng.uniform(0.5, kPi - 0.3);
            int n = rng.uniform_int(3, 10);
            PolygonChain chain = build_chain(s, seg, theta, n);
            chain.validate(1e-10);  // throws on drift
        }
    }
}

TEST_CASE("Euclidean chains are always concyclic") {
    Rng rng(89);
    for (int i = 0; i < 100; ++i) {
        double seg = rng.uniform(0.1, 2.0);
        double theta = rng.uniform(0.3, kPi - 0.05);
        PolygonChain chain = build_chain(kEuc, seg, theta, rng.uniform_int(3, 12));
        ChainCenter cc = classify_chain_center(chain);
        const auto* circle = std::get_if<ChainCircle>(&cc);
        REQUIRE(circle != nullptr);
        for (const Point& v : chain.vertices)
            CHECK(std::abs(distance(kEuc, circle->center, v) - circle->radius) < 1e-9);
    }
}

TEST_CASE("spherical chains are concyclic") {
    Rng rng(97);
    for (int i = 0; i < 60; ++i) {
        double seg = rng.uniform(0.2, 0.9);
        double theta = rng.uniform(0.8, kPi - 0.3);
        PolygonChain chain = build_chain(kSph, seg, theta, 12);
        ChainCenter cc = classify_chain_center(chain);
        CHECK(std::holds_alternative<ChainCircle>(cc));
    }
}

TEST_CASE("hyperbolic chains: circle for small segments, equidistant for long ones") {
    double theta = 2 * kPi / 3;
    PolygonChain small = build_chain(kHyp, 0.1, theta, 12);
    CHECK(std::holds_alternative<ChainCircle>(classify_chain_center(small)));

    PolygonChain large = build_chain(kHyp, 5.0, theta, 6);
    CHECK(std::holds_alternative<ChainEquidistant>(classify_chain_center(large)));

    // 1e-9 equidistance, checked where the embedding still carries it
    PolygonChain mid = build_chain(kHyp, 2.0, theta, 4);
    ChainCenter cc = classify_chain_center(mid);
    const auto* eq = std::get_if<ChainEquidistant>(&cc);
    REQUIRE(eq != nullptr);
    double h = foot_of_perpendicular(kHyp, mid.vertices[0], eq->axis).h;
    for (const Point& v : mid.vertices)
        CHECK(std::abs(foot_of_perpendicular(kHyp, v, eq->axis).h - h) < 1e-9);
}

TEST_CASE("chain transition matches the closed form 2*acosh(1/sin(theta/2))") {
    for (double theta : {1.0, 2 * kPi / 3, 2.4}) {
        auto is_circle = [&](double seg) {
            return std::holds_alternative<ChainCircle>(
                classify_chain_center(build_chain(kHyp, seg, theta, 4)));
        };
        double lo = 0.05, hi = 8.0;
        for (int i = 0; i < 50; ++i) {
            double mid = 0.5 * (lo + hi);
            (is_circle(mid) ? lo : hi) = mid;
        }
        double expect = 2 * std::acosh(1.0 / std::sin(theta / 2));
        CHECK(0.5 * (lo + hi) == doctest::Approx(expect).epsilon(1e-6));
    }
}

TEST_CASE("hyperbolic chains: bisection locates the circle/equidistant transition") {
    double theta = 2 * kPi / 3;
    auto is_circle = [&](double seg) {
        return std::holds_alternative<ChainCircle>(
            classify_chain_center(build_chain(kHyp, seg, theta, 4)));
    };
    double lo = 0.1, hi = 5.0;
    REQUIRE(is_circle(lo));
    REQUIRE(!is_circle(hi));
    for (int i = 0; i < 40; ++i) {
        double mid = 0.5 * (lo + hi);
        (is_circle(mid) ? lo : hi) = mid;
    }
    double s_crit = 0.5 * (lo + hi);
    CHECK(hi - lo < 1e-9);
    // classification is monotone across the located transition
    CHECK(is_circle(s_crit - 0.05));
    CHECK(!is_circle(s_crit + 0.05));
}

TEST_CASE("degenerate chain requests are rejected") {
    CHECK_THROWS_AS((void)build_chain(kEuc, 1.0, kPi, 4), DomainError);
    CHECK_THROWS_AS((void)build_chain(kEuc, -1.0, 1.0, 4), DomainError);
    CHECK_THROWS_AS((void)build_chain(kEuc, 1.0, 1.0, 2), DomainError);
}
