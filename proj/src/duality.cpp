#include "curvatura/duality.hpp"

#include <cmath>

namespace curvatura {

namespace {

constexpr double kPi = 3.14159265358979323846;
using Cx = std::complex<double>;

void need(bool cond, const char* what) {
    if (!cond) throw DomainError(what);
}

}  // namespace

const char* identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::LawOfCosines: return "law-of-cosines";
        case IdentityId::RightTrianglePythagoras: return "right-triangle-pythagoras";
        case IdentityId::GirardArea: return "girard-area";
    }
    return "?";
}

Cx spherical_residual(IdentityId id, const std::vector<Cx>& sides,
                      const std::vector<double>& angles) {
    switch (id) {
        case IdentityId::LawOfCosines: {
            need(sides.size() == 3 && angles.size() >= 1, "law of cosines needs 3 sides, 1 angle");
            const Cx &a = sides[0], &b = sides[1], &c = sides[2];
            return std::cos(a) - std::cos(b) * std::cos(c) -
                   std::sin(b) * std::sin(c) * std::cos(angles[0]);
        }
        case IdentityId::RightTrianglePythagoras: {
            need(sides.size() == 3, "pythagoras needs (hypotenuse, leg, leg)");
            return std::cos(sides[0]) - std::cos(sides[1]) * std::cos(sides[2]);
        }
        case IdentityId::GirardArea: {
            need(angles.size() == 3, "area identity needs 3 angles");
            // Reduced area (area / rho^2) of the excess formula; no sides, so
            // the transport acts through the explicit radius factor instead.
            return Cx(angles[0] + angles[1] + angles[2] - kPi, 0.0);
        }
    }
    return {};
}

double hyperbolic_residual(IdentityId id, const std::vector<double>& sides,
                           const std::vector<double>& angles) {
    switch (id) {
        case IdentityId::LawOfCosines: {
            need(sides.size() == 3 && angles.size() >= 1, "law of cosines needs 3 sides, 1 angle");
            return std::cosh(sides[0]) - std::cosh(sides[1]) * std::cosh(sides[2]) +
                   std::sinh(sides[1]) * std::sinh(sides[2]) * std::cos(angles[0]);
        }
        case IdentityId::RightTrianglePythagoras: {
            need(sides.size() == 3, "pythagoras needs (hypotenuse, leg, leg)");
            return std::cosh(sides[0]) - std::cosh(sides[1]) * std::cosh(sides[2]);
        }
        case IdentityId::GirardArea: {
            need(angles.size() == 3, "area identity needs 3 angles");
            return kPi - angles[0] - angles[1] - angles[2];
        }
    }
    return 0;
}

TransportReport transport_check(IdentityId id, const std::vector<double>& reduced_sides,
                                const std::vector<double>& angles, double tol) {
    TransportReport rep;
    rep.identity = id;
    rep.sides = reduced_sides;
    rep.angles = angles;

    std::vector<Cx> imag_sides;
    imag_sides.reserve(reduced_sides.size());
    for (double x : reduced_sides) {
        if (!std::isfinite(x)) throw DomainError("sides must be finite");
        imag_sides.emplace_back(0.0, x);  // x -> i*x
    }

    if (id == IdentityId::GirardArea) {
        need(angles.size() == 3, "area identity needs 3 angles");
        need(angles[0] + angles[1] + angles[2] < kPi, "angle sum must be < pi");
        // sphere of radius i: (i)^2 * excess against the hyperbolic defect.
        Cx i2 = Cx(0, 1) * Cx(0, 1);
        Cx transported = i2 * spherical_residual(id, {}, angles);
        double hyp = hyperbolic_residual(id, {}, angles);
        rep.spherical_at_imaginary = transported - hyp;
        rep.hyperbolic_residual = 0.0;
        rep.max_imag_part = std::abs(transported.imag());
        rep.ok = std::abs(rep.spherical_at_imaginary) <= tol && rep.max_imag_part <= tol;
        return rep;
    }

    Cx transported = spherical_residual(id, imag_sides, angles);
    // Purely imaginary side arguments keep cos/sin on the principal branch;
    // guard anyway.
    if (!std::isfinite(transported.real()) || !std::isfinite(transported.imag()))
        throw BranchError("transported evaluation left the principal branch");
    double hyp = hyperbolic_residual(id, reduced_sides, angles);

    rep.spherical_at_imaginary = transported;
    rep.hyperbolic_residual = hyp;
    rep.max_imag_part = std::abs(transported.imag());
    rep.ok = std::abs(transported.real() - hyp) <= tol && rep.max_imag_part <= tol;
    return rep;
}

AreaTransport area_transport(double R, double alpha, double beta, double gamma) {
    need(R > 0 && std::isfinite(R), "radius must be positive");
    for (double a : {alpha, beta, gamma}) need(a >= 0 && std::isfinite(a), "angles must be >= 0");
    if (!(alpha + beta + gamma < kPi))
        throw UnrealizableAngles("hyperbolic angle sum must be < pi");
    double excess = alpha + beta + gamma - kPi;
    // Girard on the sphere of radius i*R: (i*R)^2 * excess, which is real.
    Cx rho = Cx(0, R);
    Cx spherical = rho * rho * excess;
    // Same rounding path as the transported product, so the equality is exact.
    double hyperbolic = -(R * R * excess);
    return AreaTransport{spherical.real(), hyperbolic};
}

}  // namespace curvatura
