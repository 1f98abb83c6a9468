#pragma once

#include <complex>
#include <vector>

#include "curvatura/errors.hpp"

namespace curvatura {

// Identities registered for the imaginary-radius transport.  Each identity
// exists as a spherical residual (left side minus right side, complex-capable
// in the reduced sides) and the corresponding hyperbolic residual; the
// transport multiplies every reduced side by i and must reproduce the
// hyperbolic residual with vanishing imaginary part.
enum class IdentityId { LawOfCosines, RightTrianglePythagoras, GirardArea };

const char* identity_name(IdentityId id);

struct TransportReport {
    IdentityId identity;
    std::vector<double> sides;   // reduced lengths (x / R)
    std::vector<double> angles;  // untouched by the transport
    std::complex<double> spherical_at_imaginary;
    double hyperbolic_residual;
    double max_imag_part;
    bool ok;
};

// Evaluate the spherical residual with sides multiplied by i (complex
// arithmetic, principal branches) and the hyperbolic residual at the real
// sides; ok iff the two agree within tol and the transported value is real
// within tol.  Inputs must lie in the hyperbolic identity's domain:
//   LawOfCosines            sides (a, b, c), angles (A)
//   RightTrianglePythagoras sides (hypotenuse, leg1, leg2), no angles
//   GirardArea              no sides, angles (alpha, beta, gamma), sum < pi
TransportReport transport_check(IdentityId id, const std::vector<double>& reduced_sides,
                                const std::vector<double>& angles, double tol);

// Girard's area formula transported: the spherical excess formula evaluated
// at radius i*R against the hyperbolic defect formula at radius R.  The two
// values agree to machine precision; the second one equals
// trig::area_from_angles on the hyperbolic plane.
struct AreaTransport {
    double spherical_signed_area_at_imaginary_radius;
    double hyperbolic_area;
};
AreaTransport area_transport(double R, double alpha, double beta, double gamma);

// Residual functions themselves, exposed for the involution property tests.
std::complex<double> spherical_residual(IdentityId id, const std::vector<std::complex<double>>& sides,
                                        const std::vector<double>& angles);
double hyperbolic_residual(IdentityId id, const std::vector<double>& sides,
                           const std::vector<double>& angles);

}  // namespace curvatura
