#pragma once

#include <optional>
#include <vector>

#include "specdyn/dihedral.hpp"
#include "specdyn/point.hpp"

namespace specdyn {

/// Membership verdict for the projective spectrum of the infinite dihedral
/// group. When z1 z2 != 0 the point lies in the spectrum iff tau(z) is real
/// in [-1,1]; x_param is then the unique parameter of the quadric S_x
/// containing z, and margin the distance from tau(z) to the segment.
struct SpectrumVerdict {
    bool in_spectrum = false;
    std::optional<double> x_param;
    double margin = 0.0; // +inf when tau = inf off the spectrum
};

SpectrumVerdict spectrum_membership(const Point3& z, double tol = 1e-10);

/// det(z0 I + z1 rho_theta(a) + z2 rho_theta(t)) for the 2x2 irreducible
/// representation; equals z0^2 - z1^2 - z2^2 - 2 z1 z2 cos(theta). Both the
/// explicit determinant and the closed form are evaluated and must agree.
cplx char_poly_rho_theta(const Affine3& z, double theta);

struct RealInterval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Spectrum of the pencil (c - zeta) I + w1 a + w2 t in the spectral
/// variable zeta: a union of at most two closed real intervals.
std::vector<RealInterval> pencil_spectrum_in_zeta(double c, double w1, double w2);

/// Chart [1 : x : y] specialization: true iff (|x|-|y|)^2 <= 1 <= (|x|+|y|)^2.
bool real_slice_spectrum(double x, double y);

} // namespace specdyn
