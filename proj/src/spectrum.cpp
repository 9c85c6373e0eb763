#include "specdyn/spectrum.hpp"

#include <cmath>
#include <limits>

namespace specdyn {

SpectrumVerdict spectrum_membership(const Point3& z, double tol) {
    if (!(tol > 0.0)) throw InvalidConfigError("spectrum_membership requires tol > 0");
    const Affine3& c = z.coords;
    SpectrumVerdict v;

    if (c[1] * c[2] == cplx(0.0, 0.0)) {
        // degenerate pencil: membership reduces to the quadric residual
        const cplx num = c[0] * c[0] - c[1] * c[1] - c[2] * c[2];
        const double scale = norm2(c);
        v.in_spectrum = std::abs(num) <= tol * scale * scale;
        v.margin = v.in_spectrum ? 0.0 : std::numeric_limits<double>::infinity();
        return v;
    }

    const ExtendedComplex t = tau(c);
    // z1 z2 != 0 makes tau finite
    const cplx tv = t.value();
    const bool real_enough = std::abs(tv.imag()) <= tol;
    const bool in_window = tv.real() >= -1.0 - tol && tv.real() <= 1.0 + tol;
    v.in_spectrum = real_enough && in_window;
    if (v.in_spectrum) {
        v.x_param = std::min(1.0, std::max(-1.0, tv.real()));
        v.margin = 0.0;
    } else {
        const double dx = std::max(std::abs(tv.real()) - 1.0, 0.0);
        v.margin = std::hypot(dx, tv.imag());
    }
    return v;
}

cplx char_poly_rho_theta(const Affine3& z, double theta) {
    const cplx eip = std::polar(1.0, theta);
    const cplx eim = std::polar(1.0, -theta);
    // [ z0            z1 e^{i t} + z2 ]
    // [ z1 e^{-i t} + z2          z0  ]
    const cplx det = z[0] * z[0] - (z[1] * eip + z[2]) * (z[1] * eim + z[2]);
    const cplx closed = z[0] * z[0] - z[1] * z[1] - z[2] * z[2] - 2.0 * z[1] * z[2] * std::cos(theta);
    const double scale = abs2(z[0]) + abs2(z[1]) + abs2(z[2]) + 2.0 * std::abs(z[1] * z[2]);
    if (std::abs(det - closed) > 1e-12 * std::max(1.0, scale))
        throw VerificationFailureError("rho_theta determinant disagrees with the closed form");
    return closed;
}

std::vector<RealInterval> pencil_spectrum_in_zeta(double c, double w1, double w2) {
    const double r_lo = std::abs(std::abs(w1) - std::abs(w2));
    const double r_hi = std::abs(w1) + std::abs(w2);
    // zeta = c +- r, r in [r_lo, r_hi]
    RealInterval left{c - r_hi, c - r_lo};
    RealInterval right{c + r_lo, c + r_hi};
    if (left.hi >= right.lo) return {RealInterval{left.lo, right.hi}};
    return {left, right};
}

bool real_slice_spectrum(double x, double y) {
    const double lo = (std::abs(x) - std::abs(y)) * (std::abs(x) - std::abs(y));
    const double hi = (std::abs(x) + std::abs(y)) * (std::abs(x) + std::abs(y));
    return lo <= 1.0 && 1.0 <= hi;
}

} // namespace specdyn
