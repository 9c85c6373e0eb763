#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specdyn/complex_ext.hpp"
#include "specdyn/point.hpp"
#include "specdyn/rational.hpp"

namespace specdyn {

/// F(z) = (z0(z0^2-z1^2-z2^2), z1^2 z2, z2(z0^2-z2^2)), homogeneous of
/// degree 3. Works over any complex-like scalar (doubles or exact
/// Gaussian rationals).
template <class C>
std::array<C, 3> apply_F(const std::array<C, 3>& z) {
    const C q = z[0] * z[0] - z[1] * z[1] - z[2] * z[2];
    return {z[0] * q, z[1] * z[1] * z[2], z[2] * (z[0] * z[0] - z[2] * z[2])};
}

/// The z1<->z2 symmetric companion map
/// F2(z) = (z0(z0^2-z1^2-z2^2), z1(z0^2-z1^2), z1 z2^2), realized through
/// the coordinate swap so the conjugacy with F holds exactly.
template <class C>
std::array<C, 3> apply_F2(const std::array<C, 3>& z) {
    const std::array<C, 3> swapped{z[0], z[2], z[1]};
    const std::array<C, 3> image = apply_F(swapped);
    return {image[0], image[2], image[1]};
}

/// tau(z): 0 on the quadric z0^2-z1^2-z2^2 = 0, otherwise
/// (z0^2-z1^2-z2^2)/(2 z1 z2), which is the point at infinity when
/// z1 z2 = 0. Homogeneous of degree zero.
ExtendedComplex tau(const Affine3& z);

inline ExtendedComplex tau(const Point3& z) { return tau(z.coords); }

/// T(x) = 2x^2 - 1 on the Riemann sphere; T(inf) = inf.
ExtendedComplex tchebyshev_T(const ExtendedComplex& x);

/// T_k via the three-term recurrence T0=1, T1=x, T_{k+1} = 2x T_k - T_{k-1}.
cplx tchebyshev_Tk(unsigned k, cplx x);

struct OrbitTrace {
    std::vector<Affine3> points;                    // points[0] is the input
    std::vector<ExtendedComplex> tau_values;        // tau of each stored point
    std::optional<int> terminated_at_indeterminacy; // points[k] maps to ~0
    std::optional<int> overflowed_at;               // raw mode left double range
    bool renormalized = false;
};

/// n forward steps of F. With renormalize set, every stored point is the
/// pivot-normalized representative (the projective orbit is unchanged).
/// Termination at an indeterminacy point is recorded, never thrown: the
/// image is considered zero when all components have modulus below
/// 1e-14 * (input scale)^3.
OrbitTrace iterate_F(const Affine3& z, int n, bool renormalize = true);

/// Partial sum f_n(z) = sum_{j=1}^{n-1} 1/(2^j prod_{k=0}^{j-1} T^k(tau)).
/// Requires every factor T^k(tau(z)), k <= n-2, nonzero; tau = inf gives 0.
cplx f_n(const Affine3& z, int n);

/// Closed-form n-th iterate for n >= 2 (product form of the reduced map),
/// projectively equal to iterate_F. Throws IndeterminateOrbit when the
/// forward orbit hits I1 before step n, ZeroTchebyshevFactor when some
/// T^k(tau(z)) vanishes and the product form is inapplicable.
Point3 closed_form_Fn(const Affine3& z, int n);

/// Limit of f_n: the root w of w^2 - 2 tau(z) w + 1 = 0 with |w| <= 1.
/// For tau in [-1,1] both roots are unimodular and the branch e^{-i theta},
/// theta = arccos(tau) in [0,pi], is returned. tau = inf gives 0.
cplx limit_f(const Affine3& z);

/// F_*(z) = [z0 : 0 : z2 + z1 f(z)], the limit of the iteration sequence
/// on the Fatou set.
Point3 limit_F_star(const Affine3& z);

/// CSV export: step, z0_re, z0_im, z1_re, z1_im, z2_re, z2_im,
/// tau_re, tau_im, tau_is_inf.
std::string orbit_to_csv(const OrbitTrace& trace);

} // namespace specdyn
