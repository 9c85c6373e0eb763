#pragma once

#include <array>

#include "specdyn/point.hpp"
#include "specdyn/rational.hpp"

namespace specdyn {

/// alpha(z) = (z0+z4)^2 - (z2+z3)^2.
template <class C>
C alpha(const std::array<C, 5>& z) {
    const C b = z[0] + z[4];
    const C e = z[2] + z[3];
    return b * b - e * e;
}

/// G(z) = (z0 a - z1^2 (z0+z4), z1^2 (z2+z3), z4 a, z2 a, z3 a) with
/// a = alpha(z); homogeneous of degree 3.
template <class C>
std::array<C, 5> apply_G(const std::array<C, 5>& z) {
    const C a = alpha(z);
    return {z[0] * a - z[1] * z[1] * (z[0] + z[4]), z[1] * z[1] * (z[2] + z[3]), z[4] * a,
            z[2] * a, z[3] * a};
}

/// Linear embedding X of the dihedral coordinates into the slice
/// z2 = z3 = z4: w -> (w0 - w2/2, w1, w2/2, w2/2, w2/2).
template <class C>
std::array<C, 5> embed_X(const std::array<C, 3>& w) {
    const C half = C(1) / C(2);
    const C h = w[2] * half;
    return {w[0] - h, w[1], h, h, h};
}

inline Affine5 embed_X(const Affine3& w) {
    const cplx h = w[2] * 0.5;
    return {w[0] - h, w[1], h, h, h};
}

} // namespace specdyn
