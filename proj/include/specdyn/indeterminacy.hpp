#pragma once

#include <optional>
#include <vector>

#include "specdyn/dihedral.hpp"
#include "specdyn/point.hpp"
#include "specdyn/rational.hpp"

namespace specdyn {

struct IndeterminacyVerdict {
    bool member = false;
    std::optional<int> first_hit_step; // orbit reaches I1 after this many steps
    bool exact = false;                // decided in exact rational arithmetic
};

/// The five points of I1 = { [+-1:1:0], [0:1:0], [+-1:0:1] }, pivot-normalized.
std::vector<Point3> indeterminacy_I1();

/// Exact I1 as Gaussian-rational representatives.
std::vector<RAffine3> indeterminacy_I1_exact();

/// I2 = I1 union { [+-1 : zeta : 1] }: z2 != 0 and z0/z2 = +-1.
bool in_I2(const Point3& z, double tol = 1e-12);
bool in_I2_exact(const RAffine3& z);

/// Membership in I_n decided by forward iteration: member iff some iterate
/// F^k(z), 0 <= k <= n-1, lies in I1 (equivalently the next image is the
/// zero vector). Float mode: components below 1e-12 after normalization.
IndeterminacyVerdict in_In(const Point3& z, int n);
IndeterminacyVerdict in_In_exact(const RAffine3& z, int n);

/// Points of I_n' (new indeterminacy at step n) for n in {3,4,5}, at the
/// I2'-parameter zeta != 0 and the given sign: parametrize x = tau(z), form
/// the template point, impose tau(p(x)) = x, clear denominators, take all
/// roots, keep the candidates whose verified orbit first reaches I1 at
/// step n-1. Throws NoSolution when no root survives verification.
std::vector<Point3> generate_In_prime(int n, cplx zeta, int sign);

/// Template point [s/eta : zeta : (1 - zeta*A)/eta] for a given tau-value x
/// (exposed for tests; eta and A as in the I_n' parametrization).
std::optional<Affine3> In_prime_template(int n, cplx zeta, int sign, cplx x);

/// Certified exclusion from the extended indeterminacy set:
/// |tau(z)| > 1 and |z2| > |z0| + |z1|. True implies z is a Fatou point.
bool E_exclusion_certificate(const Point3& z);

} // namespace specdyn
