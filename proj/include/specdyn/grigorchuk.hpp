#pragma once

#include <vector>

#include "specdyn/classification.hpp"
#include "specdyn/grigorchuk_map.hpp"
#include "specdyn/point.hpp"
#include "specdyn/rational.hpp"

namespace specdyn {

/// A point of the slice M = {z2 = z3 = z4} in P^4 together with its
/// dihedral preimage under the embedding X.
struct SlicePoint {
    Point5 point;
    Point3 dihedral_preimage;
};

/// Relative membership test for the slice M (pairwise differences of the
/// last three coordinates against the sup norm).
bool in_M(const Affine5& z, double tol = 1e-10);

/// Inverse of X on M-hat: w0 = z0 + z4, w1 = z1, w2 = 2 z4.
/// Throws NotInM off the slice (relative tolerance 1e-10).
Affine3 invert_X(const Affine5& z, double tol = 1e-10);

SlicePoint make_slice_point(const Affine5& z, double tol = 1e-10);

struct JOrbitFacts {
    bool image_in_spectrum = false;  // G(z) proportional to (+-1, 1, 0, 0, 0)
    bool second_image_zero = false;  // G(G(z)) = 0
};

/// For z on J = {alpha = 0}: the image is a scalar multiple of
/// (+-1,1,0,0,0) (hence in the spectrum) and the second image vanishes.
/// Throws NotOnJ when |alpha(z)| > 1e-12 * |z|_1^2.
JOrbitFacts J_orbit_facts(const Affine5& z);

/// Exact variant for Gaussian-rational points on J.
JOrbitFacts J_orbit_facts_exact(const RAffine5& z);

/// Classify a point of M by pulling back through X and running the
/// dihedral classifier; Julia/Fatou status transfers along the
/// homeomorphism X. Throws NotInM off the slice.
Classification classify_GM(const Point5& z, int max_iter = 100, double tol = 1e-10);

struct ConjectureProbe {
    int samples = 0;
    int non_convergent = 0;       // G-orbit on M showed no 10-step stabilization
    double max_oscillation = 0.0; // largest fs-distance swing seen late in an orbit
};

/// Heuristic probe of the conjecture p(R_pi) subset J(G): samples spectrum
/// points X(w), tau(w) in [-1,1], iterates G inside M and reports
/// non-convergence statistics. Numerical evidence only, asserts nothing.
ConjectureProbe probe_conjecture(int samples, int iterations, unsigned seed = 20240817);

} // namespace specdyn
