#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specdyn/indeterminacy.hpp"
#include "specdyn/point.hpp"
#include "specdyn/spectrum.hpp"

namespace specdyn {

/// Verdict of the Julia/Fatou classifier for a point of P^2.
struct Classification {
    enum class Kind {
        julia_spectrum,      // lies in p(A_pi)
        julia_indeterminacy, // forward orbit reaches I1
        fatou_certified,     // in the certified exclusion region V
        fatou_numerical,     // orbit observed to converge
        unknown
    };
    Kind kind = Kind::unknown;
    std::optional<double> x_param;  // julia_spectrum with z1 z2 != 0
    std::optional<int> step;        // julia_indeterminacy
    std::optional<Point3> limit;    // fatou_numerical
};

/// Decision order: indeterminacy, spectrum, exclusion certificate, numerical
/// convergence (fs-distance of consecutive normalized iterates below 1e-10
/// for 10 straight steps), otherwise unknown. Indeterminacy is tested first
/// so that points of I_n inside the spectrum (e.g. [1:1:0]) report the
/// orbit collapse.
Classification classify_point(const Point3& z, int max_iter = 100, double tol = 1e-10);

std::string to_string(Classification::Kind kind);

// --- fixed points ------------------------------------------------------------

enum class FixedPointType { super_attracting, attracting, repelling, parabolic, saddle };

std::string to_string(FixedPointType t);

struct FixedPointRecord {
    std::vector<cplx> location; // affine representative, 3 or 5 components
    cplx lambda{1.0, 0.0};      // map(z) = lambda z
    std::vector<cplx> eigenvalues;
    FixedPointType type = FixedPointType::parabolic;
    double residual = 0.0;
    std::string label;
};

struct FixedPointFamily {
    std::string name;
    std::string constraint;
};

struct FixedPointReport {
    std::vector<FixedPointRecord> records;
    std::vector<FixedPointFamily> families;
};

enum class MapId { F, G };
enum class Domain { affine, projective };

/// Jacobian of F, row-major 3x3. The determinant is checked against the
/// closed form 6 z1 z2 (z0^2-z2^2)(z0^2-z1^2-z2^2).
std::vector<cplx> jacobian_F(const Affine3& z);

/// Jacobian of G, row-major 5x5 (entries cross-checked against central
/// finite differences in the test suite).
std::vector<cplx> jacobian_G(const Affine5& z);

/// Classify a fixed point map(z) = lambda z from the Jacobian eigenvalues.
/// Affine classification follows the eigenvalue taxonomy literally; in
/// projective mode the radial eigenvalue 3*lambda is removed, the rest are
/// divided by lambda, and zero multipliers do not block "repelling".
/// Throws NotFixed when the residual exceeds the tolerance.
FixedPointRecord classify_fixed_point(MapId map, const std::vector<cplx>& z, cplx lambda,
                                      Domain domain = Domain::affine, double residual_tol = 1e-9);

/// Point of the fixed surface Y_F = {z1 = 0, z0^2 - z2^2 = 1}.
Affine3 y_F_point(cplx z2, int sign);

/// Fixed points of F. Affine: the three isolated points plus Y_F records at
/// the given z2 samples. Projective: the fixed line {z1=0, z0 != +-z2}
/// (sampled) and [0:1:-1].
FixedPointReport fixed_points_F(Domain domain, const std::vector<cplx>& yf_z2_samples = {
                                                   cplx(0.0, 0.0), cplx(1.0, 0.0), cplx(2.0, 0.0)});

/// Point of Y_1 = {(-g +- sqrt(1+4g^2), 0, g, g, g)}.
Affine5 y1_point(cplx gamma, int sign);

/// The eight Y_2 fixed points of G (both primitive cube roots, both w
/// branches, both square roots), refined by damped Newton steps.
std::vector<Affine5> y2_points();

/// Fixed points of G: origin, (+-1,0,0,0,0), Y_1 at the gamma samples, the
/// eight Y_2 points; in projective mode additionally [-1:-2:1:1:1] with
/// G(z) = -4 z. Throws VerificationFailure if a candidate fails to verify.
FixedPointReport fixed_points_G(const std::vector<cplx>& gamma_samples,
                                Domain domain = Domain::affine);

struct GOriginY1Report {
    FixedPointRecord origin;
    std::vector<FixedPointRecord> y1;
    std::vector<FixedPointRecord> y2;
    bool y1_all_parabolic = false;
    bool y2_none_attracting = false;
};

/// Origin super-attracting, Y_1 parabolic (unit eigenvalues from
/// lambda^2+lambda+1), Y_2 not attracting; computed, not asserted from
/// authority, for the Y_2 types.
GOriginY1Report classify_G_origin_and_Y1(const std::vector<cplx>& gamma_samples = {
                                             cplx(1.0, 0.0), cplx(2.0, 0.0), cplx(0.5, 0.0)});

} // namespace specdyn
