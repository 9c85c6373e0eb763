#include "specdyn/grigorchuk.hpp"

#include <cmath>
#include <random>

namespace specdyn {

bool in_M(const Affine5& z, double tol) {
    const double scale = norm_inf(z);
    if (scale == 0.0) return true;
    return std::abs(z[2] - z[3]) <= tol * scale && std::abs(z[3] - z[4]) <= tol * scale;
}

Affine3 invert_X(const Affine5& z, double tol) {
    if (!in_M(z, tol)) throw NotInMError("point is not on the slice z2 = z3 = z4");
    return {z[0] + z[4], z[1], 2.0 * z[4]};
}

SlicePoint make_slice_point(const Affine5& z, double tol) {
    SlicePoint sp;
    sp.point = normalize(z);
    sp.dihedral_preimage = normalize(invert_X(z, tol));
    return sp;
}

JOrbitFacts J_orbit_facts(const Affine5& z) {
    const double n1 = norm1(z);
    if (std::abs(alpha(z)) > 1e-12 * n1 * n1) throw NotOnJError("alpha(z) does not vanish");

    JOrbitFacts facts;
    const Affine5 img = apply_G(z);
    const double iscale = norm_inf(img);
    if (iscale < 1e-300) {
        // degenerate J point already mapping to 0
        facts.image_in_spectrum = true;
        facts.second_image_zero = true;
        return facts;
    }
    // proportional to (+-1, 1, 0, 0, 0)?
    const bool tail_zero = std::abs(img[2]) <= 1e-10 * iscale && std::abs(img[3]) <= 1e-10 * iscale &&
                           std::abs(img[4]) <= 1e-10 * iscale;
    const bool heads_match = std::abs(std::abs(img[0]) - std::abs(img[1])) <= 1e-10 * iscale;
    facts.image_in_spectrum = tail_zero && heads_match;

    const Affine5 img2 = apply_G(img);
    facts.second_image_zero = norm_inf(img2) <= 1e-10 * iscale * iscale * iscale;
    return facts;
}

JOrbitFacts J_orbit_facts_exact(const RAffine5& z) {
    if (!alpha(z).is_zero()) throw NotOnJError("alpha(z) != 0 in exact arithmetic");

    JOrbitFacts facts;
    const RAffine5 img = apply_G(z);
    if (is_zero_vector(img)) {
        facts.image_in_spectrum = true;
        facts.second_image_zero = true;
        return facts;
    }
    const RationalComplex expected = img[1]; // multiple of (+-1, 1, 0, 0, 0)
    facts.image_in_spectrum = img[2].is_zero() && img[3].is_zero() && img[4].is_zero() &&
                              (img[0] == expected || img[0] == -expected);
    facts.second_image_zero = is_zero_vector(apply_G(img));
    return facts;
}

Classification classify_GM(const Point5& z, int max_iter, double tol) {
    const Affine3 w = invert_X(z.coords);
    return classify_point(normalize(w), max_iter, tol);
}

ConjectureProbe probe_conjecture(int samples, int iterations, unsigned seed) {
    ConjectureProbe probe;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.05, M_PI - 0.05);
    std::uniform_real_distribution<double> mag(0.5, 1.5);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);

    for (int s = 0; s < samples; ++s) {
        // dihedral spectrum point with tau = cos(theta)
        const double x = std::cos(angle(rng));
        const cplx w1 = std::polar(mag(rng), phase(rng));
        const cplx w2 = std::polar(mag(rng), phase(rng));
        const cplx w0 = std::sqrt(w1 * w1 + w2 * w2 + 2.0 * x * w1 * w2);
        Affine5 cur = normalize(embed_X(Affine3{w0, w1, w2})).coords;

        ++probe.samples;
        int stable = 0;
        bool converged = false;
        double late_swing = 0.0;
        for (int k = 0; k < iterations; ++k) {
            const Affine5 img = apply_G(cur);
            if (norm_inf(img) < 1e-300) break;
            const Affine5 next = normalize(img).coords;
            const double d = fs_distance(cur, next);
            stable = d < 1e-10 ? stable + 1 : 0;
            if (k >= iterations / 2) late_swing = std::max(late_swing, d);
            cur = next;
            if (stable >= 10) {
                converged = true;
                break;
            }
        }
        if (!converged) ++probe.non_convergent;
        probe.max_oscillation = std::max(probe.max_oscillation, late_swing);
    }
    return probe;
}

} // namespace specdyn
