#include "specdyn/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>

#include "specdyn/classification.hpp"
#include "specdyn/dihedral.hpp"
#include "specdyn/grigorchuk.hpp"
#include "specdyn/indeterminacy.hpp"
#include "specdyn/koopman.hpp"
#include "specdyn/point.hpp"
#include "specdyn/rational.hpp"
#include "specdyn/spectrum.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace specdyn {

namespace {

// Level-10 dihedral pencil, weights (1,2): largest gap between consecutive
// sorted quadric parameters, recorded from an oracle run (cross-checked
// against an independent LAPACK computation of the same matrix).
constexpr double kLevel10MaxGapFixture = 0.0061358846491542;

struct Sampler {
    std::mt19937_64 rng;
    explicit Sampler(unsigned seed) : rng(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    cplx disk(double radius) {
        const double r = std::sqrt(uniform(0.0, 1.0)) * radius;
        return std::polar(r, uniform(0.0, 2.0 * M_PI));
    }
    cplx annulus(double lo, double hi) {
        return std::polar(uniform(lo, hi), uniform(0.0, 2.0 * M_PI));
    }
    Rational rational(int num_range, int den_range) {
        const long num = long(rng() % (2 * num_range + 1)) - num_range;
        const long den = long(rng() % den_range) + 1;
        return Rational(num, den);
    }
    RationalComplex gaussian_rational(int num_range = 9, int den_range = 9) {
        return {rational(num_range, den_range), rational(num_range, den_range)};
    }
};

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

// stable complex cotangent / cosecant for arguments with huge imaginary part
cplx safe_cot(cplx z) {
    if (z.imag() >= 0.0) {
        const cplx u = std::exp(cplx(0.0, 1.0) * z); // |u| <= 1
        const cplx u2 = u * u;
        return cplx(0.0, 1.0) * (u2 + 1.0) / (u2 - 1.0);
    }
    const cplx v = std::exp(cplx(0.0, -1.0) * z); // |v| <= 1
    const cplx v2 = v * v;
    return cplx(0.0, 1.0) * (1.0 + v2) / (1.0 - v2);
}

cplx safe_csc(cplx z) {
    if (z.imag() >= 0.0) {
        const cplx u = std::exp(cplx(0.0, 1.0) * z);
        return 2.0 * cplx(0.0, 1.0) * u / (u * u - 1.0);
    }
    const cplx v = std::exp(cplx(0.0, -1.0) * z);
    return 2.0 * cplx(0.0, 1.0) * v / (1.0 - v * v);
}

double rel_err(cplx got, cplx want) {
    return std::abs(got - want) / std::max({1.0, std::abs(got), std::abs(want)});
}

// ---------------------------------------------------------------- C1
CheckResult check_semiconjugacy() {
    CheckResult r{"semiconjugacy", "C1", true, "", 0.0};
    Sampler s(101);
    const int total = 100000;
    double worst = 0.0;
    for (int k = 0; k < total; ++k) {
        Affine3 z{s.disk(2.0), s.disk(2.0), s.disk(2.0)};
        if (k % 10 == 3) z[1] = cplx(0.0, 0.0);
        if (k % 10 == 7) z[2] = cplx(0.0, 0.0);
        const ExtendedComplex lhs = tau(apply_F(z));
        const ExtendedComplex rhs = tchebyshev_T(tau(z));
        worst = std::max(worst, sphere_rel_diff(lhs, rhs));
        if (worst > 1e-9) break;
    }
    r.pass = worst <= 1e-9;
    r.detail = fmt("max relative |tau(F(z)) - T(tau(z))| = %.3g over 1e5 samples (tol 1e-9)", worst);
    return r;
}

// ---------------------------------------------------------------- C2
CheckResult check_spectrum_invariance() {
    CheckResult r{"spectrum-invariance", "C2", true, "", 0.0};
    Sampler s(202);
    const int total = 10000;
    double worst = 0.0;
    int misses = 0;
    for (int k = 0; k < total; ++k) {
        const double x = s.uniform(-1.0, 1.0);
        const cplx z1 = s.annulus(0.5, 1.2), z2 = s.annulus(0.5, 1.2);
        const cplx z0 = std::sqrt(z1 * z1 + z2 * z2 + 2.0 * x * z1 * z2);
        const Affine3 z{z0, z1, z2};
        const SpectrumVerdict v = spectrum_membership(normalize(apply_F(z)), 1e-8);
        if (!v.in_spectrum || !v.x_param) {
            ++misses;
            continue;
        }
        worst = std::max(worst, std::abs(*v.x_param - (2.0 * x * x - 1.0)));
    }
    r.pass = misses == 0 && worst <= 1e-8;
    r.detail = fmt("%d/%d F-images in spectrum, max |x' - T(x)| = %.3g (tol 1e-8)", total - misses,
                   total, worst);
    return r;
}

// ---------------------------------------------------------------- C3
CheckResult check_julia_grid() {
    CheckResult r{"julia-grid", "C3", true, "", 0.0};
    const int res = 512;
    long bad_spectrum = 0, bad_certified = 0, overlap = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : bad_spectrum, bad_certified, overlap)
#endif
    for (int j = 0; j < res; ++j) {
        for (int i = 0; i < res; ++i) {
            const double x = -3.0 + (i + 0.5) * 6.0 / res;
            const double y = -3.0 + (j + 0.5) * 6.0 / res;
            const Point3 p = normalize(Affine3{cplx(1.0, 0.0), cplx(x, 0.0), cplx(y, 0.0)});
            const Classification c = classify_point(p, 100, 1e-10);
            const bool rs = real_slice_spectrum(x, y);
            if (rs && c.kind != Classification::Kind::julia_spectrum) ++bad_spectrum;
            if (c.kind == Classification::Kind::fatou_certified && !E_exclusion_certificate(p))
                ++bad_certified;
            if (rs && c.kind == Classification::Kind::fatou_certified) ++overlap;
        }
    }
    r.pass = bad_spectrum == 0 && bad_certified == 0 && overlap == 0;
    r.detail = fmt("512^2 grid: %ld spectrum pixels misclassified, %ld uncertified Fatou, "
                   "%ld spectrum/certified overlaps",
                   bad_spectrum, bad_certified, overlap);
    return r;
}

// ---------------------------------------------------------------- C4
CheckResult check_non_normality() {
    CheckResult r{"non-normality", "C4", true, "", 0.0};
    double t = std::cos(1.0);
    double lo = t, hi = t;
    for (int n = 1; n <= 60; ++n) {
        t = 2.0 * t * t - 1.0;
        lo = std::min(lo, t);
        hi = std::max(hi, t);
    }
    r.pass = (hi - lo) >= 0.5;
    r.detail = fmt("max - min of T^n(cos 1), n <= 60: %.6f (needs >= 0.5)", hi - lo);
    return r;
}

// ---------------------------------------------------------------- C5
CheckResult check_limit_function() {
    CheckResult r{"limit-function", "C5", true, "", 0.0};
    Sampler s(505);
    int accepted = 0;
    double worst_f = 0.0, worst_fs = 0.0;
    while (accepted < 1000) {
        const Affine3 z{s.annulus(0.3, 1.0), s.annulus(0.3, 1.0), s.annulus(2.2, 3.5)};
        const Point3 p = normalize(z);
        if (!E_exclusion_certificate(p)) continue;
        ++accepted;
        worst_f = std::max(worst_f, std::abs(f_n(z, 60) - limit_f(z)));
        const OrbitTrace orbit = iterate_F(z, 60, true);
        if (orbit.terminated_at_indeterminacy || orbit.points.size() != 61) {
            r.pass = false;
            r.detail = "certified orbit unexpectedly terminated";
            return r;
        }
        worst_fs = std::max(worst_fs, fs_distance(orbit.points.back(), limit_F_star(z).coords));
    }
    r.pass = worst_f <= 1e-8 && worst_fs <= 1e-6;
    r.detail = fmt("1000 certified points: max |f_60 - f| = %.3g (tol 1e-8), "
                   "max fs(F^60, F*) = %.3g (tol 1e-6)",
                   worst_f, worst_fs);
    return r;
}

// ---------------------------------------------------------------- C6
CheckResult check_hecke() {
    CheckResult r{"hecke", "C6", true, "", 0.0};
    const LevelRep rep = build_grigorchuk_level(10);
    const std::vector<double> eig = pencil_eigenvalues(rep, {1.0, 1.0, 1.0, 1.0});
    bool inside = true;
    for (double v : eig) {
        const bool left = v >= -2.0 - 1e-8 && v <= 1e-8;
        const bool right = v >= 2.0 - 1e-8 && v <= 4.0 + 1e-8;
        if (!left && !right) inside = false;
    }
    const double maxev = eig.back();
    r.pass = inside && std::abs(maxev - 4.0) <= 1e-8;
    r.detail = fmt("level-10 a+b+c+d: range [%.9f, %.9f], union membership %s",
                   eig.front(), maxev, inside ? "holds" : "fails");
    return r;
}

// ---------------------------------------------------------------- C7
CheckResult check_dihedral_level() {
    CheckResult r{"dihedral-level", "C7", true, "", 0.0};
    const LevelRep rep = build_dihedral_level(10);
    const std::vector<double> xs = empirical_spectrum_params(rep, 1.0, 2.0);
    double lo = xs.front(), hi = xs.front();
    for (double x : xs) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    std::vector<double> sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    double gap = 0.0;
    for (std::size_t i = 1; i < sorted.size(); ++i) gap = std::max(gap, sorted[i] - sorted[i - 1]);
    const bool window = lo >= -1.0 - 1e-9 && hi <= 1.0 + 1e-9;
    const bool gap_ok = std::abs(gap - kLevel10MaxGapFixture) <= 0.1 * kLevel10MaxGapFixture;
    r.pass = window && gap_ok;
    r.detail = fmt("level-10 (1,2): x in [%.12f, %.12f], max gap %.10f vs fixture %.10f",
                   lo, hi, gap, kLevel10MaxGapFixture);
    return r;
}

// ---------------------------------------------------------------- C8
CheckResult check_fixed_points() {
    CheckResult r{"fixed-points", "C8", true, "", 0.0};
    std::string notes;

    // F: origin super-attracting
    {
        const FixedPointRecord rec = classify_fixed_point(
            MapId::F, {cplx(0, 0), cplx(0, 0), cplx(0, 0)}, cplx(1, 0), Domain::affine, 1e-12);
        double maxmod = 0.0;
        for (const cplx& mu : rec.eigenvalues) maxmod = std::max(maxmod, std::abs(mu));
        if (rec.type != FixedPointType::super_attracting || maxmod > 1e-12) {
            r.pass = false;
            notes += "[origin of F not super-attracting] ";
        }
    }
    // F: (0, +-i, -+i) repelling
    for (int s : {+1, -1}) {
        const cplx i(0.0, 1.0);
        const FixedPointRecord rec = classify_fixed_point(
            MapId::F, {cplx(0, 0), double(s) * i, double(-s) * i}, cplx(1, 0), Domain::affine, 1e-12);
        if (rec.type != FixedPointType::repelling) {
            r.pass = false;
            notes += "[(0,+-i,-+i) not repelling] ";
        }
    }
    // F: Y_F eigenvalue formulas as stated: {0, 2 z0^2 + 1, 1 - 2 z2^2} and
    // lambda1 + lambda2 = 4. The sum holds; the individual formulas are the
    // appendix's values and fail off z2 = 0 (see ledger), reported honestly.
    {
        const std::vector<cplx> samples{cplx(0, 0), cplx(0.5, 0), cplx(1, 0), cplx(2, 0),
                                        cplx(1, 0.5)};
        double worst_formula = 0.0, worst_sum = 0.0;
        for (const cplx& z2 : samples)
            for (int s : {+1, -1}) {
                const Affine3 p = y_F_point(z2, s);
                const FixedPointRecord rec = classify_fixed_point(
                    MapId::F, {p[0], p[1], p[2]}, cplx(1, 0), Domain::affine, 1e-10);
                std::vector<cplx> eigs = rec.eigenvalues;
                // pair off the claimed set greedily
                std::vector<cplx> want{cplx(0, 0), 2.0 * p[0] * p[0] + 1.0,
                                       1.0 - 2.0 * z2 * z2};
                double mismatch = 0.0;
                for (const cplx& w : want) {
                    double best = 1e300;
                    std::size_t at = 0;
                    for (std::size_t idx = 0; idx < eigs.size(); ++idx) {
                        if (std::abs(eigs[idx] - w) < best) {
                            best = std::abs(eigs[idx] - w);
                            at = idx;
                        }
                    }
                    mismatch = std::max(mismatch, best);
                    if (!eigs.empty()) eigs.erase(eigs.begin() + long(at));
                }
                worst_formula = std::max(worst_formula, mismatch);
                // sum of the two nonzero eigenvalues
                cplx sum(0.0, 0.0);
                for (const cplx& mu : rec.eigenvalues) sum += mu;
                worst_sum = std::max(worst_sum, std::abs(sum - 4.0));
            }
        if (worst_sum > 1e-10) {
            r.pass = false;
            notes += fmt("[Y_F eigenvalue sum off by %.3g] ", worst_sum);
        }
        if (worst_formula > 1e-10) {
            r.pass = false;
            notes += fmt("[Y_F eigenvalues differ from the stated formulas by %.3g "
                         "(actual spectrum is {0,1,3}; see decisions ledger)] ",
                         worst_formula);
        }
    }
    // G families: residual <= 1e-9 enforced inside fixed_points_G
    try {
        const std::vector<cplx> gammas{cplx(1, 0),    cplx(2, 0),   cplx(0.5, 0), cplx(-1, 0),
                                       cplx(3, 0),    cplx(1, 1),   cplx(2, -1),  cplx(0.25, 0),
                                       cplx(-0.75, 0), cplx(0, 4)};
        const FixedPointReport rep = fixed_points_G(gammas, Domain::affine);
        int y2 = 0;
        for (const auto& rec : rep.records)
            if (rec.label.rfind("Y_2", 0) == 0) ++y2;
        if (y2 != 8) {
            r.pass = false;
            notes += fmt("[expected 8 Y_2 points, got %d] ", y2);
        }
    } catch (const Error& e) {
        r.pass = false;
        notes += std::string("[G family verification failed: ") + e.what() + "] ";
    }
    // [-1:-2:1:1:1]: G(z) = -4 z exactly in rational arithmetic
    {
        const RationalComplex m1(-1L), m2(-2L), one(1L);
        const RAffine5 z{m1, m2, one, one, one};
        const RAffine5 img = apply_G(z);
        const RationalComplex want(-4L);
        bool ok = true;
        for (std::size_t i = 0; i < 5; ++i)
            if (!(img[i] == want * z[i])) ok = false;
        if (!ok) {
            r.pass = false;
            notes += "[G(-1,-2,1,1,1) != -4 z exactly] ";
        }
    }
    r.detail = r.pass ? "origin/(0,+-i,-+i)/Y_F sum/G families/[-1:-2:1:1:1] all verified"
                      : notes;
    return r;
}

// ---------------------------------------------------------------- C9
CheckResult check_g_semiconjugacy() {
    CheckResult r{"g-semiconjugacy", "C9", true, "", 0.0};
    Sampler s(909);
    // exact on Gaussian rationals
    for (int k = 0; k < 1000; ++k) {
        const std::array<RationalComplex, 3> w{s.gaussian_rational(), s.gaussian_rational(),
                                               s.gaussian_rational()};
        const auto lhs = embed_X(apply_F(w));
        const auto rhs = apply_G(embed_X(w));
        for (std::size_t i = 0; i < 5; ++i)
            if (!(lhs[i] == rhs[i])) {
                r.pass = false;
                r.detail = "exact X(F(w)) != G(X(w))";
                return r;
            }
    }
    // floating samples
    double worst = 0.0;
    for (int k = 0; k < 100000; ++k) {
        const Affine3 w{s.disk(1.5), s.disk(1.5), s.disk(1.5)};
        const Affine5 lhs = embed_X(apply_F(w));
        const Affine5 rhs = apply_G(embed_X(w));
        double scale = std::max(norm_inf(lhs), 1.0);
        for (std::size_t i = 0; i < 5; ++i)
            worst = std::max(worst, std::abs(lhs[i] - rhs[i]) / scale);
    }
    // pencil identity at level 8: sorted spectra of w1 a + w2 t and of
    // w1 a + (w2/2)(b+c+d) - (w2/2) I agree
    const LevelRep dih = build_dihedral_level(8);
    const LevelRep gri = build_grigorchuk_level(8);
    double worst_pencil = 0.0;
    for (int k = 0; k < 5; ++k) {
        const double w1 = s.uniform(-2.0, 2.0), w2 = s.uniform(-2.0, 2.0);
        const std::vector<double> e1 = pencil_eigenvalues(dih, {w1, w2});
        const std::vector<double> e2 =
            pencil_eigenvalues(gri, {w1, 0.5 * w2, 0.5 * w2, 0.5 * w2});
        for (std::size_t i = 0; i < e1.size(); ++i)
            worst_pencil = std::max(worst_pencil, std::abs(e1[i] - (e2[i] - 0.5 * w2)));
    }
    r.pass = r.pass && worst <= 1e-12 && worst_pencil <= 1e-9;
    r.detail = fmt("exact on 1e3 rational samples; float max rel %.3g (tol 1e-12); "
                   "level-8 pencil multiset gap %.3g (tol 1e-9)",
                   worst, worst_pencil);
    return r;
}

// ---------------------------------------------------------------- C10
CheckResult check_norm_bounds() {
    CheckResult r{"norm-bounds", "C10", true, "", 0.0};
    Sampler s(1010);
    double worstF = 0.0, worstG = 0.0;
    for (int k = 0; k < 100000; ++k) {
        const Affine3 z{s.disk(2.0), s.disk(2.0), s.disk(2.0)};
        const double n = norm2(z);
        worstF = std::max(worstF, norm2(apply_F(z)) - n * n * n);
    }
    for (int k = 0; k < 100000; ++k) {
        const Affine5 z{s.disk(1.5), s.disk(1.5), s.disk(1.5), s.disk(1.5), s.disk(1.5)};
        const double n = norm1(z);
        worstG = std::max(worstG, norm1(apply_G(z)) - n * n * n);
    }
    r.pass = worstF <= 1e-12 && worstG <= 1e-12;
    r.detail = fmt("max ||F(z)||_2 - ||z||_2^3 = %.3g, max ||G(z)||_1 - ||z||_1^3 = %.3g "
                   "(slack 1e-12)",
                   worstF, worstG);
    return r;
}

// ---------------------------------------------------------------- C11
CheckResult check_identities() {
    CheckResult r{"identities", "C11", true, "", 0.0};
    Sampler s(1111);
    std::string notes;

    // (a) 2 T_m T_n = T_{m+n} + T_{|m-n|}
    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const unsigned m = unsigned(s.rng() % 64) + 1, n = unsigned(s.rng() % 64) + 1;
        const cplx x(s.uniform(-1.0, 1.0), s.uniform(-1e-3, 1e-3));
        const cplx lhs = 2.0 * tchebyshev_Tk(m, x) * tchebyshev_Tk(n, x);
        const cplx rhs = tchebyshev_Tk(m + n, x) + tchebyshev_Tk(m > n ? m - n : n - m, x);
        worst = std::max(worst, rel_err(lhs, rhs));
    }
    if (worst > 1e-9) {
        r.pass = false;
        notes += fmt("[product identity err %.3g] ", worst);
    }

    // (b) prod_{j=0}^{n} T^j(x) = sin(2^{n+1} arccos x) / (2^{n+1} sin(arccos x))
    worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const int n = int(s.rng() % 9); // 0..8
        const double theta = s.uniform(0.01, M_PI - 0.01);
        const double x = std::cos(theta);
        double prod = 1.0, t = x;
        for (int j = 0; j <= n; ++j) {
            prod *= t;
            t = 2.0 * t * t - 1.0;
        }
        const double denom = std::exp2(double(n + 1)) * std::sin(theta);
        const double rhs = std::sin(std::exp2(double(n + 1)) * theta) / denom;
        worst = std::max(worst, rel_err(cplx(prod, 0), cplx(rhs, 0)));
    }
    if (worst > 1e-7) {
        r.pass = false;
        notes += fmt("[sine quotient err %.3g] ", worst);
    }

    // (c) sum_{k=1}^{n-1} csc(2^k xi) = cot(xi) - cot(2^{n-1} xi)
    worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const int n = 2 + int(s.rng() % 19); // 2..20
        const double re = s.uniform(0.1, 3.0);
        double im = s.uniform(1e-3, 1.0);
        if (s.rng() & 1) im = -im;
        const cplx xi(re, im);
        cplx lhs(0.0, 0.0);
        double scale = std::exp2(double(n - 1));
        for (int j = 1; j <= n - 1; ++j) lhs += safe_csc(std::exp2(double(j)) * xi);
        const cplx rhs = safe_cot(xi) - safe_cot(scale * xi);
        worst = std::max(worst, rel_err(lhs, rhs));
    }
    if (worst > 1e-9) {
        r.pass = false;
        notes += fmt("[csc-cot telescoping err %.3g] ", worst);
    }

    // (d) | |f| - 1 | <= 1e-9 iff tau real in [-1,1]
    int wrong = 0;
    for (int k = 0; k < 10000; ++k) {
        const bool inside = (k % 2) == 0;
        cplx t;
        if (inside) {
            t = cplx(s.uniform(-1.0, 1.0), 0.0);
        } else if (s.rng() & 1) {
            double m = s.uniform(1.01, 3.0);
            t = cplx(s.rng() & 1 ? m : -m, 0.0);
        } else {
            double im = s.uniform(0.01, 1.0);
            t = cplx(s.uniform(-1.5, 1.5), s.rng() & 1 ? im : -im);
        }
        // z with tau(z) = t: z1 = z2 = 1, z0^2 = 2 + 2t
        const cplx z0 = std::sqrt(2.0 + 2.0 * t);
        const Affine3 z{z0, cplx(1.0, 0.0), cplx(1.0, 0.0)};
        const bool unit = std::abs(std::abs(limit_f(z)) - 1.0) <= 1e-9;
        const ExtendedComplex tv = tau(z);
        const bool on_segment = !tv.is_infinite() && std::abs(tv.value().imag()) <= 1e-9 &&
                                std::abs(tv.value().real()) <= 1.0 + 1e-9;
        if (unit != on_segment) ++wrong;
    }
    if (wrong > 0) {
        r.pass = false;
        notes += fmt("[unit-circle characterization: %d mismatches] ", wrong);
    }

    r.detail = r.pass ? "product, sine-quotient, csc-cot and unit-circle identities hold "
                        "on 1e4 samples each"
                      : notes;
    return r;
}

// ---------------------------------------------------------------- C12
CheckResult check_indeterminacy() {
    CheckResult r{"indeterminacy", "C12", true, "", 0.0};
    std::string notes;

    // 20 zeta values with rational tau-roots: zeta = 2 - 4 q^2, q = k/21
    int generated = 0, exact_ok = 0;
    for (int k = 1; k <= 20 && r.pass; ++k) {
        const Rational q(k, 21);
        const Rational zeta_r = Rational(2) - Rational(4) * q * q;
        const cplx zeta(static_cast<double>(zeta_r), 0.0);
        std::vector<Point3> pts;
        try {
            pts = generate_In_prime(3, zeta, +1);
            const auto neg = generate_In_prime(3, zeta, -1);
            pts.insert(pts.end(), neg.begin(), neg.end());
        } catch (const Error& e) {
            r.pass = false;
            notes += fmt("[generate_In_prime failed at k=%d: %s] ", k, e.what());
            break;
        }
        generated += int(pts.size());
        // exact counterparts: x = +-q, z = (s/(2x), zeta, (1-zeta)/(2x))
        std::vector<RAffine3> exact;
        for (int xs : {+1, -1})
            for (int ss : {+1, -1}) {
                const Rational x = xs > 0 ? q : -q;
                const RationalComplex rx(Rational(1) / (2 * x));
                const RationalComplex s_over(ss > 0 ? rx : -rx);
                const RationalComplex zr(zeta_r);
                const RationalComplex third((Rational(1) - zeta_r) / (2 * x));
                exact.push_back(RAffine3{s_over, zr, third});
            }
        for (const auto& ez : exact) {
            const IndeterminacyVerdict v = in_In_exact(ez, 3);
            if (!v.member || *v.first_hit_step != 2) continue;
            // zero vector at step 3, exactly
            RAffine3 cur = ez;
            for (int step = 0; step < 3; ++step) cur = apply_F(cur);
            if (is_zero_vector(cur)) ++exact_ok;
        }
        // every float point matches one exact point
        for (const Point3& p : pts) {
            bool matched = false;
            for (const auto& ez : exact)
                if (fs_distance(p.coords, to_cplx(ez)) < 1e-9) matched = true;
            if (!matched) {
                r.pass = false;
                notes += fmt("[unmatched I_3' point at k=%d] ", k);
            }
        }
    }
    if (exact_ok < 20 * 4) {
        r.pass = false;
        notes += fmt("[only %d/80 exact orbits reach I1 at step 2 and 0 at step 3] ", exact_ok);
    }

    // Prop 3.6 on 1e3 rational J-samples, exactly
    Sampler s(1212);
    int facts_ok = 0;
    for (int k = 0; k < 1000; ++k) {
        RationalComplex z1 = s.gaussian_rational(), z2 = s.gaussian_rational(),
                        z3 = s.gaussian_rational(), z4 = s.gaussian_rational();
        if (z1.is_zero()) z1 = RationalComplex(1L);
        if ((z2 + z3).is_zero()) z2 = z2 + RationalComplex(1L);
        const RationalComplex sign = (k & 1) ? RationalComplex(1L) : RationalComplex(-1L);
        const RationalComplex z0 = sign * (z2 + z3) - z4;
        const RAffine5 z{z0, z1, z2, z3, z4};
        const JOrbitFacts facts = J_orbit_facts_exact(z);
        if (facts.image_in_spectrum && facts.second_image_zero) ++facts_ok;
    }
    if (facts_ok != 1000) {
        r.pass = false;
        notes += fmt("[Prop 3.6 facts verified on %d/1000 J samples] ", facts_ok);
    }

    r.detail = r.pass ? fmt("%d I_3' points generated over 20 zeta values; 80/80 exact orbits "
                            "collapse on schedule; 1000/1000 J samples verified",
                            generated)
                      : notes;
    return r;
}

using CheckFn = CheckResult (*)();

struct NamedCheck {
    const char* name;
    CheckFn fn;
};

constexpr NamedCheck kChecks[] = {
    {"semiconjugacy", check_semiconjugacy},
    {"spectrum-invariance", check_spectrum_invariance},
    {"julia-grid", check_julia_grid},
    {"non-normality", check_non_normality},
    {"limit-function", check_limit_function},
    {"hecke", check_hecke},
    {"dihedral-level", check_dihedral_level},
    {"fixed-points", check_fixed_points},
    {"g-semiconjugacy", check_g_semiconjugacy},
    {"norm-bounds", check_norm_bounds},
    {"identities", check_identities},
    {"indeterminacy", check_indeterminacy},
};

} // namespace

std::vector<std::string> verify_suite_names() {
    std::vector<std::string> names;
    for (const NamedCheck& c : kChecks) names.push_back(c.name);
    return names;
}

CheckResult run_check(const std::string& name) {
    for (const NamedCheck& c : kChecks) {
        if (name == c.name) {
            const auto start = std::chrono::steady_clock::now();
            CheckResult r = c.fn();
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            // runtime budgets stated by the criteria
            if (r.criterion == "C1" && r.seconds >= 5.0) {
                r.pass = false;
                r.detail += fmt(" [runtime %.1fs exceeds 5s]", r.seconds);
            }
            if ((r.criterion == "C3" || r.criterion == "C6") && r.seconds >= 60.0) {
                r.pass = false;
                r.detail += fmt(" [runtime %.1fs exceeds 60s]", r.seconds);
            }
            return r;
        }
    }
    throw InvalidConfigError("unknown check '" + name + "'");
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& names) {
    std::vector<CheckResult> out;
    if (names.empty()) {
        for (const NamedCheck& c : kChecks) out.push_back(run_check(c.name));
        return out;
    }
    for (const std::string& n : names) out.push_back(run_check(n));
    return out;
}

} // namespace specdyn
