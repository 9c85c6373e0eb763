#include "specdyn/classification.hpp"

#include <algorithm>
#include <cmath>

#include "specdyn/grigorchuk_map.hpp"
#include "specdyn/roots.hpp"

namespace specdyn {

Classification classify_point(const Point3& z, int max_iter, double tol) {
    Classification out;

    const IndeterminacyVerdict ind = in_In(z, max_iter);
    if (ind.member) {
        out.kind = Classification::Kind::julia_indeterminacy;
        out.step = ind.first_hit_step;
        return out;
    }

    const SpectrumVerdict sv = spectrum_membership(z, tol);
    if (sv.in_spectrum) {
        out.kind = Classification::Kind::julia_spectrum;
        out.x_param = sv.x_param;
        return out;
    }

    if (E_exclusion_certificate(z)) {
        out.kind = Classification::Kind::fatou_certified;
        return out;
    }

    // numerical convergence: ten consecutive near-stationary steps
    Affine3 cur = z.coords;
    int stable = 0;
    for (int k = 0; k < max_iter; ++k) {
        const Affine3 img = apply_F(cur);
        if (norm_inf(img) < 1e-300) break;
        const Affine3 next = normalize(img).coords;
        stable = (fs_distance(cur, next) < 1e-10) ? stable + 1 : 0;
        cur = next;
        if (stable >= 10) {
            out.kind = Classification::Kind::fatou_numerical;
            out.limit = normalize(cur);
            return out;
        }
    }
    return out;
}

std::string to_string(Classification::Kind kind) {
    switch (kind) {
        case Classification::Kind::julia_spectrum: return "julia_spectrum";
        case Classification::Kind::julia_indeterminacy: return "julia_indeterminacy";
        case Classification::Kind::fatou_certified: return "fatou_certified";
        case Classification::Kind::fatou_numerical: return "fatou_numerical";
        case Classification::Kind::unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(FixedPointType t) {
    switch (t) {
        case FixedPointType::super_attracting: return "super_attracting";
        case FixedPointType::attracting: return "attracting";
        case FixedPointType::repelling: return "repelling";
        case FixedPointType::parabolic: return "parabolic";
        case FixedPointType::saddle: return "saddle";
    }
    return "parabolic";
}

std::vector<cplx> jacobian_F(const Affine3& z) {
    const cplx z0 = z[0], z1 = z[1], z2 = z[2];
    std::vector<cplx> J = {
        3.0 * z0 * z0 - z1 * z1 - z2 * z2, -2.0 * z0 * z1, -2.0 * z0 * z2,
        cplx(0.0, 0.0), 2.0 * z1 * z2, z1 * z1,
        2.0 * z0 * z2, cplx(0.0, 0.0), z0 * z0 - 3.0 * z2 * z2,
    };
    // determinant must match the closed form
    const cplx det = J[0] * (J[4] * J[8] - J[5] * cplx(0.0, 0.0)) - J[1] * (J[3] * J[8] - J[5] * J[6]) +
                     J[2] * (J[3] * cplx(0.0, 0.0) - J[4] * J[6]);
    const cplx closed = 6.0 * z1 * z2 * (z0 * z0 - z2 * z2) * (z0 * z0 - z1 * z1 - z2 * z2);
    const double scale = std::pow(std::max(1.0, norm_inf(z)), 6);
    if (std::abs(det - closed) > 1e-10 * scale)
        throw VerificationFailureError("jacobian_F determinant disagrees with the closed form");
    return J;
}

std::vector<cplx> jacobian_G(const Affine5& z) {
    const cplx b = z[0] + z[4]; // beta
    const cplx e = z[2] + z[3]; // eta
    const cplx a = b * b - e * e;
    const cplx z0 = z[0], z1 = z[1], z2 = z[2], z3 = z[3], z4 = z[4];
    return {
        a + 2.0 * z0 * b - z1 * z1, -2.0 * z1 * b, -2.0 * z0 * e, -2.0 * z0 * e, 2.0 * z0 * b - z1 * z1,
        cplx(0.0, 0.0), 2.0 * z1 * e, z1 * z1, z1 * z1, cplx(0.0, 0.0),
        2.0 * z4 * b, cplx(0.0, 0.0), -2.0 * z4 * e, -2.0 * z4 * e, a + 2.0 * z4 * b,
        2.0 * z2 * b, cplx(0.0, 0.0), a - 2.0 * z2 * e, -2.0 * z2 * e, 2.0 * z2 * b,
        2.0 * z3 * b, cplx(0.0, 0.0), -2.0 * z3 * e, a - 2.0 * z3 * e, 2.0 * z3 * b,
    };
}

namespace {

std::vector<cplx> map_apply(MapId map, const std::vector<cplx>& z) {
    if (map == MapId::F) {
        const Affine3 v{z[0], z[1], z[2]};
        const Affine3 w = apply_F(v);
        return {w[0], w[1], w[2]};
    }
    const Affine5 v{z[0], z[1], z[2], z[3], z[4]};
    const Affine5 w = apply_G(v);
    return {w[0], w[1], w[2], w[3], w[4]};
}

std::vector<cplx> map_jacobian(MapId map, const std::vector<cplx>& z) {
    if (map == MapId::F) return jacobian_F(Affine3{z[0], z[1], z[2]});
    return jacobian_G(Affine5{z[0], z[1], z[2], z[3], z[4]});
}

double vec_norm2(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const cplx& c : v) s += abs2(c);
    return std::sqrt(s);
}

FixedPointType classify_moduli(const std::vector<cplx>& eigenvalues, bool projective_repelling) {
    constexpr double kZero = 1e-12;
    constexpr double kUnit = 1e-8;
    bool all_zero = true, any_unit = false, all_below = true, all_above = true;
    for (const cplx& mu : eigenvalues) {
        const double m = std::abs(mu);
        if (m > kZero) all_zero = false;
        if (std::abs(m - 1.0) <= kUnit) any_unit = true;
        if (m >= 1.0) all_below = false;
        if (m <= 1.0 && !(projective_repelling && m <= kZero)) all_above = false;
    }
    if (all_zero) return FixedPointType::super_attracting;
    if (any_unit) return FixedPointType::parabolic;
    if (all_below) return FixedPointType::attracting;
    if (all_above) return FixedPointType::repelling;
    return FixedPointType::saddle;
}

// LU solve with partial pivoting for the small Newton systems.
std::vector<cplx> solve_dense(std::vector<cplx> A, std::vector<cplx> b, std::size_t n) {
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(A[r * n + col]) > std::abs(A[piv * n + col])) piv = r;
        if (std::abs(A[piv * n + col]) < 1e-300) throw Error("singular Newton system");
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(A[piv * n + c], A[col * n + c]);
            std::swap(b[piv], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const cplx f = A[r * n + col] / A[col * n + col];
            A[r * n + col] = cplx(0.0, 0.0);
            for (std::size_t c = col + 1; c < n; ++c) A[r * n + c] -= f * A[col * n + c];
            b[r] -= f * b[col];
        }
    }
    std::vector<cplx> x(n);
    for (std::size_t r = n; r-- > 0;) {
        cplx s = b[r];
        for (std::size_t c = r + 1; c < n; ++c) s -= A[r * n + c] * x[c];
        x[r] = s / A[r * n + r];
    }
    return x;
}

} // namespace

FixedPointRecord classify_fixed_point(MapId map, const std::vector<cplx>& z, cplx lambda,
                                      Domain domain, double residual_tol) {
    const std::size_t n = z.size();
    if ((map == MapId::F && n != 3) || (map == MapId::G && n != 5))
        throw DimensionMismatchError("classify_fixed_point: point dimension does not match the map");

    FixedPointRecord rec;
    rec.location = z;
    rec.lambda = lambda;

    std::vector<cplx> img = map_apply(map, z);
    std::vector<cplx> diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = img[i] - lambda * z[i];
    const double nz = vec_norm2(z);
    const double scale = std::max(nz, nz * nz * nz);
    rec.residual = scale > 0.0 ? vec_norm2(diff) / scale : vec_norm2(diff);
    if (rec.residual > residual_tol)
        throw NotFixedError("residual " + std::to_string(rec.residual) + " exceeds tolerance");

    std::vector<cplx> eig = eigenvalues_small(map_jacobian(map, z), n);

    if (domain == Domain::projective) {
        // drop the radial eigenvalue (3*lambda for a cubic map), rescale the
        // rest to projective multipliers
        const cplx radial = 3.0 * lambda;
        std::size_t drop = 0;
        double best = std::abs(eig[0] - radial);
        for (std::size_t i = 1; i < eig.size(); ++i) {
            const double d = std::abs(eig[i] - radial);
            if (d < best) {
                best = d;
                drop = i;
            }
        }
        std::vector<cplx> mult;
        for (std::size_t i = 0; i < eig.size(); ++i)
            if (i != drop) mult.push_back(eig[i] / lambda);
        rec.eigenvalues = mult;
        rec.type = classify_moduli(mult, true);
    } else {
        rec.eigenvalues = eig;
        rec.type = classify_moduli(eig, false);
    }
    return rec;
}

Affine3 y_F_point(cplx z2, int sign) {
    const cplx z0 = std::sqrt(cplx(1.0, 0.0) + z2 * z2);
    return {sign >= 0 ? z0 : -z0, cplx(0.0, 0.0), z2};
}

FixedPointReport fixed_points_F(Domain domain, const std::vector<cplx>& yf_z2_samples) {
    FixedPointReport report;
    const cplx i(0.0, 1.0);
    if (domain == Domain::affine) {
        auto add = [&](const Affine3& p, const std::string& label) {
            FixedPointRecord r = classify_fixed_point(MapId::F, {p[0], p[1], p[2]}, cplx(1.0, 0.0),
                                                      Domain::affine, 1e-12);
            r.label = label;
            report.records.push_back(std::move(r));
        };
        add({cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)}, "origin");
        add({cplx(0.0, 0.0), i, -i}, "(0, i, -i)");
        add({cplx(0.0, 0.0), -i, i}, "(0, -i, i)");
        for (const cplx& z2 : yf_z2_samples)
            for (int s : {+1, -1}) {
                const Affine3 p = y_F_point(z2, s);
                add(p, "Y_F sample z2=" + format_complex(z2) + (s > 0 ? " (+)" : " (-)"));
            }
        report.families.push_back({"Y_F", "z1 = 0, z0^2 - z2^2 = 1"});
    } else {
        report.families.push_back({"fixed line", "z1 = 0, z0 != +-z2"});
        auto add = [&](const Affine3& p, cplx lambda, const std::string& label) {
            FixedPointRecord r = classify_fixed_point(MapId::F, {p[0], p[1], p[2]}, lambda,
                                                      Domain::projective, 1e-12);
            r.label = label;
            report.records.push_back(std::move(r));
        };
        // samples of the fixed line: F(1,0,c) = (1-c^2)(1,0,c)
        for (const cplx& c : {cplx(0.0, 0.0), cplx(2.0, 0.0), cplx(0.0, 3.0)})
            add({cplx(1.0, 0.0), cplx(0.0, 0.0), c}, cplx(1.0, 0.0) - c * c,
                "line sample [1:0:" + format_complex(c) + "]");
        add({cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(1.0, 0.0)}, cplx(-1.0, 0.0), "[0:0:1]");
        add({cplx(0.0, 0.0), cplx(1.0, 0.0), cplx(-1.0, 0.0)}, cplx(-1.0, 0.0), "[0:1:-1]");
    }
    return report;
}

Affine5 y1_point(cplx gamma, int sign) {
    const cplx root = std::sqrt(cplx(1.0, 0.0) + 4.0 * gamma * gamma);
    const cplx z0 = -gamma + (sign >= 0 ? root : -root);
    return {z0, cplx(0.0, 0.0), gamma, gamma, gamma};
}

std::vector<Affine5> y2_points() {
    std::vector<Affine5> pts;
    const cplx iu(0.0, 1.0);
    for (int ks : {+1, -1}) { // primitive cube root and its conjugate
        const cplx al = std::polar(1.0, ks * 2.0 * M_PI / 3.0);
        for (int ws : {+1, -1}) {
            const cplx w = (-4.0 * al - 3.0 + double(ws) * iu * std::sqrt(8.0 * al + 3.0)) /
                           (2.0 * al + 10.0);
            for (int bs : {+1, -1}) {
                const cplx beta = double(bs) * std::sqrt(w);
                Affine5 z{beta / (beta * beta * (al - 1.0) - 1.0), -1.0 / beta, al * beta,
                          al * al * beta, beta};
                // a few damped Newton steps on G(z) - z
                for (int it = 0; it < 6; ++it) {
                    const Affine5 img = apply_G(z);
                    std::vector<cplx> r(5);
                    for (int k = 0; k < 5; ++k) r[k] = img[std::size_t(k)] - z[std::size_t(k)];
                    std::vector<cplx> J = jacobian_G(z);
                    for (int k = 0; k < 5; ++k) J[std::size_t(k) * 5 + std::size_t(k)] -= 1.0;
                    std::vector<cplx> step;
                    try {
                        step = solve_dense(J, r, 5);
                    } catch (const Error&) {
                        break;
                    }
                    for (int k = 0; k < 5; ++k) z[std::size_t(k)] -= 0.9 * step[std::size_t(k)];
                }
                pts.push_back(z);
            }
        }
    }
    return pts;
}

FixedPointReport fixed_points_G(const std::vector<cplx>& gamma_samples, Domain domain) {
    FixedPointReport report;
    auto add = [&](const Affine5& p, cplx lambda, Domain d, const std::string& label) {
        FixedPointRecord r;
        try {
            r = classify_fixed_point(MapId::G, {p[0], p[1], p[2], p[3], p[4]}, lambda, d, 1e-9);
        } catch (const NotFixedError& err) {
            throw VerificationFailureError(std::string("fixed point candidate '") + label +
                                           "' failed verification: " + err.what());
        }
        r.label = label;
        report.records.push_back(std::move(r));
    };

    const cplx zero(0.0, 0.0), one(1.0, 0.0);
    add({zero, zero, zero, zero, zero}, one, Domain::affine, "origin");
    add({one, zero, zero, zero, zero}, one, Domain::affine, "(1,0,0,0,0)");
    add({-one, zero, zero, zero, zero}, one, Domain::affine, "(-1,0,0,0,0)");
    for (const cplx& g : gamma_samples) {
        if (g == zero) throw InvalidConfigError("Y_1 requires gamma != 0");
        for (int s : {+1, -1})
            add(y1_point(g, s), one, Domain::affine,
                "Y_1 gamma=" + format_complex(g) + (s > 0 ? " (+)" : " (-)"));
    }
    int k = 0;
    for (const Affine5& p : y2_points()) add(p, one, Domain::affine, "Y_2 #" + std::to_string(++k));

    if (domain == Domain::projective) {
        report.families.push_back({"phi(Y_1)", "projectivized Y_1"});
        report.families.push_back({"phi(Y_2)", "projectivized Y_2"});
        add({-one, cplx(-2.0, 0.0), one, one, one}, cplx(-4.0, 0.0), Domain::projective,
            "[-1:-2:1:1:1]");
    }
    return report;
}

GOriginY1Report classify_G_origin_and_Y1(const std::vector<cplx>& gamma_samples) {
    GOriginY1Report rep;
    const cplx zero(0.0, 0.0), one(1.0, 0.0);
    rep.origin =
        classify_fixed_point(MapId::G, {zero, zero, zero, zero, zero}, one, Domain::affine, 1e-12);
    rep.origin.label = "origin";

    rep.y1_all_parabolic = true;
    for (const cplx& g : gamma_samples)
        for (int s : {+1, -1}) {
            const Affine5 p = y1_point(g, s);
            FixedPointRecord r =
                classify_fixed_point(MapId::G, {p[0], p[1], p[2], p[3], p[4]}, one, Domain::affine, 1e-9);
            r.label = "Y_1 gamma=" + format_complex(g) + (s > 0 ? " (+)" : " (-)");
            if (r.type != FixedPointType::parabolic) rep.y1_all_parabolic = false;
            rep.y1.push_back(std::move(r));
        }

    rep.y2_none_attracting = true;
    int k = 0;
    for (const Affine5& p : y2_points()) {
        FixedPointRecord r =
            classify_fixed_point(MapId::G, {p[0], p[1], p[2], p[3], p[4]}, one, Domain::affine, 1e-9);
        r.label = "Y_2 #" + std::to_string(++k);
        double maxmod = 0.0;
        for (const cplx& mu : r.eigenvalues) maxmod = std::max(maxmod, std::abs(mu));
        if (!(maxmod > 1.0)) rep.y2_none_attracting = false;
        rep.y2.push_back(std::move(r));
    }
    return rep;
}

} // namespace specdyn
