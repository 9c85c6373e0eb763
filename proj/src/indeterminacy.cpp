#include "specdyn/indeterminacy.hpp"

#include <cmath>

#include "specdyn/roots.hpp"

namespace specdyn {

std::vector<Point3> indeterminacy_I1() {
    const cplx one(1.0, 0.0), zero(0.0, 0.0);
    return {
        normalize(Affine3{one, one, zero}),  normalize(Affine3{-one, one, zero}),
        normalize(Affine3{zero, one, zero}), normalize(Affine3{one, zero, one}),
        normalize(Affine3{-one, zero, one}),
    };
}

std::vector<RAffine3> indeterminacy_I1_exact() {
    const RationalComplex one(1L), zero(0L);
    return {
        RAffine3{one, one, zero},  RAffine3{RationalComplex(-1L), one, zero},
        RAffine3{zero, one, zero}, RAffine3{one, zero, one},
        RAffine3{RationalComplex(-1L), zero, one},
    };
}

bool in_I2(const Point3& z, double tol) {
    for (const Point3& p : indeterminacy_I1())
        if (projectively_equal(z, p, 1e-10)) return true;
    const Affine3& c = z.coords;
    const double scale = norm_inf(c);
    if (std::abs(c[2]) <= tol * scale) return false;
    const cplx ratio = c[0] / c[2];
    return std::abs(ratio - cplx(1.0, 0.0)) <= tol || std::abs(ratio + cplx(1.0, 0.0)) <= tol;
}

bool in_I2_exact(const RAffine3& z) {
    for (const RAffine3& p : indeterminacy_I1_exact())
        if (projectively_equal_exact(z, p)) return true;
    if (z[2].is_zero()) return false;
    const RationalComplex r = z[0] / z[2];
    return r == RationalComplex(1L) || r == RationalComplex(-1L);
}

IndeterminacyVerdict in_In(const Point3& z, int n) {
    if (n < 1) throw InvalidConfigError("in_In requires n >= 1");
    IndeterminacyVerdict v;
    v.exact = false;
    Affine3 cur = z.coords;
    for (int k = 0; k < n; ++k) {
        const Affine3 img = apply_F(cur);
        // cur is normalized, so its scale is 1. Rounding through a few cubic
        // steps leaves exact members with image norms slightly above 1e-12,
        // so the detection threshold carries headroom; exact mode remains
        // the authority.
        if (norm_inf(img) < 1e-9) {
            v.member = true;
            v.first_hit_step = k;
            return v;
        }
        cur = normalize(img).coords;
    }
    return v;
}

IndeterminacyVerdict in_In_exact(const RAffine3& z, int n) {
    if (n < 1) throw InvalidConfigError("in_In requires n >= 1");
    IndeterminacyVerdict v;
    v.exact = true;
    RAffine3 cur = normalize_exact(z);
    for (int k = 0; k < n; ++k) {
        const RAffine3 img = apply_F(cur);
        if (is_zero_vector(img)) {
            v.member = true;
            v.first_hit_step = k;
            return v;
        }
        cur = normalize_exact(img);
    }
    return v;
}

namespace {

// eta(x) = 2^{n-2} prod_{k=0}^{n-3} T^k(x) and
// A(x) = sum_{j=1}^{n-2} 2^{n-2-j} prod_{k=j}^{n-3} T^k(x), as polynomials.
struct TemplatePolys {
    Poly eta;
    Poly A;
};

TemplatePolys template_polys(int n) {
    std::vector<Poly> Tpow; // T^k(x) for k = 0..n-3
    Tpow.push_back(Poly{cplx(0.0, 0.0), cplx(1.0, 0.0)});
    for (int k = 1; k <= n - 3; ++k) {
        Poly sq = poly_mul(Tpow.back(), Tpow.back());
        Poly next = poly_scale(sq, cplx(2.0, 0.0));
        next[0] -= cplx(1.0, 0.0);
        Tpow.push_back(next);
    }
    TemplatePolys tp;
    tp.eta = Poly{cplx(std::pow(2.0, n - 2), 0.0)};
    for (int k = 0; k <= n - 3; ++k) tp.eta = poly_mul(tp.eta, Tpow[std::size_t(k)]);
    tp.A = Poly{cplx(0.0, 0.0)};
    for (int j = 1; j <= n - 2; ++j) {
        Poly term{cplx(std::pow(2.0, n - 2 - j), 0.0)};
        for (int k = j; k <= n - 3; ++k) term = poly_mul(term, Tpow[std::size_t(k)]);
        tp.A = poly_add(tp.A, term);
    }
    return tp;
}

} // namespace

std::optional<Affine3> In_prime_template(int n, cplx zeta, int sign, cplx x) {
    const TemplatePolys tp = template_polys(n);
    const cplx eta = poly_eval(tp.eta, x);
    const cplx A = poly_eval(tp.A, x);
    if (std::abs(eta) < 1e-12) return std::nullopt;
    const cplx s(sign >= 0 ? 1.0 : -1.0, 0.0);
    return Affine3{s / eta, zeta, (cplx(1.0, 0.0) - zeta * A) / eta};
}

std::vector<Point3> generate_In_prime(int n, cplx zeta, int sign) {
    if (n < 3 || n > 5) throw InvalidConfigError("generate_In_prime supports n in {3,4,5}");
    if (zeta == cplx(0.0, 0.0)) throw InvalidConfigError("generate_In_prime requires zeta != 0");

    // Consistency equation tau(p(x)) = x with denominators cleared:
    //   zeta*eta^2 + zeta*A^2 - 2A + 2x*eta - 2x*zeta*A*eta = 0
    const TemplatePolys tp = template_polys(n);
    const Poly X{cplx(0.0, 0.0), cplx(1.0, 0.0)};
    Poly Q = poly_scale(poly_mul(tp.eta, tp.eta), zeta);
    Q = poly_add(Q, poly_scale(poly_mul(tp.A, tp.A), zeta));
    Q = poly_sub(Q, poly_scale(tp.A, cplx(2.0, 0.0)));
    Q = poly_add(Q, poly_scale(poly_mul(X, tp.eta), cplx(2.0, 0.0)));
    Q = poly_sub(Q, poly_scale(poly_mul(X, poly_mul(tp.A, tp.eta)), 2.0 * zeta));
    poly_trim(Q, 0.0);

    const std::vector<cplx> roots = find_roots(Q);

    std::vector<Point3> accepted;
    for (const cplx& x : roots) {
        const auto cand = In_prime_template(n, zeta, sign, x);
        if (!cand) continue;
        Point3 p;
        try {
            p = normalize(*cand);
        } catch (const ZeroVectorError&) {
            continue;
        }
        const IndeterminacyVerdict v = in_In(p, n);
        if (!v.member || *v.first_hit_step != n - 1) continue;
        bool dup = false;
        for (const Point3& q : accepted)
            if (projectively_equal(p, q, 1e-8)) dup = true;
        if (!dup) accepted.push_back(p);
    }
    if (accepted.empty())
        throw NoSolutionError("no root of the cleared polynomial verifies as an I_n' point");
    return accepted;
}

bool E_exclusion_certificate(const Point3& z) {
    const ExtendedComplex t = tau(z.coords);
    if (!(t.abs() > 1.0)) return false;
    const Affine3& c = z.coords;
    return std::abs(c[2]) > std::abs(c[0]) + std::abs(c[1]);
}

} // namespace specdyn
