#include "specdyn/roots.hpp"

#include <algorithm>
#include <cmath>

#include "specdyn/errors.hpp"

namespace specdyn {

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), cplx(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    return poly_add(a, poly_scale(b, cplx(-1.0, 0.0)));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Poly poly_scale(const Poly& a, cplx s) {
    Poly out = a;
    for (cplx& c : out) c *= s;
    return out;
}

Poly poly_derivative(const Poly& a) {
    if (a.size() <= 1) return {cplx(0.0, 0.0)};
    Poly out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = double(i) * a[i];
    return out;
}

cplx poly_eval(const Poly& a, cplx x) {
    cplx v(0.0, 0.0);
    for (std::size_t i = a.size(); i-- > 0;) v = v * x + a[i];
    return v;
}

void poly_trim(Poly& a, double tol) {
    while (a.size() > 1 && std::abs(a.back()) <= tol) a.pop_back();
}

namespace {

std::vector<cplx> durand_kerner(const Poly& monic, unsigned max_iter, double jitter) {
    const std::size_t deg = monic.size() - 1;
    // radius bound: 1 + max |c_k|
    double r = 0.0;
    for (std::size_t i = 0; i < deg; ++i) r = std::max(r, std::abs(monic[i]));
    r = 1.0 + r;

    std::vector<cplx> w(deg);
    for (std::size_t i = 0; i < deg; ++i)
        w[i] = std::polar(r * (0.5 + 0.5 * double(i + 1) / double(deg)),
                          2.0 * M_PI * double(i) / double(deg) + 0.4 + jitter);

    for (unsigned it = 0; it < max_iter; ++it) {
        double max_step = 0.0;
        for (std::size_t i = 0; i < deg; ++i) {
            cplx denom(1.0, 0.0);
            for (std::size_t j = 0; j < deg; ++j)
                if (j != i) denom *= (w[i] - w[j]);
            if (denom == cplx(0.0, 0.0)) {
                w[i] += cplx(1e-6, 1e-6);
                max_step = 1.0;
                continue;
            }
            const cplx delta = poly_eval(monic, w[i]) / denom;
            w[i] -= delta;
            max_step = std::max(max_step, std::abs(delta));
        }
        if (max_step < 1e-14 * (1.0 + r)) return w;
    }
    return {}; // stagnated
}

} // namespace

std::vector<cplx> find_roots(Poly p) {
    poly_trim(p);
    if (p.size() <= 1) throw RootFindingFailureError("constant polynomial has no roots to find");

    // factor out exact zero roots
    std::size_t zero_roots = 0;
    while (zero_roots + 1 < p.size() && p[zero_roots] == cplx(0.0, 0.0)) ++zero_roots;
    Poly q(p.begin() + zero_roots, p.end());

    std::vector<cplx> roots(zero_roots, cplx(0.0, 0.0));
    if (q.size() > 1) {
        const cplx lead = q.back();
        Poly monic = poly_scale(q, cplx(1.0, 0.0) / lead);
        std::vector<cplx> w;
        for (int attempt = 0; attempt < 4 && w.empty(); ++attempt)
            w = durand_kerner(monic, 200, 0.7 * attempt);
        if (w.empty()) throw RootFindingFailureError("Durand-Kerner did not converge");

        // Newton polish
        const Poly dq = poly_derivative(monic);
        for (cplx& root : w) {
            for (int k = 0; k < 8; ++k) {
                const cplx d = poly_eval(dq, root);
                if (d == cplx(0.0, 0.0)) break;
                const cplx step = poly_eval(monic, root) / d;
                root -= step;
                if (std::abs(step) < 1e-16 * (1.0 + std::abs(root))) break;
            }
        }
        roots.insert(roots.end(), w.begin(), w.end());
    }
    return roots;
}

Poly char_poly(const std::vector<cplx>& matrix, std::size_t n) {
    if (matrix.size() != n * n) throw DimensionMismatchError("char_poly: bad matrix size");
    // Faddeev-LeVerrier: M_1 = A, c_k = -tr(A M_k)/k ... coefficients of
    // lambda^n + c_1 lambda^{n-1} + ... + c_n
    std::vector<cplx> M(matrix);
    std::vector<cplx> coeffs(n + 1, cplx(0.0, 0.0));
    coeffs[n] = cplx(1.0, 0.0);

    std::vector<cplx> work(n * n);
    for (std::size_t k = 1; k <= n; ++k) {
        cplx tr(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) tr += M[i * n + i];
        const cplx ck = -tr / double(k);
        coeffs[n - k] = ck;
        if (k == n) break;
        // M <- A (M + ck I)
        std::vector<cplx> Mc(M);
        for (std::size_t i = 0; i < n; ++i) Mc[i * n + i] += ck;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                cplx s(0.0, 0.0);
                for (std::size_t l = 0; l < n; ++l) s += matrix[i * n + l] * Mc[l * n + j];
                work[i * n + j] = s;
            }
        M = work;
    }
    return coeffs;
}

std::vector<cplx> eigenvalues_small(const std::vector<cplx>& matrix, std::size_t n) {
    return find_roots(char_poly(matrix, n));
}

} // namespace specdyn
