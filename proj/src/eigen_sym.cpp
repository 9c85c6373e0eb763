#include "specdyn/eigen_sym.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specdyn/errors.hpp"

namespace specdyn {

namespace {

// Householder reduction of a symmetric matrix to tridiagonal form,
// eigenvalues-only variant (no accumulation of the transform).
void tridiagonalize(std::vector<double>& a, std::size_t n, std::vector<double>& d,
                    std::vector<double>& e) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    for (std::size_t i = n - 1; i >= 1; --i) {
        const std::size_t l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (std::size_t k = 0; k <= l; ++k) scale += std::abs(at(i, k));
            if (scale == 0.0) {
                e[i] = at(i, l);
            } else {
                for (std::size_t k = 0; k <= l; ++k) {
                    at(i, k) /= scale;
                    h += at(i, k) * at(i, k);
                }
                double f = at(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                at(i, l) = f - g;
                f = 0.0;
                for (std::size_t j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (std::size_t k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
                    for (std::size_t k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
                    e[j] = g / h;
                    f += e[j] * at(i, j);
                }
                const double hh = f / (h + h);
                for (std::size_t j = 0; j <= l; ++j) {
                    f = at(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (std::size_t k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
                }
            }
        } else {
            e[i] = at(i, l);
        }
        d[i] = h;
    }
    e[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) d[i] = at(i, i);
}

// Implicit QL with Wilkinson-style shifts on a tridiagonal matrix
// (diagonal d, subdiagonal e with e[0] unused after the shift-down).
void ql_implicit(std::vector<double>& d, std::vector<double>& e, std::size_t n) {
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    for (std::size_t l = 0; l < n; ++l) {
        unsigned iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw Error("QL iteration failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (i == l) { // final rotation: fold the shift back in
                        d[l] -= p;
                        e[l] = g;
                        e[m] = 0.0;
                    }
                }
            }
        } while (m != l);
    }
}

} // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double>& a, std::size_t n) {
    if (a.size() != n * n) throw DimensionMismatchError("symmetric_eigenvalues: bad matrix size");
    if (n == 0) return {};
    std::vector<double> d(n, 0.0), e(n, 0.0);
    if (n == 1) return {a[0]};
    tridiagonalize(a, n, d, e);
    ql_implicit(d, e, n);
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> hermitian_eigenvalues(const std::vector<cplx>& a, std::size_t n) {
    if (a.size() != n * n) throw DimensionMismatchError("hermitian_eigenvalues: bad matrix size");
    const std::size_t m = 2 * n;
    std::vector<double> big(m * m, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const cplx v = a[i * n + j];
            big[i * m + j] = v.real();
            big[(i + n) * m + (j + n)] = v.real();
            big[i * m + (j + n)] = -v.imag();
            big[(i + n) * m + j] = v.imag();
        }
    std::vector<double> all = symmetric_eigenvalues(big, m);
    // each eigenvalue appears twice; keep every other one
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < m; i += 2) out.push_back(0.5 * (all[i] + all[i + 1]));
    return out;
}

} // namespace specdyn
