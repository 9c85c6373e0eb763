#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "specdyn/complex_ext.hpp"
#include "specdyn/errors.hpp"

namespace specdyn {

template <std::size_t N>
using Affine = std::array<cplx, N>;

using Affine3 = Affine<3>;
using Affine5 = Affine<5>;

/// Normalized representative of a point in complex projective space.
/// The pivot is the lowest index of maximal modulus in the original
/// representative; after normalization that component is exactly 1.
template <std::size_t N>
struct HomogeneousPoint {
    Affine<N> coords{};
    int pivot = 0;
};

using Point3 = HomogeneousPoint<3>;
using Point5 = HomogeneousPoint<5>;

inline double abs2(cplx z) {
    return z.real() * z.real() + z.imag() * z.imag();
}

template <std::size_t N>
bool is_zero_vector(const Affine<N>& v) {
    for (const cplx& c : v)
        if (std::hypot(c.real(), c.imag()) >= 1e-300) return false;
    return true;
}

template <std::size_t N>
int pivot_index(const Affine<N>& v) {
    int p = 0;
    double best = abs2(v[0]);
    for (std::size_t i = 1; i < N; ++i) {
        const double m = abs2(v[i]);
        if (m > best) {
            best = m;
            p = static_cast<int>(i);
        }
    }
    return p;
}

template <std::size_t N>
HomogeneousPoint<N> normalize(const Affine<N>& v) {
    if (is_zero_vector(v)) throw ZeroVectorError();
    const int p = pivot_index(v);
    HomogeneousPoint<N> out;
    out.pivot = p;
    const cplx d = v[static_cast<std::size_t>(p)];
    for (std::size_t i = 0; i < N; ++i) out.coords[i] = v[i] / d;
    out.coords[static_cast<std::size_t>(p)] = cplx(1.0, 0.0);
    return out;
}

template <std::size_t N>
double norm2(const Affine<N>& v) {
    double s = 0.0;
    for (const cplx& c : v) s += abs2(c);
    return std::sqrt(s);
}

template <std::size_t N>
double norm1(const Affine<N>& v) {
    double s = 0.0;
    for (const cplx& c : v) s += std::abs(c);
    return s;
}

template <std::size_t N>
double norm_inf(const Affine<N>& v) {
    double s = 0.0;
    for (const cplx& c : v) s = std::max(s, std::abs(c));
    return s;
}

template <std::size_t N>
double norm_p(const Affine<N>& v, double p) {
    if (!(p > 0.0)) throw InvalidConfigError("norm_p requires p > 0");
    double s = 0.0;
    for (const cplx& c : v) s += std::pow(std::abs(c), p);
    return std::pow(s, 1.0 / p);
}

/// Fubini-Study distance arccos(|<p,q>| / (|p| |q|)), in [0, pi/2].
/// Evaluated as atan2 of the orthogonal residual so that nearly-equal
/// projective points measure at rounding level instead of sqrt(eps).
template <std::size_t N>
double fs_distance(const Affine<N>& a, const Affine<N>& b) {
    cplx inner(0.0, 0.0); // <b, a>
    for (std::size_t i = 0; i < N; ++i) inner += b[i] * std::conj(a[i]);
    const double na = norm2(a), nb = norm2(b);
    if (na == 0.0 || nb == 0.0) throw ZeroVectorError();
    const cplx coef = inner / (na * na);
    double res2 = 0.0; // |b - coef a|^2, the part of b off the line through a
    for (std::size_t i = 0; i < N; ++i) res2 += abs2(b[i] - coef * a[i]);
    const double sin_part = std::sqrt(res2);
    const double cos_part = std::abs(inner) / na;
    return std::atan2(sin_part, cos_part);
}

template <std::size_t N>
double fs_distance(const HomogeneousPoint<N>& a, const HomogeneousPoint<N>& b) {
    return fs_distance(a.coords, b.coords);
}

template <std::size_t N>
double fs_distance(const HomogeneousPoint<N>& a, const Affine<N>& b) {
    return fs_distance(a.coords, b);
}

template <std::size_t N>
bool projectively_equal(const Affine<N>& a, const Affine<N>& b, double tol = 1e-10) {
    return fs_distance(a, b) < tol;
}

template <std::size_t N>
bool projectively_equal(const HomogeneousPoint<N>& a, const HomogeneousPoint<N>& b, double tol = 1e-10) {
    return fs_distance(a.coords, b.coords) < tol;
}

// --- text form -------------------------------------------------------------
// Affine:     "a+bi,c+di,e+fi"
// Projective: "[a+bi : c+di : e+fi]"
// Round-trips through 17 significant digits.

std::string format_complex(cplx z);
cplx parse_complex(const std::string& text);

template <std::size_t N>
std::string format_affine(const Affine<N>& v) {
    std::string out;
    for (std::size_t i = 0; i < N; ++i) {
        if (i) out += ",";
        out += format_complex(v[i]);
    }
    return out;
}

template <std::size_t N>
std::string format_projective(const Affine<N>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < N; ++i) {
        if (i) out += " : ";
        out += format_complex(v[i]);
    }
    return out + "]";
}

template <std::size_t N>
std::string format_projective(const HomogeneousPoint<N>& p) {
    return format_projective(p.coords);
}

Affine3 parse_affine3(const std::string& text);
Affine5 parse_affine5(const std::string& text);

} // namespace specdyn
