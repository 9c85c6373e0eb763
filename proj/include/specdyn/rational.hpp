#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "specdyn/complex_ext.hpp"
#include "specdyn/errors.hpp"

namespace specdyn {

using Rational = boost::multiprecision::cpp_rational;

/// Gaussian rational: exact complex number with rational real and imaginary
/// parts. Carrier for exact indeterminacy orbits, where "the image is the
/// zero vector" must be decidable.
struct RationalComplex {
    Rational re{0};
    Rational im{0};

    RationalComplex() = default;
    RationalComplex(Rational r) : re(std::move(r)) {}
    RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    /// |z|^2, exact. Used for pivot comparisons.
    Rational abs2() const { return re * re + im * im; }

    cplx to_cplx() const {
        return cplx(static_cast<double>(re), static_cast<double>(im));
    }

    friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend RationalComplex operator-(const RationalComplex& a) { return {-a.re, -a.im}; }
    friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend RationalComplex operator/(const RationalComplex& a, const RationalComplex& b) {
        const Rational d = b.abs2();
        if (d == 0) throw UndefinedOperationError("rational complex division by zero");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

template <std::size_t N>
using RAffine = std::array<RationalComplex, N>;

using RAffine3 = RAffine<3>;
using RAffine5 = RAffine<5>;

template <std::size_t N>
bool is_zero_vector(const RAffine<N>& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

/// Exact pivot normalization: divide by the lowest-index component of
/// maximal modulus. Representatives of equal projective points normalize
/// to identical coordinates, so equality testing is exact.
template <std::size_t N>
RAffine<N> normalize_exact(const RAffine<N>& v) {
    if (is_zero_vector(v)) throw ZeroVectorError();
    std::size_t p = 0;
    Rational best = v[0].abs2();
    for (std::size_t i = 1; i < N; ++i) {
        const Rational m = v[i].abs2();
        if (m > best) {
            best = m;
            p = i;
        }
    }
    RAffine<N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = v[i] / v[p];
    return out;
}

template <std::size_t N>
bool projectively_equal_exact(const RAffine<N>& a, const RAffine<N>& b) {
    return normalize_exact(a) == normalize_exact(b);
}

template <std::size_t N>
Affine<N> to_cplx(const RAffine<N>& v) {
    Affine<N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = v[i].to_cplx();
    return out;
}

} // namespace specdyn
