#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "specdyn/errors.hpp"

namespace specdyn {

using cplx = std::complex<double>;

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// A point of the Riemann sphere: a finite complex scalar or the point at
/// infinity. Arithmetic follows the usual conventions; the indeterminate
/// forms inf*0 and inf-inf throw instead of producing garbage.
class ExtendedComplex {
public:
    ExtendedComplex() = default;
    ExtendedComplex(cplx v) : value_(v) {
        if (!is_finite(v)) throw UndefinedOperationError("non-finite complex scalar; use ExtendedComplex::infinity()");
    }
    ExtendedComplex(double v) : ExtendedComplex(cplx(v, 0.0)) {}

    static ExtendedComplex infinity() {
        ExtendedComplex e;
        e.infinite_ = true;
        return e;
    }

    bool is_infinite() const { return infinite_; }

    cplx value() const {
        if (infinite_) throw UndefinedOperationError("value() on the point at infinity");
        return value_;
    }

    double abs() const {
        return infinite_ ? std::numeric_limits<double>::infinity() : std::abs(value_);
    }

    friend ExtendedComplex operator+(const ExtendedComplex& a, const ExtendedComplex& b) {
        if (a.infinite_ && b.infinite_) throw UndefinedOperationError("inf + inf is undefined on the sphere");
        if (a.infinite_ || b.infinite_) return infinity();
        return ExtendedComplex(a.value_ + b.value_);
    }

    friend ExtendedComplex operator-(const ExtendedComplex& a, const ExtendedComplex& b) {
        if (a.infinite_ && b.infinite_) throw UndefinedOperationError("inf - inf is undefined");
        if (a.infinite_ || b.infinite_) return infinity();
        return ExtendedComplex(a.value_ - b.value_);
    }

    friend ExtendedComplex operator*(const ExtendedComplex& a, const ExtendedComplex& b) {
        if (a.infinite_ || b.infinite_) {
            const ExtendedComplex& fin = a.infinite_ ? b : a;
            if (!fin.infinite_ && fin.value_ == cplx(0.0, 0.0))
                throw UndefinedOperationError("inf * 0 is undefined");
            return infinity();
        }
        return ExtendedComplex(a.value_ * b.value_);
    }

    friend bool operator==(const ExtendedComplex& a, const ExtendedComplex& b) {
        if (a.infinite_ != b.infinite_) return false;
        return a.infinite_ || a.value_ == b.value_;
    }

private:
    cplx value_{0.0, 0.0};
    bool infinite_ = false;
};

/// |a - b| treating two infinities as equal; one-sided infinity is an
/// infinite discrepancy. Used by property tests comparing sphere values.
inline double sphere_abs_diff(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.is_infinite() && b.is_infinite()) return 0.0;
    if (a.is_infinite() || b.is_infinite()) return std::numeric_limits<double>::infinity();
    return std::abs(a.value() - b.value());
}

/// Relative discrepancy with absolute fallback near zero.
inline double sphere_rel_diff(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.is_infinite() && b.is_infinite()) return 0.0;
    if (a.is_infinite() || b.is_infinite()) return std::numeric_limits<double>::infinity();
    const double scale = std::max({1.0, std::abs(a.value()), std::abs(b.value())});
    return std::abs(a.value() - b.value()) / scale;
}

} // namespace specdyn
