#include "specdyn/dihedral.hpp"

#include <cmath>
#include <cstdio>

namespace specdyn {

ExtendedComplex tau(const Affine3& z) {
    if (is_zero_vector(z)) throw ZeroVectorError();
    const cplx num = z[0] * z[0] - z[1] * z[1] - z[2] * z[2];
    if (num == cplx(0.0, 0.0)) return ExtendedComplex(cplx(0.0, 0.0));
    const cplx den = 2.0 * z[1] * z[2];
    if (den == cplx(0.0, 0.0)) return ExtendedComplex::infinity();
    const cplx q = num / den;
    if (!is_finite(q)) return ExtendedComplex::infinity(); // double-range saturation
    return ExtendedComplex(q);
}

ExtendedComplex tchebyshev_T(const ExtendedComplex& x) {
    if (x.is_infinite()) return ExtendedComplex::infinity();
    const cplx v = x.value();
    const cplx t = 2.0 * v * v - 1.0;
    if (!is_finite(t)) return ExtendedComplex::infinity();
    return ExtendedComplex(t);
}

cplx tchebyshev_Tk(unsigned k, cplx x) {
    if (k == 0) return cplx(1.0, 0.0);
    cplx prev(1.0, 0.0);
    cplx cur = x;
    for (unsigned j = 1; j < k; ++j) {
        const cplx next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

OrbitTrace iterate_F(const Affine3& z, int n, bool renormalize) {
    if (n < 0) throw InvalidConfigError("iterate_F requires n >= 0");
    OrbitTrace trace;
    trace.renormalized = renormalize;

    Affine3 cur = renormalize ? normalize(z).coords : z;
    trace.points.push_back(cur);
    trace.tau_values.push_back(tau(cur));

    for (int step = 0; step < n; ++step) {
        const double scale = norm_inf(cur);
        const Affine3 img = apply_F(cur);
        if (norm_inf(img) < 1e-14 * scale * scale * scale) {
            trace.terminated_at_indeterminacy = step;
            break;
        }
        if (norm_inf(img) < 1e-300) break; // raw orbit underflowed to zero
        if (!is_finite(img[0]) || !is_finite(img[1]) || !is_finite(img[2])) {
            trace.overflowed_at = step;
            break;
        }
        cur = renormalize ? normalize(img).coords : img;
        trace.points.push_back(cur);
        trace.tau_values.push_back(tau(cur));
    }
    return trace;
}

namespace {

// Product of T^k(tau) factors tracked in log-polar form so that the
// doubly-exponential growth never overflows.
struct LogPolar {
    double log_mag = 0.0;
    double phase = 0.0;

    void mul(cplx w) {
        log_mag += std::log(std::abs(w));
        phase += std::arg(w);
    }

    // value of c / (2^j * product); underflows cleanly to 0
    cplx divide_into(cplx c, int j) const {
        const double lm = std::log(std::abs(c)) - log_mag - j * std::log(2.0);
        if (lm < -745.0) return cplx(0.0, 0.0);
        const double ph = std::arg(c) - phase;
        return std::polar(std::exp(lm), ph);
    }
};

} // namespace

cplx f_n(const Affine3& z, int n) {
    if (n < 2) throw InvalidConfigError("f_n requires n >= 2");
    const ExtendedComplex t0 = tau(z);
    if (t0.is_infinite()) return cplx(0.0, 0.0);

    cplx t = t0.value();
    LogPolar prod; // prod_{k=0}^{j-1} T^k(tau) as j grows
    cplx sum(0.0, 0.0);
    for (int j = 1; j <= n - 1; ++j) {
        if (t == cplx(0.0, 0.0))
            throw ZeroTchebyshevFactorError("T^" + std::to_string(j - 1) + "(tau) = 0 in f_n");
        prod.mul(t);
        sum += prod.divide_into(cplx(1.0, 0.0), j);
        t = 2.0 * t * t - 1.0;
        if (!is_finite(t)) t = cplx(1e300, 0.0); // beyond this every term is 0 anyway
    }
    return sum;
}

Point3 closed_form_Fn(const Affine3& z, int n) {
    if (n < 2) throw InvalidConfigError("closed_form_Fn requires n >= 2");
    const OrbitTrace probe = iterate_F(z, n, true);
    if (probe.terminated_at_indeterminacy)
        throw IndeterminateOrbitError("orbit reaches I1 at step " +
                                      std::to_string(*probe.terminated_at_indeterminacy));

    const ExtendedComplex t0 = tau(z);
    if (t0.is_infinite()) {
        // every term of the sum carries a 1/tau; the middle component dies
        return normalize(Affine3{z[0], cplx(0.0, 0.0), z[2]});
    }

    // middle component divisor: 2^n prod_{k=0}^{n-1} T^k(tau);
    // tail sum: one index deeper than the divisor product.
    cplx t = t0.value();
    LogPolar prod;
    cplx fsum(0.0, 0.0);
    for (int j = 1; j <= n; ++j) {
        if (t == cplx(0.0, 0.0))
            throw ZeroTchebyshevFactorError("T^" + std::to_string(j - 1) + "(tau) = 0; product form inapplicable");
        prod.mul(t);
        fsum += prod.divide_into(cplx(1.0, 0.0), j);
        t = 2.0 * t * t - 1.0;
        if (!is_finite(t)) t = cplx(1e300, 0.0);
    }
    const cplx middle = prod.divide_into(z[1], n);
    return normalize(Affine3{z[0], middle, z[2] + z[1] * fsum});
}

cplx limit_f(const Affine3& z) {
    const ExtendedComplex t = tau(z);
    if (t.is_infinite()) return cplx(0.0, 0.0);
    const cplx v = t.value();

    if (v.imag() == 0.0 && std::abs(v.real()) <= 1.0) {
        // both roots unimodular; take e^{-i theta}, theta = arccos(tau)
        const double theta = std::acos(v.real());
        return cplx(std::cos(theta), -std::sin(theta));
    }
    const cplx s = std::sqrt(v * v - 1.0);
    const cplx w1 = v + s;
    const cplx w2 = v - s;
    // the roots multiply to 1; derive the small one from the big one
    const cplx big = std::abs(w1) >= std::abs(w2) ? w1 : w2;
    return cplx(1.0, 0.0) / big;
}

Point3 limit_F_star(const Affine3& z) {
    const cplx f = limit_f(z);
    return normalize(Affine3{z[0], cplx(0.0, 0.0), z[2] + z[1] * f});
}

std::string orbit_to_csv(const OrbitTrace& trace) {
    std::string out = "step,z0_re,z0_im,z1_re,z1_im,z2_re,z2_im,tau_re,tau_im,tau_is_inf\n";
    char buf[512];
    for (std::size_t k = 0; k < trace.points.size(); ++k) {
        const Affine3& p = trace.points[k];
        const ExtendedComplex& t = trace.tau_values[k];
        const cplx tv = t.is_infinite() ? cplx(0.0, 0.0) : t.value();
        std::snprintf(buf, sizeof buf,
                      "%zu,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", k,
                      p[0].real(), p[0].imag(), p[1].real(), p[1].imag(), p[2].real(),
                      p[2].imag(), tv.real(), tv.imag(), t.is_infinite() ? 1 : 0);
        out += buf;
    }
    return out;
}

} // namespace specdyn
