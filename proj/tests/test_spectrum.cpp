#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "specdyn/spectrum.hpp"

using namespace specdyn;

namespace {
std::mt19937_64 rng(11);
double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}
cplx annulus(double lo, double hi) { return std::polar(uniform(lo, hi), uniform(0.0, 2 * M_PI)); }
} // namespace

TEST_CASE("membership verdicts on pinned points") {
    const SpectrumVerdict a =
        spectrum_membership(normalize(Affine3{cplx(1, 0), cplx(1, 0), cplx(0, 0)}));
    CHECK(a.in_spectrum);
    CHECK(a.margin == 0.0);

    const SpectrumVerdict b =
        spectrum_membership(normalize(Affine3{cplx(2, 0), cplx(1, 0), cplx(1, 0)}));
    CHECK(b.in_spectrum);
    REQUIRE(b.x_param.has_value());
    CHECK(*b.x_param == doctest::Approx(1.0).epsilon(1e-12));

    const SpectrumVerdict c =
        spectrum_membership(normalize(Affine3{cplx(1, 0), cplx(1, 0), cplx(3, 0)}));
    CHECK_FALSE(c.in_spectrum);
    CHECK(c.margin == doctest::Approx(0.5).epsilon(1e-12));

    const SpectrumVerdict d =
        spectrum_membership(normalize(Affine3{cplx(1, 0), cplx(0, 0), cplx(0, 0)}));
    CHECK_FALSE(d.in_spectrum);
}

TEST_CASE("rho_theta characteristic polynomial") {
    for (double theta : {0.0, 0.3, 1.0, 2.5, M_PI, 5.0}) {
        CHECK(std::abs(char_poly_rho_theta(Affine3{cplx(1, 0), cplx(1, 0), cplx(0, 0)}, theta)) <
              1e-14);
    }
    CHECK(char_poly_rho_theta(Affine3{cplx(1, 0), cplx(1, 0), cplx(1, 0)}, 0.0).real() ==
          doctest::Approx(-3.0).epsilon(1e-14));
    // cos(pi/2) is ~6e-17, so the cross term is at rounding level
    const Affine3 z{cplx(1.5, 0.25), cplx(-0.5, 1.0), cplx(2.0, -1.0)};
    const cplx v = char_poly_rho_theta(z, M_PI / 2);
    const cplx want = z[0] * z[0] - z[1] * z[1] - z[2] * z[2];
    CHECK(std::abs(v - want) <= 1e-15 * std::abs(2.0 * z[1] * z[2]));
}

TEST_CASE("pencil spectrum in the spectral variable") {
    const auto ex = pencil_spectrum_in_zeta(1, 1, 2);
    REQUIRE(ex.size() == 2);
    CHECK(ex[0].lo == doctest::Approx(-2));
    CHECK(ex[0].hi == doctest::Approx(0));
    CHECK(ex[1].lo == doctest::Approx(2));
    CHECK(ex[1].hi == doctest::Approx(4));

    const auto deg = pencil_spectrum_in_zeta(0, 1, 0);
    REQUIRE(deg.size() == 2);
    CHECK(deg[0].lo == doctest::Approx(-1));
    CHECK(deg[0].hi == doctest::Approx(-1));
    CHECK(deg[1].lo == doctest::Approx(1));
    CHECK(deg[1].hi == doctest::Approx(1));

    const auto merged = pencil_spectrum_in_zeta(0, 1, 1);
    REQUIRE(merged.size() == 1);
    CHECK(merged[0].lo == doctest::Approx(-2));
    CHECK(merged[0].hi == doctest::Approx(2));
}

TEST_CASE("real slice membership") {
    CHECK(real_slice_spectrum(1, 0));
    CHECK_FALSE(real_slice_spectrum(1, 3));
    CHECK(real_slice_spectrum(0.5, 0.6));
}

TEST_CASE("spectrum invariance under F") {
    for (int k = 0; k < 3000; ++k) {
        const double x = uniform(-1.0, 1.0);
        const cplx z1 = annulus(0.5, 1.2), z2 = annulus(0.5, 1.2);
        const cplx z0 = std::sqrt(z1 * z1 + z2 * z2 + 2.0 * x * z1 * z2);
        const SpectrumVerdict v = spectrum_membership(normalize(apply_F(Affine3{z0, z1, z2})), 1e-8);
        REQUIRE(v.in_spectrum);
        REQUIRE(v.x_param.has_value());
        CHECK(std::abs(*v.x_param - (2 * x * x - 1)) <= 1e-8);
    }
}

TEST_CASE("membership against a theta-grid of characteristic polynomials") {
    const int grid = 10000;
    auto min_on_grid = [&](const Affine3& z) {
        double best = 1e300;
        for (int k = 0; k < grid; ++k) {
            const double theta = M_PI * (k + 0.5) / grid;
            best = std::min(best, std::abs(char_poly_rho_theta(z, theta)));
        }
        return best;
    };
    const double dtheta = M_PI / grid;
    for (int k = 0; k < 40; ++k) {
        // inside: tau = cos(theta0) with theta0 away from the endpoints
        const double theta0 = uniform(0.05, M_PI - 0.05);
        const cplx z1 = annulus(0.5, 1.2), z2 = annulus(0.5, 1.2);
        const cplx z0 = std::sqrt(z1 * z1 + z2 * z2 + 2.0 * std::cos(theta0) * z1 * z2);
        const Affine3 in{z0, z1, z2};
        const double scale = 2.0 * std::abs(z1 * z2);
        CHECK(spectrum_membership(normalize(in)).in_spectrum);
        CHECK(min_on_grid(in) <= scale * 2.0 * dtheta);

        // outside: margin at least 0.05
        const cplx t(uniform(-1.0, 1.0), uniform(0.05, 0.6));
        const cplx w0 = std::sqrt(z1 * z1 + z2 * z2 + 2.0 * t * z1 * z2);
        const Affine3 out{w0, z1, z2};
        CHECK_FALSE(spectrum_membership(normalize(out)).in_spectrum);
        CHECK(min_on_grid(out) > scale * 2.0 * dtheta);
    }
}

TEST_CASE("real_slice_spectrum agrees with spectrum_membership on the grid") {
    const int res = 512;
    for (int j = 0; j < res; j += 7) { // strided to keep the unit test quick
        for (int i = 0; i < res; ++i) {
            const double x = -3.0 + (i + 0.5) * 6.0 / res;
            const double y = -3.0 + (j + 0.5) * 6.0 / res;
            const bool rs = real_slice_spectrum(x, y);
            const bool sm =
                spectrum_membership(normalize(Affine3{cplx(1, 0), cplx(x, 0), cplx(y, 0)}))
                    .in_spectrum;
            CHECK(rs == sm);
        }
    }
}

TEST_CASE("verdict json shape") {
    // serialization is exercised in the CLI; here only margin semantics
    const SpectrumVerdict v =
        spectrum_membership(normalize(Affine3{cplx(1, 0), cplx(0, 0), cplx(2, 0)}));
    CHECK_FALSE(v.in_spectrum);
    CHECK(std::isinf(v.margin)); // tau = inf off the spectrum
}
