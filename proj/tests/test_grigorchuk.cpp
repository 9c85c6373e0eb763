#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "specdyn/grigorchuk.hpp"

using namespace specdyn;

namespace {
std::mt19937_64 rng(23);
double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}
cplx rand_cplx(double r) { return std::polar(uniform(0.05, r), uniform(0.0, 2 * M_PI)); }

Rational rand_rational() {
    const long n = long(rng() % 19) - 9;
    const long d = long(rng() % 9) + 1;
    return Rational(n, d);
}
RationalComplex rand_rc() { return {rand_rational(), rand_rational()}; }
} // namespace

TEST_CASE("alpha on pinned points") {
    CHECK(alpha(Affine5{cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(1, 0), cplx(1, 0)}) == cplx(-3, 0));
    // alpha vanishes on J by construction
    CHECK(std::abs(alpha(Affine5{cplx(1, 0), cplx(1, 0), cplx(1, 0), cplx(1, 0), cplx(1, 0)})) == 0.0);
    // alpha(X(w)) = w0^2 - w2^2
    for (int k = 0; k < 200; ++k) {
        const Affine3 w{rand_cplx(2.0), rand_cplx(2.0), rand_cplx(2.0)};
        const cplx lhs = alpha(embed_X(w));
        const cplx rhs = w[0] * w[0] - w[2] * w[2];
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("apply_G on pinned points") {
    const Affine5 a = apply_G(Affine5{cplx(1, 0), cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(0, 0)});
    CHECK(norm_inf(a) == 0.0);

    const Affine5 b = apply_G(Affine5{cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(1, 0), cplx(1, 0)});
    CHECK(b[0] == cplx(-1, 0));
    CHECK(b[1] == cplx(2, 0));
    CHECK(b[2] == cplx(-3, 0));
    CHECK(b[3] == cplx(-3, 0));
    CHECK(b[4] == cplx(-3, 0));

    const Affine5 c = apply_G(Affine5{cplx(-1, 0), cplx(-2, 0), cplx(1, 0), cplx(1, 0), cplx(1, 0)});
    CHECK(c[0] == cplx(4, 0));
    CHECK(c[1] == cplx(8, 0));
    CHECK(c[2] == cplx(-4, 0));
}

TEST_CASE("embedding X and its inverse") {
    const Affine5 x = embed_X(Affine3{cplx(1, 0), cplx(1, 0), cplx(2, 0)});
    CHECK(x[0] == cplx(0, 0));
    CHECK(x[1] == cplx(1, 0));
    CHECK(x[2] == cplx(1, 0));
    CHECK(x[3] == cplx(1, 0));
    CHECK(x[4] == cplx(1, 0));

    CHECK(norm_inf(embed_X(Affine3{cplx(0, 0), cplx(0, 0), cplx(0, 0)})) == 0.0);

    // exact inverse on rationals
    for (int k = 0; k < 100; ++k) {
        const std::array<RationalComplex, 3> w{rand_rc(), rand_rc(), rand_rc()};
        const auto x5 = embed_X(w);
        CHECK(x5[2] == x5[3]);
        CHECK(x5[3] == x5[4]);
        // w0 = z0 + z4, w1 = z1, w2 = 2 z4
        CHECK(x5[0] + x5[4] == w[0]);
        CHECK(x5[1] == w[1]);
        const RationalComplex two{Rational(2)};
        CHECK(two * x5[4] == w[2]);
    }

    for (int k = 0; k < 100; ++k) {
        const Affine3 w{rand_cplx(2.0), rand_cplx(2.0), rand_cplx(2.0)};
        const Affine3 back = invert_X(embed_X(w));
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(back[std::size_t(i)] - w[std::size_t(i)]) < 1e-12);
    }

    CHECK_THROWS_AS(invert_X(Affine5{cplx(1, 0), cplx(0, 0), cplx(1, 0), cplx(2, 0), cplx(3, 0)}),
                    NotInMError);
}

TEST_CASE("J orbit facts") {
    // z0 + z4 = z2 + z3 branch
    const JOrbitFacts f1 = J_orbit_facts(Affine5{cplx(1, 0), cplx(2, 0), cplx(1, 0), cplx(1, 0), cplx(1, 0)});
    CHECK(f1.image_in_spectrum);
    CHECK(f1.second_image_zero);

    const JOrbitFacts f2 = J_orbit_facts(Affine5{cplx(1, 0), cplx(1, 0), cplx(1, 0), cplx(1, 0), cplx(1, 0)});
    CHECK(f2.image_in_spectrum);
    CHECK(f2.second_image_zero);

    // z0 + z4 = -(z2 + z3) branch: (1,1,1,1,-1): alpha = 0 - 4 != 0 -> not on J
    CHECK_THROWS_AS(J_orbit_facts(Affine5{cplx(1, 0), cplx(1, 0), cplx(1, 0), cplx(1, 0), cplx(-1, 0)}),
                    NotOnJError);
    // fix it: z0 = -(z2+z3) - z4 = -2 + 1 = -1 gives alpha = 0
    const JOrbitFacts f3 =
        J_orbit_facts(Affine5{cplx(-3, 0), cplx(1, 0), cplx(1, 0), cplx(1, 0), cplx(1, 0)});
    CHECK(f3.image_in_spectrum);
    CHECK(f3.second_image_zero);

    // exact rational samples on both branches
    for (int k = 0; k < 200; ++k) {
        RationalComplex z1 = rand_rc(), z2 = rand_rc(), z3 = rand_rc(), z4 = rand_rc();
        if (z1.is_zero()) z1 = RationalComplex{Rational(1)};
        if ((z2 + z3).is_zero()) z2 = z2 + RationalComplex{Rational(1)};
        const RationalComplex sgn{(k & 1) ? Rational(1) : Rational(-1)};
        const RationalComplex z0 = sgn * (z2 + z3) - z4;
        const JOrbitFacts f = J_orbit_facts_exact(RAffine5{z0, z1, z2, z3, z4});
        CHECK(f.image_in_spectrum);
        CHECK(f.second_image_zero);
    }
}

TEST_CASE("semi-conjugacy X F = G X") {
    // exact on rationals
    for (int k = 0; k < 500; ++k) {
        const std::array<RationalComplex, 3> w{rand_rc(), rand_rc(), rand_rc()};
        const auto lhs = embed_X(apply_F(w));
        const auto rhs = apply_G(embed_X(w));
        for (int i = 0; i < 5; ++i) CHECK(lhs[std::size_t(i)] == rhs[std::size_t(i)]);
    }
    // floating
    for (int k = 0; k < 20000; ++k) {
        const Affine3 w{rand_cplx(1.5), rand_cplx(1.5), rand_cplx(1.5)};
        const Affine5 lhs = embed_X(apply_F(w));
        const Affine5 rhs = apply_G(embed_X(w));
        const double scale = std::max(1.0, norm_inf(lhs));
        for (int i = 0; i < 5; ++i)
            CHECK(std::abs(lhs[std::size_t(i)] - rhs[std::size_t(i)]) <= 1e-12 * scale);
    }
}

TEST_CASE("norm bound and homogeneity of G") {
    for (int k = 0; k < 20000; ++k) {
        const Affine5 z{rand_cplx(1.5), rand_cplx(1.5), rand_cplx(1.5), rand_cplx(1.5),
                        rand_cplx(1.5)};
        const double n = norm1(z);
        CHECK(norm1(apply_G(z)) <= n * n * n + 1e-12);

        const cplx c = rand_cplx(1.5);
        const Affine5 scaled{c * z[0], c * z[1], c * z[2], c * z[3], c * z[4]};
        const Affine5 lhs = apply_G(scaled);
        const Affine5 rhs = apply_G(z);
        const cplx c3 = c * c * c;
        for (int i = 0; i < 5; ++i)
            CHECK(std::abs(lhs[std::size_t(i)] - c3 * rhs[std::size_t(i)]) <=
                  1e-12 * std::max(1.0, std::abs(c3) * norm_inf(rhs)));
    }
}

TEST_CASE("classify_GM transfers the dihedral verdicts") {
    const Classification a = classify_GM(normalize(embed_X(Affine3{cplx(1, 0), cplx(1, 0), cplx(3, 0)})));
    CHECK(a.kind == Classification::Kind::fatou_certified);

    const Classification b = classify_GM(normalize(embed_X(Affine3{cplx(2, 0), cplx(1, 0), cplx(1, 0)})));
    CHECK(b.kind == Classification::Kind::julia_spectrum);

    const Classification c = classify_GM(normalize(embed_X(Affine3{cplx(1, 0), cplx(1, 0), cplx(0, 0)})));
    CHECK(c.kind == Classification::Kind::julia_indeterminacy);
    CHECK(*c.step == 0);

    CHECK_THROWS_AS(classify_GM(normalize(Affine5{cplx(1, 0), cplx(0, 0), cplx(1, 0), cplx(2, 0), cplx(3, 0)})),
                    NotInMError);
}

TEST_CASE("spectrum slice invariance under G") {
    for (int k = 0; k < 500; ++k) {
        const double x = std::cos(uniform(0.05, M_PI - 0.05));
        const cplx w1 = rand_cplx(1.2), w2 = rand_cplx(1.2);
        const cplx w0 = std::sqrt(w1 * w1 + w2 * w2 + 2.0 * x * w1 * w2);
        const Affine3 w{w0, w1, w2};
        const Classification c = classify_GM(normalize(embed_X(apply_F(w))));
        CHECK(c.kind == Classification::Kind::julia_spectrum);
    }
}

TEST_CASE("indeterminacy transport through X") {
    for (int k = 0; k < 100; ++k) {
        const std::array<RationalComplex, 3> w{rand_rc(), rand_rc(), rand_rc()};
        if (is_zero_vector(RAffine3{w[0], w[1], w[2]})) continue;
        // dihedral orbit hits zero at step s iff the G-orbit of X(w) does
        RAffine3 wd = w;
        auto x5 = embed_X(w);
        for (int step = 0; step < 5; ++step) {
            const bool dz = is_zero_vector(apply_F(wd));
            const bool gz = is_zero_vector(apply_G(x5));
            CHECK(dz == gz);
            if (dz || gz) break;
            wd = apply_F(wd);
            x5 = apply_G(x5);
        }
    }
}

TEST_CASE("slice points and the conjecture probe") {
    const SlicePoint sp = make_slice_point(embed_X(Affine3{cplx(1, 0), cplx(1, 0), cplx(3, 0)}));
    CHECK(fs_distance(sp.dihedral_preimage.coords, Affine3{cplx(1, 0), cplx(1, 0), cplx(3, 0)}) <
          1e-12);

    // Over a short window (before rounding pulls the cascade off the
    // segment) spectrum orbits oscillate and never stabilize.
    const ConjectureProbe probe = probe_conjecture(40, 45);
    CHECK(probe.samples == 40);
    CHECK(probe.non_convergent > 30);
    CHECK(probe.max_oscillation > 1e-3);
}
