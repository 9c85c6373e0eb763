#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "specdyn/indeterminacy.hpp"
#include "specdyn/json_io.hpp"

using namespace specdyn;

namespace {
std::mt19937_64 rng(13);
double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}
cplx rand_cplx(double r) { return std::polar(uniform(0.1, r), uniform(0.0, 2 * M_PI)); }

Rational rand_rational(int num, int den) {
    const long n = long(rng() % (2 * std::size_t(num) + 1)) - num;
    const long d = long(rng() % std::size_t(den)) + 1;
    return Rational(n, d);
}
} // namespace

TEST_CASE("I1 is the five-point set and maps to zero exactly") {
    const auto pts = indeterminacy_I1();
    CHECK(pts.size() == 5);
    bool has_110 = false;
    for (const auto& p : pts)
        if (projectively_equal(p.coords, Affine3{cplx(1, 0), cplx(1, 0), cplx(0, 0)})) has_110 = true;
    CHECK(has_110);

    for (const auto& p : indeterminacy_I1_exact()) {
        const RAffine3 img = apply_F(p);
        CHECK(is_zero_vector(img));
    }
}

TEST_CASE("I2 membership") {
    CHECK(in_I2(normalize(Affine3{cplx(1, 0), cplx(5, 0), cplx(1, 0)})));
    CHECK(in_I2(normalize(Affine3{cplx(0, 0), cplx(1, 0), cplx(0, 0)})));
    CHECK_FALSE(in_I2(normalize(Affine3{cplx(1, 0), cplx(1, 0), cplx(3, 0)})));

    const RationalComplex one{Rational(1)}, five{Rational(5)};
    CHECK(in_I2_exact(RAffine3{one, five, one}));
    CHECK_FALSE(in_I2_exact(RAffine3{one, one, RationalComplex{Rational(3)}}));
}

TEST_CASE("in_In by forward orbit") {
    const IndeterminacyVerdict a = in_In(normalize(Affine3{cplx(1, 0), cplx(1, 0), cplx(0, 0)}), 1);
    CHECK(a.member);
    CHECK(*a.first_hit_step == 0);

    const IndeterminacyVerdict b = in_In(normalize(Affine3{cplx(1, 0), cplx(5, 0), cplx(1, 0)}), 2);
    CHECK(b.member);
    CHECK(*b.first_hit_step == 1);

    const IndeterminacyVerdict c = in_In(normalize(Affine3{cplx(1, 0), cplx(1, 0), cplx(3, 0)}), 10);
    CHECK_FALSE(c.member);

    // monotonicity: member at n stays member for m > n
    const IndeterminacyVerdict d = in_In(normalize(Affine3{cplx(1, 0), cplx(5, 0), cplx(1, 0)}), 7);
    CHECK(d.member);
    CHECK(*d.first_hit_step == 1);
}

TEST_CASE("F maps I2' into I1 exactly") {
    for (int k = 0; k < 50; ++k) {
        const RationalComplex zeta{rand_rational(9, 9), rand_rational(9, 9)};
        if (zeta.is_zero()) continue;
        const RationalComplex one{Rational(1)};
        for (const RationalComplex& s : {one, RationalComplex{Rational(-1)}}) {
            const RAffine3 z{s, zeta, one};
            const RAffine3 img = apply_F(z);
            bool in_i1 = false;
            for (const auto& p : indeterminacy_I1_exact())
                if (projectively_equal_exact(img, p)) in_i1 = true;
            CHECK(in_i1);
        }
    }
}

TEST_CASE("generate_In_prime at n = 3") {
    // zeta = -2: tau roots are +-1, template [s/2 : -2 : 3/2]
    const auto pts = generate_In_prime(3, cplx(-2, 0), +1);
    CHECK(pts.size() == 2);
    for (const auto& p : pts) {
        const IndeterminacyVerdict v = in_In(p, 3);
        CHECK(v.member);
        CHECK(*v.first_hit_step == 2);
        // template shape: z = [s/(2 tau) : zeta : (1-zeta)/(2 tau)]
        const ExtendedComplex t = tau(p.coords);
        REQUIRE_FALSE(t.is_infinite());
        const auto templ = In_prime_template(3, cplx(-2, 0), +1, t.value());
        REQUIRE(templ.has_value());
        CHECK(fs_distance(p.coords, *templ) < 1e-9);
    }

    // complex zeta
    for (const cplx zeta : {cplx(3, 0), cplx(0, 2), cplx(1.5, -0.5)}) {
        for (int s : {+1, -1}) {
            const auto got = generate_In_prime(3, zeta, s);
            CHECK(!got.empty());
            for (const auto& p : got) {
                const IndeterminacyVerdict v = in_In(p, 3);
                CHECK(v.member);
                CHECK(*v.first_hit_step == 2);
                // necessary bound |z2| <= |z0| + |z1| whenever |tau| > 1
                const ExtendedComplex t = tau(p.coords);
                if (!t.is_infinite() && std::abs(t.value()) > 1.0)
                    CHECK(std::abs(p.coords[2]) <=
                          std::abs(p.coords[0]) + std::abs(p.coords[1]) + 1e-12);
            }
        }
    }

    CHECK_THROWS_AS(generate_In_prime(3, cplx(0, 0), +1), InvalidConfigError);
    // zeta = 2 collapses the consistency equation to tau = 0, whose template
    // degenerates into I1: no genuine I_3' point exists over [+-1:2:1]
    CHECK_THROWS_AS(generate_In_prime(3, cplx(2, 0), +1), NoSolutionError);
    // zeta = 1 similarly produces only spurious roots
    CHECK_THROWS_AS(generate_In_prime(3, cplx(1, 0), +1), NoSolutionError);
}

TEST_CASE("generate_In_prime at n = 4 and 5") {
    for (int n : {4, 5}) {
        const auto pts = generate_In_prime(n, cplx(2.5, 0.5), +1);
        CHECK(!pts.empty());
        for (const auto& p : pts) {
            const IndeterminacyVerdict v = in_In(p, n);
            CHECK(v.member);
            CHECK(*v.first_hit_step == n - 1);
        }
        // monotonicity via Cor 4.9: members of I_n are members of I_m, m > n
        for (const auto& p : pts) {
            const IndeterminacyVerdict v = in_In(p, n + 3);
            CHECK(v.member);
        }
    }
}

TEST_CASE("exact and float modes agree on small rational orbits") {
    for (int k = 0; k < 300; ++k) {
        RAffine3 z{RationalComplex{rand_rational(30, 30), rand_rational(30, 30)},
                   RationalComplex{rand_rational(30, 30), rand_rational(30, 30)},
                   RationalComplex{rand_rational(30, 30), rand_rational(30, 30)}};
        if (is_zero_vector(z)) continue;
        const IndeterminacyVerdict ev = in_In_exact(z, 6);
        const IndeterminacyVerdict fv = in_In(normalize(to_cplx(z)), 6);
        CHECK(ev.member == fv.member);
        if (ev.member) CHECK(*ev.first_hit_step == *fv.first_hit_step);
    }
    // and on a known member family
    for (int k = 1; k <= 20; ++k) {
        const Rational q(k, 21);
        const RationalComplex zeta{Rational(2) - 4 * q * q};
        const RationalComplex z0{Rational(1) / (2 * q)};
        const RationalComplex z2{(Rational(1) - zeta.re) / (2 * q)};
        const RAffine3 z{z0, zeta, z2};
        const IndeterminacyVerdict ev = in_In_exact(z, 3);
        REQUIRE(ev.member);
        CHECK(*ev.first_hit_step == 2);
        const IndeterminacyVerdict fv = in_In(normalize(to_cplx(z)), 3);
        CHECK(fv.member);
        CHECK(*fv.first_hit_step == 2);
    }
}

TEST_CASE("I_n' sample sets export as JSON arrays of projective strings") {
    const auto pts = generate_In_prime(3, cplx(-2, 0), +1);
    const json arr = points_to_json(pts);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const std::string s = arr[k].get<std::string>();
        CHECK(s.front() == '[');
        // strings parse back to the same projective points
        const Point3 back = normalize(parse_affine3(s));
        CHECK(fs_distance(back, pts[k]) < 1e-12);
    }
}

TEST_CASE("exclusion certificate") {
    CHECK(E_exclusion_certificate(normalize(Affine3{cplx(1, 0), cplx(1, 0), cplx(3, 0)})));
    CHECK_FALSE(E_exclusion_certificate(normalize(Affine3{cplx(1, 0), cplx(1, 0), cplx(0, 0)})));
    CHECK_FALSE(E_exclusion_certificate(normalize(Affine3{cplx(2, 0), cplx(1, 0), cplx(1, 0)})));
    // tau = inf with dominant z2 is certified
    CHECK(E_exclusion_certificate(normalize(Affine3{cplx(0, 0), cplx(0, 0), cplx(1, 0)})));
}
