#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "specdyn/point.hpp"
#include "specdyn/rational.hpp"

using namespace specdyn;

namespace {

std::mt19937_64 rng(42);

cplx random_disk(double r) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(r * std::sqrt(u(rng)), 2.0 * M_PI * u(rng));
}

Affine3 random_point() {
    return {random_disk(2.0), random_disk(2.0), random_disk(2.0)};
}

} // namespace

TEST_CASE("normalize basics") {
    const Point3 p = normalize(Affine3{cplx(2, 0), cplx(0, 0), cplx(2, 0)});
    CHECK(p.pivot == 0);
    CHECK(p.coords[0] == cplx(1, 0));
    CHECK(p.coords[1] == cplx(0, 0));
    CHECK(p.coords[2] == cplx(1, 0));

    const Point3 q = normalize(Affine3{cplx(-9, 0), cplx(3, 0), cplx(-24, 0)});
    CHECK(q.pivot == 2);
    CHECK(q.coords[0].real() == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(q.coords[1].real() == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK(q.coords[2] == cplx(1, 0));

    CHECK_THROWS_AS(normalize(Affine3{cplx(0, 0), cplx(0, 0), cplx(0, 0)}), ZeroVectorError);
}

TEST_CASE("normalize is idempotent bit-for-bit") {
    for (int k = 0; k < 500; ++k) {
        const Point3 p = normalize(random_point());
        const Point3 q = normalize(p.coords);
        CHECK(p.pivot == q.pivot);
        for (int i = 0; i < 3; ++i) CHECK(p.coords[std::size_t(i)] == q.coords[std::size_t(i)]);
    }
}

TEST_CASE("normalize is scale invariant") {
    for (int k = 0; k < 500; ++k) {
        const Affine3 v = random_point();
        cplx c = random_disk(3.0);
        if (std::abs(c) < 1e-3) c = cplx(1.5, 0.5);
        Affine3 w{c * v[0], c * v[1], c * v[2]};
        const Point3 p = normalize(v), q = normalize(w);
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(p.coords[std::size_t(i)] - q.coords[std::size_t(i)]) < 1e-12);
    }
}

TEST_CASE("fubini-study distance") {
    const Point3 p = normalize(Affine3{cplx(1, 0), cplx(0.3, 0.2), cplx(-2, 1)});
    CHECK(fs_distance(p, p) == doctest::Approx(0.0).epsilon(1e-15));

    const Affine3 e0{cplx(1, 0), cplx(0, 0), cplx(0, 0)};
    const Affine3 e1{cplx(0, 0), cplx(1, 0), cplx(0, 0)};
    CHECK(fs_distance(e0, e1) == doctest::Approx(M_PI / 2));

    const Affine3 a{cplx(1, 0), cplx(0, 0), cplx(1, 0)};
    const Affine3 b{cplx(1, 0), cplx(0, 0), cplx(-1, 0)};
    CHECK(fs_distance(a, b) == doctest::Approx(M_PI / 2));
}

TEST_CASE("fs triangle inequality on random triples") {
    for (int k = 0; k < 2000; ++k) {
        const Affine3 a = random_point(), b = random_point(), c = random_point();
        CHECK(fs_distance(a, c) <= fs_distance(a, b) + fs_distance(b, c) + 1e-12);
    }
}

TEST_CASE("p-norms") {
    CHECK(norm_p(Affine3{cplx(1, 0), cplx(0, 0), cplx(0, 0)}, 2.0) == doctest::Approx(1.0));
    CHECK(norm_p(Affine3{cplx(1, 0), cplx(1, 0), cplx(1, 0)}, 1.0) == doctest::Approx(3.0));
    CHECK(norm_p(Affine3{cplx(3, 0), cplx(4, 0), cplx(0, 0)}, 2.0) == doctest::Approx(5.0));
}

TEST_CASE("extended complex arithmetic rules") {
    const ExtendedComplex inf = ExtendedComplex::infinity();
    const ExtendedComplex two(cplx(2.0, 0.0));
    const ExtendedComplex zero(cplx(0.0, 0.0));
    CHECK((inf * two).is_infinite());
    CHECK((inf + two).is_infinite());
    CHECK_THROWS_AS(inf * zero, UndefinedOperationError);
    CHECK_THROWS_AS(inf - inf, UndefinedOperationError);
}

TEST_CASE("point text form round-trips at 17 digits") {
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int k = 0; k < 300; ++k) {
        const Affine3 v{cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
        const Affine3 back = parse_affine3(format_affine(v));
        for (int i = 0; i < 3; ++i) CHECK(back[std::size_t(i)] == v[std::size_t(i)]);
        const Point3 p = normalize(v);
        const Affine3 back2 = parse_affine3(format_projective(p));
        for (int i = 0; i < 3; ++i) CHECK(back2[std::size_t(i)] == p.coords[std::size_t(i)]);
    }
    CHECK(parse_complex("3i") == cplx(0, 3));
    CHECK(parse_complex("-i") == cplx(0, -1));
    CHECK(parse_complex("1.5e-3+2e5i") == cplx(1.5e-3, 2e5));
    CHECK_THROWS_AS(parse_affine3("1,2"), DimensionMismatchError);
    CHECK_THROWS_AS(parse_complex("fish"), ParseError);
}

TEST_CASE("exact rational normalization") {
    const RationalComplex two(Rational(2)), zero(Rational(0));
    const RAffine3 v{two, zero, two};
    const RAffine3 n = normalize_exact(v);
    CHECK(n[0] == RationalComplex(Rational(1)));
    CHECK(n[2] == RationalComplex(Rational(1)));
    CHECK(projectively_equal_exact(v, n));
}
