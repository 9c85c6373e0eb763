#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "specdyn/render.hpp"
#include "specdyn/spectrum.hpp"

using namespace specdyn;

TEST_CASE("config validation") {
    RenderConfig bad;
    bad.resolution = 4;
    CHECK_THROWS_AS(validate(bad), InvalidConfigError);
    bad.resolution = 10000;
    CHECK_THROWS_AS(validate(bad), InvalidConfigError);
    bad.resolution = 64;
    bad.x_min = 1.0;
    bad.x_max = 1.0;
    CHECK_THROWS_AS(validate(bad), InvalidConfigError);
}

TEST_CASE("serial and parallel renders are byte-identical") {
    RenderConfig cfg;
    cfg.resolution = 48;
    cfg.x_min = cfg.y_min = -2.0;
    cfg.x_max = cfg.y_max = 2.0;
    for (RenderMode m : {RenderMode::classification, RenderMode::escape_time, RenderMode::arg_f}) {
        cfg.mode = m;
        const ImageBuffer a = render_slice(cfg);
        const ImageBuffer b = render_slice_serial(cfg);
        const ImageBuffer c = render_slice(cfg);
        CHECK(a.pixels == b.pixels);
        CHECK(a.pixels == c.pixels); // reruns are deterministic
    }
}

TEST_CASE("pixel nearest (1, 1.875) on the 8x8 [-2,2] grid is spectrum black") {
    RenderConfig cfg;
    cfg.resolution = 8;
    cfg.x_min = cfg.y_min = -2.0;
    cfg.x_max = cfg.y_max = 2.0;
    const ImageBuffer img = render_slice(cfg);

    int best_i = 0, best_j = 0;
    double best = 1e300;
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) {
            const double x = -2.0 + (i + 0.5) * 4.0 / 8;
            const double y = -2.0 + (j + 0.5) * 4.0 / 8;
            const double d = std::hypot(x - 1.0, y - 1.875);
            if (d < best) {
                best = d;
                best_i = i;
                best_j = j;
            }
        }
    const std::size_t at = std::size_t(3) * (std::size_t(best_j) * 8 + std::size_t(best_i));
    CHECK(img.pixels[at] == 0);
    CHECK(img.pixels[at + 1] == 0);
    CHECK(img.pixels[at + 2] == 0);
}

TEST_CASE("windows inside the real spectrum slice render all black") {
    RenderConfig cfg;
    cfg.resolution = 16;
    cfg.x_min = 0.5;
    cfg.x_max = 0.7;
    cfg.y_min = 0.6;
    cfg.y_max = 0.8;
    // whole window satisfies (|x|-|y|)^2 <= 1 <= (|x|+|y|)^2
    for (int j = 0; j < 16; ++j)
        for (int i = 0; i < 16; ++i) {
            const double x = cfg.x_min + (i + 0.5) * (cfg.x_max - cfg.x_min) / 16;
            const double y = cfg.y_min + (j + 0.5) * (cfg.y_max - cfg.y_min) / 16;
            REQUIRE(real_slice_spectrum(x, y));
        }
    const ImageBuffer img = render_slice(cfg);
    for (unsigned char b : img.pixels) CHECK(b == 0);
}

TEST_CASE("ppm bytes are deterministic and well-formed") {
    RenderConfig cfg;
    cfg.resolution = 16;
    const ImageBuffer img = render_slice(cfg);
    const std::string p1 = "render_test_1.ppm", p2 = "render_test_2.ppm";
    write_ppm(img, p1);
    write_ppm(render_slice(cfg), p2);

    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    };
    const std::string b1 = slurp(p1), b2 = slurp(p2);
    CHECK(b1 == b2);
    CHECK(b1.rfind("P6\n16 16\n255\n", 0) == 0);
    CHECK(b1.size() == 13 + 3 * 16 * 16);
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("chart selection pins the right coordinate") {
    RenderConfig cfg;
    cfg.resolution = 8;
    cfg.chart = 1;
    const Affine3 p = chart_point(cfg, 0, 0);
    CHECK(p[1] == cplx(1, 0));
    cfg.chart = 2;
    const Affine3 q = chart_point(cfg, 0, 0);
    CHECK(q[2] == cplx(1, 0));
}
