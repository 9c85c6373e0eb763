#include "specdyn/render.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace specdyn {

void validate(const RenderConfig& cfg) {
    if (cfg.chart < 0 || cfg.chart > 2) throw InvalidConfigError("chart must be 0, 1 or 2");
    if (cfg.resolution < 8 || cfg.resolution > 8192)
        throw InvalidConfigError("resolution must lie in [8, 8192]");
    if (!(cfg.x_min < cfg.x_max) || !(cfg.y_min < cfg.y_max))
        throw InvalidConfigError("degenerate coordinate range");
    if (cfg.max_iter < 1) throw InvalidConfigError("max_iter must be positive");
}

int render_thread_count() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("SPECDYN_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
#else
    return 1;
#endif
}

Affine3 chart_point(const RenderConfig& cfg, int i, int j) {
    const double x = cfg.x_min + (i + 0.5) * (cfg.x_max - cfg.x_min) / cfg.resolution;
    const double y = cfg.y_min + (j + 0.5) * (cfg.y_max - cfg.y_min) / cfg.resolution;
    Affine3 p{cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)};
    p[std::size_t(cfg.chart)] = cplx(1.0, 0.0);
    int slot = 0;
    for (int k = 0; k < 3; ++k) {
        if (k == cfg.chart) continue;
        p[std::size_t(k)] = cplx(slot == 0 ? x : y, 0.0);
        ++slot;
    }
    return p;
}

namespace {

std::array<std::uint8_t, 3> hsv_to_rgb(double h, double s, double v) {
    h = std::fmod(std::fmod(h, 360.0) + 360.0, 360.0) / 60.0;
    const int sector = int(h);
    const double f = h - sector;
    const double p = v * (1.0 - s);
    const double q = v * (1.0 - s * f);
    const double t = v * (1.0 - s * (1.0 - f));
    double r, g, b;
    switch (sector % 6) {
        case 0: r = v; g = t; b = p; break;
        case 1: r = q; g = v; b = p; break;
        case 2: r = p; g = v; b = t; break;
        case 3: r = p; g = q; b = v; break;
        case 4: r = t; g = p; b = v; break;
        default: r = v; g = p; b = q; break;
    }
    auto byte = [](double u) { return std::uint8_t(std::lround(255.0 * u)); };
    return {byte(r), byte(g), byte(b)};
}

} // namespace

std::array<std::uint8_t, 3> render_pixel(const RenderConfig& cfg, int i, int j) {
    const Affine3 p = chart_point(cfg, i, j);

    switch (cfg.mode) {
        case RenderMode::classification: {
            const Classification c = classify_point(normalize(p), cfg.max_iter, cfg.tol);
            switch (c.kind) {
                case Classification::Kind::julia_spectrum: return {0, 0, 0};
                case Classification::Kind::julia_indeterminacy: return {255, 0, 0};
                case Classification::Kind::fatou_certified: return {255, 255, 255};
                case Classification::Kind::fatou_numerical: return {200, 200, 200};
                case Classification::Kind::unknown: return {0, 0, 255};
            }
            return {0, 0, 255};
        }
        case RenderMode::escape_time: {
            const ExtendedComplex t0 = tau(p);
            int n = cfg.max_iter;
            if (t0.is_infinite()) {
                n = 0;
            } else {
                cplx t = t0.value();
                for (int k = 0; k < cfg.max_iter; ++k) {
                    if (std::abs(t) > 1e6) {
                        n = k;
                        break;
                    }
                    t = 2.0 * t * t - 1.0;
                }
            }
            const double u = 1.0 - double(n) / double(cfg.max_iter);
            const std::uint8_t g = std::uint8_t(std::lround(255.0 * u));
            return {g, g, g};
        }
        case RenderMode::arg_f: {
            const cplx f = limit_f(p);
            const double hue = (std::arg(f) + M_PI) / (2.0 * M_PI) * 360.0;
            return hsv_to_rgb(hue, 1.0, 1.0);
        }
    }
    return {0, 0, 0};
}

namespace {

ImageBuffer render_common(const RenderConfig& cfg, bool parallel) {
    validate(cfg);
    ImageBuffer img;
    img.width = img.height = cfg.resolution;
    img.pixels.assign(std::size_t(3) * cfg.resolution * cfg.resolution, 0);

    const int res = cfg.resolution;
    auto fill_row = [&](int j) {
        std::uint8_t* row = img.pixels.data() + std::size_t(3) * res * j;
        for (int i = 0; i < res; ++i) {
            const auto rgb = render_pixel(cfg, i, j);
            row[3 * i + 0] = rgb[0];
            row[3 * i + 1] = rgb[1];
            row[3 * i + 2] = rgb[2];
        }
    };

    if (parallel) {
#ifdef _OPENMP
        const int threads = render_thread_count();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (int j = 0; j < res; ++j) fill_row(j);
#else
        for (int j = 0; j < res; ++j) fill_row(j);
#endif
    } else {
        for (int j = 0; j < res; ++j) fill_row(j);
    }
    return img;
}

} // namespace

ImageBuffer render_slice(const RenderConfig& cfg) { return render_common(cfg, true); }

ImageBuffer render_slice_serial(const RenderConfig& cfg) { return render_common(cfg, false); }

void write_ppm(const ImageBuffer& img, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw IOFailureError("cannot open '" + path + "' for writing");
    std::fprintf(f, "P6\n%d %d\n255\n", img.width, img.height);
    const std::size_t want = img.pixels.size();
    const std::size_t got = std::fwrite(img.pixels.data(), 1, want, f);
    std::fclose(f);
    if (got != want) throw IOFailureError("short write to '" + path + "'");
}

} // namespace specdyn
