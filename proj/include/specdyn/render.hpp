#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specdyn/classification.hpp"

namespace specdyn {

enum class RenderMode { classification, escape_time, arg_f };

struct RenderConfig {
    int chart = 0;          // coordinate pinned to 1
    double x_min = -3.0, x_max = 3.0;
    double y_min = -3.0, y_max = 3.0;
    int resolution = 512;   // pixels per axis, in [8, 8192]
    RenderMode mode = RenderMode::classification;
    int max_iter = 100;
    double tol = 1e-10;
};

struct ImageBuffer {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels; // row-major RGB
};

/// Affine point [.. 1 ..] of the configured chart at pixel center (i, j).
Affine3 chart_point(const RenderConfig& cfg, int i, int j);

/// Per-pixel color. classification: spectrum black, indeterminacy red,
/// certified Fatou white, numerical Fatou light gray, unknown blue.
/// escape_time: gray ramp by the first n with |T^n(tau)| > 1e6.
/// arg_f: hue by arg(limit_f).
std::array<std::uint8_t, 3> render_pixel(const RenderConfig& cfg, int i, int j);

/// Row-parallel (OpenMP) renderer. Deterministic: identical config gives
/// byte-identical buffers regardless of thread count. SPECDYN_THREADS caps
/// the worker pool.
ImageBuffer render_slice(const RenderConfig& cfg);

/// Serial reference implementation, kept for testing and benchmarking.
ImageBuffer render_slice_serial(const RenderConfig& cfg);

/// Binary PPM (P6); bytes are a pure function of the buffer.
void write_ppm(const ImageBuffer& img, const std::string& path);

void validate(const RenderConfig& cfg);

int render_thread_count();

} // namespace specdyn
