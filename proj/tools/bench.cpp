// Benchmark comparing the OpenMP renderer against the serial reference,
// plus the dense symmetric eigensolver at oracle sizes.

#include <chrono>
#include <cstdio>

#include "specdyn/eigen_sym.hpp"
#include "specdyn/koopman.hpp"
#include "specdyn/render.hpp"

using namespace specdyn;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_render(int resolution) {
    RenderConfig cfg;
    cfg.resolution = resolution;

    auto t0 = std::chrono::steady_clock::now();
    const ImageBuffer serial = render_slice_serial(cfg);
    const double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const ImageBuffer parallel = render_slice(cfg);
    const double tp = seconds_since(t0);

    const bool identical = serial.pixels == parallel.pixels;
    std::printf("render %4dx%-4d  serial %7.3fs  parallel %7.3fs (%d threads)  speedup %5.2fx  %s\n",
                resolution, resolution, ts, tp, render_thread_count(), ts / tp,
                identical ? "byte-identical" : "OUTPUT MISMATCH");
}

void bench_eigensolve(int level) {
    const LevelRep rep = build_grigorchuk_level(level);
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<double> eig = pencil_eigenvalues(rep, {1.0, 1.0, 1.0, 1.0});
    std::printf("eigensolve level %2d (%4zu x %-4zu)  %7.3fs  spectrum [%.6f, %.6f]\n", level,
                rep.dim(), rep.dim(), seconds_since(t0), eig.front(), eig.back());
}

} // namespace

int main(int argc, char** argv) {
    int res = 256;
    int level = 10;
    if (argc > 1) res = std::atoi(argv[1]);
    if (argc > 2) level = std::atoi(argv[2]);

    bench_render(res);
    bench_eigensolve(level);
    return 0;
}
