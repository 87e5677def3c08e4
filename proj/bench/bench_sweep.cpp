// Times the OpenMP sweep kernel against the serial reference on the
// angle-spectrum grid and checks that both emit byte-identical CSV.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spp/sweep.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    // Optional scale factor keeps the smoke run in CI cheap.
    const double scale = argc > 1 ? std::atof(argv[1]) : 1.0;

    spp::RunConfig cfg;
    cfg.qw.delta_p = -1.73;
    cfg.axes.push_back({spp::SweepVar::omega_b, 0.0, 4.0,
                        std::max(2, static_cast<int>(201 * scale))});
    cfg.axes.push_back({spp::SweepVar::theta_p, -90.0, 90.0,
                        std::max(2, static_cast<int>(181 * scale))});
    cfg.outputs = {spp::Quantity::R, spp::Quantity::T_el, spp::Quantity::G,
                   spp::Quantity::L};

    const std::size_t cells =
        static_cast<std::size_t>(cfg.axes[0].count) * cfg.axes[1].count;
    std::printf("grid: %d x %d (%zu points)\n", cfg.axes[0].count,
                cfg.axes[1].count, cells);

    auto t0 = std::chrono::steady_clock::now();
    const spp::SweepResult serial = spp::run_sweep_serial(cfg);
    const double t_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const spp::SweepResult parallel = spp::run_sweep(cfg);
    const double t_parallel = seconds_since(t0);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("serial:   %8.3f s  (%.1f kpts/s)\n", t_serial,
                cells / t_serial / 1e3);
    std::printf("parallel: %8.3f s  (%.1f kpts/s)\n", t_parallel,
                cells / t_parallel / 1e3);
    std::printf("speedup:  %.2fx\n", t_serial / t_parallel);

    const std::string a = spp::to_csv(serial);
    const std::string b = spp::to_csv(parallel);
    if (a != b) {
        std::fprintf(stderr,
                     "FAIL: parallel CSV differs from serial reference\n");
        return 1;
    }
    std::printf("serial and parallel CSV byte-identical (%zu bytes)\n",
                a.size());
    return 0;
}
