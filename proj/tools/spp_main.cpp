// spp: computes the optical response of a driven four-level double quantum
// well behind a thin metal film and characterizes the surface plasmon
// polaritons it launches. Subcommands reproduce the published figure panels,
// run free-form parameter sweeps, and calibrate the susceptibility
// prefactor.

#include <cstdio>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "spp/figures.hpp"
#include "spp/spp_analysis.hpp"
#include "spp/svg_plot.hpp"
#include "spp/sweep.hpp"

namespace {

int run_fig(const std::string& id, const std::string& out_dir, int threads,
            bool plot, bool fig7_residual) {
    std::vector<std::string> ids;
    if (id == "all")
        ids = spp::figure_ids();
    else
        ids.push_back(id);

    std::vector<std::string> warnings;
    for (const auto& panel : ids) {
        const std::string path = spp::reproduce_figure(
            panel, out_dir, threads, plot, fig7_residual, &warnings);
        std::printf("fig %-3s -> %s\n", panel.c_str(), path.c_str());
    }
    if (!warnings.empty())
        std::fprintf(stderr,
                     "%zu grid point(s) hit a physics pole; cells written as "
                     "nan (see .log sidecars)\n",
                     warnings.size());
    return 0;
}

int run_sweep_cmd(const std::string& config_path, const std::string& out_path,
                  int threads) {
    spp::RunConfig cfg = spp::parse_config_file(config_path);
    if (!out_path.empty()) cfg.out_path = out_path;

    const spp::SweepResult res = spp::run_sweep(cfg, threads);
    if (cfg.out_path.empty()) {
        std::fputs(spp::to_csv(res).c_str(), stdout);
        for (const auto& w : res.warnings)
            std::fprintf(stderr, "warning: %s\n", w.c_str());
    } else {
        spp::write_csv_file(res, cfg.out_path);
        if (cfg.plot) {
            const std::string svg =
                std::filesystem::path(cfg.out_path).replace_extension(".svg")
                    .string();
            spp::write_svg_file(res, cfg, svg);
        }
        std::printf("%zu rows -> %s\n", res.rows, cfg.out_path.c_str());
        if (!res.warnings.empty())
            std::fprintf(stderr,
                         "%zu grid point(s) hit a physics pole; see %s.log\n",
                         res.warnings.size(), cfg.out_path.c_str());
    }
    return 0;
}

int run_calibrate(double target_detuning, double target_angle, double omega_b,
                  double tol) {
    spp::QwConfig qw;
    qw.omega_b = omega_b;
    spp::OpticalStack stack;

    const double alpha = spp::calibrate_prefactor(qw, stack, target_detuning,
                                                  target_angle, tol);

    qw.alpha = alpha;
    qw.delta_p = target_detuning;
    const spp::cplx eps_s = spp::medium_response(qw).eps_s;
    const double k0 = stack.k0();
    const double residual =
        spp::k_spp_single_interface(stack.eps_m, eps_s, k0).real() -
        spp::in_plane_wavevector(stack, target_angle);

    std::printf("alpha = %.17g meV\n", alpha);
    std::printf("residual Re[k_spp] - k_z = %.3e nm^-1 (tol %.1e * k0)\n",
                residual, tol);
    std::printf("eps_s at the target point = %s\n",
                spp::format_complex(eps_s).c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"surface plasmon polariton response of a four-level double "
                 "quantum well under four-wave-mixing drive"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags are valid after the subcommand too

    int threads = 0;
    double tol = 1e-12;
    app.add_option("--threads", threads,
                   "worker threads for sweeps (0 = OpenMP default)");
    app.add_option("--tol", tol, "calibration residual tolerance, units of k0");

    auto* fig = app.add_subcommand("fig", "reproduce a published figure panel");
    std::string fig_id;
    std::string fig_out = "figures";
    bool plot = false, fig7_residual = false;
    fig->add_option("--id", fig_id, "panel id (2a..9d) or 'all'")->required();
    fig->add_option("--out", fig_out, "output directory (default: figures)");
    fig->add_flag("--plot", plot, "also write an SVG rendering");
    fig->add_flag("--fig7-residual", fig7_residual,
                  "panels 7a/7b: emit the dispersion residual at the "
                  "explicit-form k instead of the solved root");

    auto* sweep = app.add_subcommand("sweep", "run a config-driven sweep");
    std::string sweep_config, sweep_out;
    sweep->add_option("--config", sweep_config, "run configuration file")
        ->required();
    sweep->add_option("--out", sweep_out,
                      "output CSV (overrides the config's out key)");

    auto* cal = app.add_subcommand(
        "calibrate", "solve for the susceptibility prefactor alpha");
    double target_detuning = -1.73, target_angle = 77.0, cal_omega_b = 2.0;
    cal->add_option("--target-detuning", target_detuning,
                    "probe detuning the resonance is imposed at, meV");
    cal->add_option("--target-angle", target_angle,
                    "probe incidence angle, degrees");
    cal->add_option("--omega-b", cal_omega_b,
                    "pump Rabi frequency during calibration, meV "
                    "(default: the 2 meV operating point)");

    try {
        app.parse(argc, argv);
        if (*fig) return run_fig(fig_id, fig_out, threads, plot, fig7_residual);
        if (*sweep) return run_sweep_cmd(sweep_config, sweep_out, threads);
        if (*cal)
            return run_calibrate(target_detuning, target_angle, cal_omega_b,
                                 tol);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 1;
    } catch (const spp::config_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const spp::no_bracket& e) {
        std::fprintf(stderr, "numerical failure: %s\nresidual curve:\n%s",
                     e.what(), e.residuals.c_str());
        return 2;
    } catch (const spp::numeric_error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 2;
    } catch (const spp::io_error& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return 3;
    }
    return 0;
}
