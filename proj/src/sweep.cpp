#include "spp/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>

#include "spp/spp_analysis.hpp"

namespace spp {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Per-point evaluation context. Intermediates shared between quantities
// (medium response, stack response, film modes) are computed once and
// memoized; every quantity failure is reported and mapped to NaN cells.
class PointEval {
  public:
    PointEval(const QwConfig& qw, const OpticalStack& stack, double theta_p)
        : qw_(qw), stack_(stack), theta_p_(theta_p), k0_(stack.k0()) {}

    // Appends quantity_width(id) values to out; appends to warnings on
    // failure.
    void emit(Quantity id, std::vector<double>& out,
              std::vector<std::string>& warnings, std::size_t row) {
        const int width = quantity_width(id);
        try {
            switch (id) {
                case Quantity::chi: {
                    const cplx v = medium().chi;
                    out.push_back(v.real());
                    out.push_back(v.imag());
                    return;
                }
                case Quantity::eps_s: {
                    const cplx v = medium().eps_s;
                    out.push_back(v.real());
                    out.push_back(v.imag());
                    return;
                }
                case Quantity::R:
                    out.push_back(stack_response().R);
                    return;
                case Quantity::T_el:
                    out.push_back(stack_response().T_el);
                    return;
                case Quantity::G:
                    out.push_back(gain_power(medium().eps_s, k0_));
                    return;
                case Quantity::L:
                    out.push_back(propagation_length_um(k_spp()));
                    return;
                case Quantity::delta_m:
                    out.push_back(depths().first);
                    return;
                case Quantity::delta_s:
                    out.push_back(depths().second);
                    return;
                case Quantity::k_lr: {
                    const cplx v = film_explicit(FilmMode::lr);
                    out.push_back(v.real());
                    out.push_back(v.imag());
                    return;
                }
                case Quantity::k_sr: {
                    const cplx v = film_explicit(FilmMode::sr);
                    out.push_back(v.real());
                    out.push_back(v.imag());
                    return;
                }
                case Quantity::k_lr_root: {
                    const cplx v = film_implicit(FilmMode::lr);
                    out.push_back(v.real());
                    out.push_back(v.imag());
                    return;
                }
                case Quantity::k_sr_root: {
                    const cplx v = film_implicit(FilmMode::sr);
                    out.push_back(v.real());
                    out.push_back(v.imag());
                    return;
                }
                case Quantity::l_lr:
                    out.push_back(
                        propagation_length_um(film_explicit(FilmMode::lr)));
                    return;
                case Quantity::l_sr:
                    out.push_back(
                        propagation_length_um(film_explicit(FilmMode::sr)));
                    return;
                case Quantity::vg_lr:
                    out.push_back(vg(FilmMode::lr));
                    return;
                case Quantity::vg_sr:
                    out.push_back(vg(FilmMode::sr));
                    return;
                case Quantity::tau_lr:
                    out.push_back(propagation_length_um(
                                      film_explicit(FilmMode::lr)) *
                                  1e3 / vg(FilmMode::lr));
                    return;
                case Quantity::tau_sr:
                    out.push_back(propagation_length_um(
                                      film_explicit(FilmMode::sr)) *
                                  1e3 / vg(FilmMode::sr));
                    return;
                case Quantity::im_k_lr_over_k0:
                    out.push_back(film_implicit(FilmMode::lr).imag() / k0_);
                    return;
                case Quantity::im_k_sr_over_k0:
                    out.push_back(film_implicit(FilmMode::sr).imag() / k0_);
                    return;
            }
        } catch (const numeric_error& e) {
            warnings.push_back("row " + std::to_string(row) + ": " +
                               quantity_name(id) + ": " + e.what());
            for (int i = 0; i < width; ++i) out.push_back(kNan);
            return;
        }
        for (int i = 0; i < width; ++i) out.push_back(kNan);
    }

  private:
    const MediumResponse& medium() {
        if (!medium_) medium_ = medium_response(qw_);
        return *medium_;
    }
    const StackResponse& stack_response() {
        if (!stack_resp_)
            stack_resp_ = stack_coefficients(stack_, medium().eps_s, theta_p_);
        return *stack_resp_;
    }
    cplx k_spp() {
        if (!k_spp_)
            k_spp_ = k_spp_single_interface(stack_.eps_m, medium().eps_s, k0_);
        return *k_spp_;
    }
    std::pair<double, double> depths() {
        if (!depths_)
            depths_ = penetration_depths(stack_.eps_m, medium().eps_s, k0_);
        return *depths_;
    }
    cplx film_explicit(FilmMode mode) {
        auto& slot = (mode == FilmMode::lr) ? k_lr_ : k_sr_;
        if (!slot)
            slot = thin_film_mode_explicit(stack_.eps_m, medium().eps_s, k0_,
                                           stack_.q, mode);
        return *slot;
    }
    cplx film_implicit(FilmMode mode) {
        auto& slot = (mode == FilmMode::lr) ? k_lr_root_ : k_sr_root_;
        if (!slot)
            slot = thin_film_mode_implicit(stack_.eps_m, medium().eps_s, k0_,
                                           stack_.q, film_explicit(mode),
                                           mode);
        return *slot;
    }
    double vg(FilmMode mode) {
        auto& slot = (mode == FilmMode::lr) ? vg_lr_ : vg_sr_;
        if (!slot)
            slot = group_velocity(mode, qw_, stack_,
                                  operating_photon_energy(qw_, stack_));
        return *slot;
    }

    QwConfig qw_;
    OpticalStack stack_;
    double theta_p_;
    double k0_;
    std::optional<MediumResponse> medium_;
    std::optional<StackResponse> stack_resp_;
    std::optional<cplx> k_spp_;
    std::optional<std::pair<double, double>> depths_;
    std::optional<cplx> k_lr_, k_sr_, k_lr_root_, k_sr_root_;
    std::optional<double> vg_lr_, vg_sr_;
};

void apply_axis(SweepVar var, double value, QwConfig& qw, OpticalStack& stack,
                double& theta_p) {
    switch (var) {
        case SweepVar::delta_p: qw.delta_p = value; break;
        case SweepVar::omega_b: qw.omega_b = value; break;
        case SweepVar::theta_p: theta_p = value; break;
        case SweepVar::q: stack.q = value; break;
    }
}

SweepResult run_sweep_impl(const RunConfig& cfg, bool parallel, int threads) {
    cfg.validate();

    const SweepAxis outer = cfg.axes[0];
    const bool nested = cfg.axes.size() == 2;
    const SweepAxis inner = nested ? cfg.axes[1] : SweepAxis{};
    const std::size_t n_inner = nested ? static_cast<std::size_t>(inner.count)
                                       : 1;
    const std::size_t rows = static_cast<std::size_t>(outer.count) * n_inner;

    SweepResult res;
    res.columns.push_back(sweep_var_name(outer.var));
    if (nested) res.columns.push_back(sweep_var_name(inner.var));
    for (Quantity id : cfg.outputs) {
        if (quantity_width(id) == 2) {
            res.columns.push_back(std::string(quantity_name(id)) + ".re");
            res.columns.push_back(std::string(quantity_name(id)) + ".im");
        } else {
            res.columns.push_back(quantity_name(id));
        }
    }
    const std::size_t cols = res.columns.size();
    res.rows = rows;
    res.cells.assign(rows * cols, kNan);

    std::vector<std::vector<std::string>> row_warnings(rows);

    auto body = [&](long r) {
        const std::size_t row = static_cast<std::size_t>(r);
        const int i = static_cast<int>(row / n_inner);
        const int j = static_cast<int>(row % n_inner);

        QwConfig qw = cfg.qw;
        OpticalStack stack = cfg.stack;
        double theta_p = cfg.theta_p;
        apply_axis(outer.var, outer.value_at(i), qw, stack, theta_p);
        if (nested) apply_axis(inner.var, inner.value_at(j), qw, stack,
                               theta_p);

        std::vector<double> values;
        values.reserve(cols);
        values.push_back(outer.value_at(i));
        if (nested) values.push_back(inner.value_at(j));

        PointEval eval(qw, stack, theta_p);
        for (Quantity id : cfg.outputs)
            eval.emit(id, values, row_warnings[row], row);

        std::copy(values.begin(), values.end(),
                  res.cells.begin() + static_cast<std::ptrdiff_t>(row * cols));
    };

    const long n = static_cast<long>(rows);
#ifdef _OPENMP
    if (parallel) {
        if (threads > 0) {
#pragma omp parallel for schedule(static) num_threads(threads)
            for (long r = 0; r < n; ++r) body(r);
        } else {
#pragma omp parallel for schedule(static)
            for (long r = 0; r < n; ++r) body(r);
        }
    } else {
        for (long r = 0; r < n; ++r) body(r);
    }
#else
    (void)parallel;
    (void)threads;
    for (long r = 0; r < n; ++r) body(r);
#endif

    for (auto& w : row_warnings)
        res.warnings.insert(res.warnings.end(), w.begin(), w.end());
    return res;
}

} // namespace

int quantity_width(Quantity id) {
    switch (id) {
        case Quantity::chi:
        case Quantity::eps_s:
        case Quantity::k_lr:
        case Quantity::k_sr:
        case Quantity::k_lr_root:
        case Quantity::k_sr_root: return 2;
        default: return 1;
    }
}

SweepResult run_sweep_serial(const RunConfig& cfg) {
    return run_sweep_impl(cfg, /*parallel=*/false, 0);
}

SweepResult run_sweep(const RunConfig& cfg, int threads) {
    return run_sweep_impl(cfg, /*parallel=*/true, threads);
}

std::string to_csv(const SweepResult& result) {
    std::string out;
    const std::size_t cols = result.columns.size();
    out.reserve(result.rows * cols * 12 + 64);
    for (std::size_t c = 0; c < cols; ++c) {
        if (c) out += ',';
        out += result.columns[c];
    }
    out += '\n';
    for (std::size_t r = 0; r < result.rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c) out += ',';
            out += format_double(result.cells[r * cols + c]);
        }
        out += '\n';
    }
    return out;
}

void write_csv_file(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open output file '" + path + "'");
    out << to_csv(result);
    if (!out) throw io_error("failed writing '" + path + "'");

    if (!result.warnings.empty()) {
        std::ofstream log(path + ".log", std::ios::binary);
        if (!log) throw io_error("cannot open warning log '" + path + ".log'");
        for (const auto& w : result.warnings) log << w << '\n';
    }
}

} // namespace spp
