#include "spp/spp_analysis.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "spp/root_finding.hpp"

namespace spp {

namespace {

// Principal square root pushed onto the Re >= 0 branch (Im >= 0 tie-break).
cplx sqrt_re_pos(cplx z) {
    cplx w = std::sqrt(z);
    if (w.real() < 0.0 || (w.real() == 0.0 && w.imag() < 0.0)) w = -w;
    return w;
}

// Decay constant into medium eps for in-plane wavevector k.
cplx decay_constant(cplx eps, double k0, cplx k) {
    return sqrt_re_pos(k * k - eps * k0 * k0);
}

} // namespace

cplx k_spp_single_interface(cplx eps_m, cplx eps_s, double k0,
                            double pole_eps) {
    const cplx sum = eps_m + eps_s;
    const double scale = std::abs(eps_m) + std::abs(eps_s);
    if (std::abs(sum) < pole_eps * std::max(scale, 1e-300))
        throw surface_plasmon_pole("eps_m + eps_s underflow "
                                   "(surface plasmon resonance pole)");
    return k0 * sqrt_re_pos(eps_m * eps_s / sum);
}

double find_resonance(const QwConfig& cfg, const OpticalStack& stack,
                      double theta_p_deg, ResonanceVar var, double lo,
                      double hi, double tol_rel) {
    stack.validate();
    const double k0 = stack.k0();

    auto k_spp_at = [&](double x) {
        QwConfig c = cfg;
        double theta = theta_p_deg;
        if (var == ResonanceVar::delta_p)
            c.delta_p = x;
        else
            theta = x;
        const cplx eps_s = medium_response(c).eps_s;
        return std::make_pair(
            k_spp_single_interface(stack.eps_m, eps_s, k0),
            in_plane_wavevector(stack, theta));
    };
    auto residual = [&](double x) {
        const auto [k, k_z] = k_spp_at(x);
        return k.real() - k_z;
    };

    // The matching condition can hold on both flanks of the EIT window;
    // refine every bracket and keep the root with the least SPP damping
    // (that is the resonance the probe actually excites sharply).
    constexpr int kScan = 200;
    std::vector<double> xs(kScan), fs(kScan);
    for (int i = 0; i < kScan; ++i) {
        xs[i] = lo + (hi - lo) * static_cast<double>(i) / (kScan - 1);
        fs[i] = residual(xs[i]);
    }
    double best = 0.0, best_damping = 0.0;
    bool found = false;
    for (int i = 0; i + 1 < kScan; ++i) {
        if (fs[i] != 0.0 && std::signbit(fs[i]) == std::signbit(fs[i + 1]))
            continue;
        const double root = bracketed_root(residual, xs[i], xs[i + 1],
                                           tol_rel * k0, /*scan_points=*/2);
        const double damping = std::abs(k_spp_at(root).first.imag());
        if (!found || damping < best_damping) {
            best = root;
            best_damping = damping;
            found = true;
        }
    }
    if (!found) {
        // Reuse the residual-table diagnostics of the plain scan.
        return bracketed_root(residual, lo, hi, tol_rel * k0);
    }
    return best;
}

double propagation_length_um(cplx k) {
    if (k.imag() <= 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / (2.0 * k.imag()) * 1e-3;
}

std::pair<double, double> penetration_depths(cplx eps_m, cplx eps_s,
                                             double k0) {
    const double num = std::abs(eps_s + eps_m);
    const double delta_m = std::sqrt(num / std::abs(eps_m)) / k0;
    const double delta_s = std::sqrt(num / std::abs(eps_s)) / k0;
    return {delta_m, delta_s};
}

cplx thin_film_mode_explicit(cplx eps_m, cplx eps_s, double k0, double q,
                             FilmMode mode) {
    if (mode == FilmMode::lr) {
        const cplx corr = (k0 * eps_s * q / 2.0) * (1.0 - eps_s / eps_m);
        return k0 * sqrt_re_pos(eps_s + corr * corr);
    }
    if (q == 0.0)
        throw thickness_zero("k_SR diverges as 1/q at zero film thickness");
    const cplx corr = 2.0 * eps_s / (q * k0 * eps_m);
    return k0 * sqrt_re_pos(eps_s + corr * corr);
}

std::pair<cplx, cplx> thin_film_modes_explicit(cplx eps_m, cplx eps_s,
                                               double k0, double q) {
    return {thin_film_mode_explicit(eps_m, eps_s, k0, q, FilmMode::lr),
            thin_film_mode_explicit(eps_m, eps_s, k0, q, FilmMode::sr)};
}

cplx film_dispersion_residual(cplx k, cplx eps_m, cplx eps_s, double k0,
                              double q, FilmMode mode) {
    const cplx km = decay_constant(eps_m, k0, k);
    const cplx ks = decay_constant(eps_s, k0, k);
    const cplx th = std::tanh(km * q / 2.0);
    const cplx hyperbolic = (mode == FilmMode::lr) ? th : 1.0 / th;
    return hyperbolic + eps_m * ks / (eps_s * km);
}

cplx thin_film_mode_implicit(cplx eps_m, cplx eps_s, double k0, double q,
                             cplx seed, FilmMode mode, double tol_f,
                             int max_iter) {
    auto F = [&](cplx k) {
        return film_dispersion_residual(k, eps_m, eps_s, k0, q, mode);
    };
    return newton_complex(F, seed, tol_f, max_iter);
}

double operating_photon_energy(const QwConfig& cfg,
                               const OpticalStack& stack) {
    return hc_mev_nm / stack.lambda0 + cfg.delta_p;
}

namespace {

double mode_slope(FilmMode mode, const QwConfig& cfg,
                  const OpticalStack& stack, double E_ref, double dE) {
    auto k_at = [&](double E) {
        const double k0 = 2.0 * pi * E / hc_mev_nm;
        QwConfig c = cfg;
        c.delta_p = E - hc_mev_nm / stack.lambda0;
        const cplx eps_s = medium_response(c).eps_s;
        return thin_film_mode_explicit(stack.eps_m, eps_s, k0, stack.q, mode)
            .real();
    };
    return (k_at(E_ref + dE) - k_at(E_ref - dE)) / (2.0 * dE);
}

} // namespace

double group_velocity(FilmMode mode, const QwConfig& cfg,
                      const OpticalStack& stack, double photon_energy_ref,
                      double dE) {
    if (dE <= 0.0) throw validation_error("group_velocity: dE must be > 0");
    const double s_coarse = mode_slope(mode, cfg, stack, photon_energy_ref, dE);
    const double s_fine =
        mode_slope(mode, cfg, stack, photon_energy_ref, dE / 2.0);
    if (std::abs(s_coarse - s_fine) > 0.01 * std::abs(s_fine))
        throw step_too_large("group velocity finite-difference step too "
                             "large: dE and dE/2 slopes differ by > 1%");
    return 1.0 / (hbar_mev_fs * s_fine);
}

double coupler_free_thickness(const QwConfig& cfg, const OpticalStack& stack,
                              FilmMode mode) {
    stack.validate();
    const double k0 = stack.k0();
    const cplx eps_s = medium_response(cfg).eps_s;
    auto residual = [&](double q) {
        return thin_film_mode_explicit(stack.eps_m, eps_s, k0, q, mode)
                   .real() -
               k0 * stack.n_t;
    };
    return bracketed_root(residual, 1.0, 50.0, 1e-10 * k0);
}

SppCharacter analyze_spp(const QwConfig& cfg, const OpticalStack& stack) {
    stack.validate();
    const double k0 = stack.k0();
    const cplx eps_s = medium_response(cfg).eps_s;

    SppCharacter out;
    out.k_spp = k_spp_single_interface(stack.eps_m, eps_s, k0);
    out.L = propagation_length_um(out.k_spp);
    std::tie(out.delta_m, out.delta_s) =
        penetration_depths(stack.eps_m, eps_s, k0);
    out.G = gain_power(eps_s, k0);
    return out;
}

ThinFilmModes analyze_thin_film(const QwConfig& cfg, const OpticalStack& stack,
                                FilmMethod method) {
    stack.validate();
    const double k0 = stack.k0();
    const cplx eps_s = medium_response(cfg).eps_s;

    ThinFilmModes out;
    out.method = method;
    std::tie(out.k_lr, out.k_sr) =
        thin_film_modes_explicit(stack.eps_m, eps_s, k0, stack.q);
    if (method == FilmMethod::implicit_root) {
        out.k_lr = thin_film_mode_implicit(stack.eps_m, eps_s, k0, stack.q,
                                           out.k_lr, FilmMode::lr);
        out.k_sr = thin_film_mode_implicit(stack.eps_m, eps_s, k0, stack.q,
                                           out.k_sr, FilmMode::sr);
    }
    out.L_lr = propagation_length_um(out.k_lr);
    out.L_sr = propagation_length_um(out.k_sr);

    const double E_ref = operating_photon_energy(cfg, stack);
    out.vg_lr = group_velocity(FilmMode::lr, cfg, stack, E_ref);
    out.vg_sr = group_velocity(FilmMode::sr, cfg, stack, E_ref);
    // tau = L / vg, in fs (L converted um -> nm).
    out.tau_lr = out.L_lr * 1e3 / out.vg_lr;
    out.tau_sr = out.L_sr * 1e3 / out.vg_sr;
    return out;
}

} // namespace spp
