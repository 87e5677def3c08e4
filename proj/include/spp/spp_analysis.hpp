#ifndef SPP_SPP_ANALYSIS_HPP
#define SPP_SPP_ANALYSIS_HPP

#include <utility>

#include "spp/constants.hpp"
#include "spp/errors.hpp"
#include "spp/multilayer.hpp"
#include "spp/quantum_medium.hpp"

namespace spp {

enum class FilmMode { lr, sr };
enum class FilmMethod { explicit_small_q, implicit_root };
enum class ResonanceVar { delta_p, theta_p };

// Single-interface SPP character at one operating point.
struct SppCharacter {
    cplx k_spp;     // nm^-1
    double L;       // propagation length, um (inf under net gain)
    double delta_m; // penetration depth into the metal, nm
    double delta_s; // penetration depth into the quantum well, nm
    double G;       // gain power, nm^-1
};

// Coupled film modes of the thin-metal structure.
struct ThinFilmModes {
    cplx k_lr, k_sr;       // nm^-1
    double L_lr, L_sr;     // um
    double vg_lr, vg_sr;   // nm/fs
    double tau_lr, tau_sr; // fs
    FilmMethod method;
};

// k_spp = k0 sqrt(eps_m eps_s / (eps_m + eps_s)), branch Re >= 0.
// Throws surface_plasmon_pole when eps_m + eps_s underflows.
cplx k_spp_single_interface(cplx eps_m, cplx eps_s, double k0,
                            double pole_eps = 1e-12);

// Solves Re[k_spp] = k0 n_t sin(theta_p) for delta_p (theta fixed) or for
// theta_p (cfg.delta_p fixed) by bracketing bisection with secant polish;
// final residual < tol_rel * k0.
double find_resonance(const QwConfig& cfg, const OpticalStack& stack,
                      double theta_p_deg, ResonanceVar var, double lo,
                      double hi, double tol_rel = 1e-10);

// L = 1/(2 Im[k]) converted nm -> um; +inf sentinel when Im[k] <= 0.
double propagation_length_um(cplx k);

// delta_j = (1/k0) sqrt(|eps_s + eps_m| / |eps_j|), j in {m, s}.
// Returns {delta_m, delta_s} in nm.
std::pair<double, double> penetration_depths(cplx eps_m, cplx eps_s,
                                             double k0);

// Small-thickness closed forms of the coupled film modes.
// k_SR diverges as 1/q; q = 0 throws thickness_zero.
cplx thin_film_mode_explicit(cplx eps_m, cplx eps_s, double k0, double q,
                             FilmMode mode);
std::pair<cplx, cplx> thin_film_modes_explicit(cplx eps_m, cplx eps_s,
                                               double k0, double q);

// Residual of the tanh (LR) / coth (SR) film dispersion relation, written
// with decay constants sqrt(k^2 - eps k0^2) on the Re >= 0 branch.
cplx film_dispersion_residual(cplx k, cplx eps_m, cplx eps_s, double k0,
                              double q, FilmMode mode);

// Refines the film-mode wavevector by damped complex Newton, seeded from
// the explicit form. Throws no_convergence with the last residual.
cplx thin_film_mode_implicit(cplx eps_m, cplx eps_s, double k0, double q,
                             cplx seed, FilmMode mode, double tol_f = 1e-10,
                             int max_iter = 100);

// Probe photon energy at the configured detuning: E31 + delta_p, with
// E31 = hc / lambda0.
double operating_photon_energy(const QwConfig& cfg, const OpticalStack& stack);

// vg = [d Re[k_mode] / d omega]^-1 in nm/fs by central differences in the
// probe photon energy; the energy enters through both k0 and delta_p.
// Throws step_too_large when halving dE moves the slope by more than 1%.
double group_velocity(FilmMode mode, const QwConfig& cfg,
                      const OpticalStack& stack, double photon_energy_ref,
                      double dE = 0.01);

// Threshold thickness where Re[k_mode(q)] crosses k0 n_t on q in [1, 50] nm
// (explicit forms). Throws no_bracket when the coupler-free condition holds
// (or fails) over the whole range.
double coupler_free_thickness(const QwConfig& cfg, const OpticalStack& stack,
                              FilmMode mode);

SppCharacter analyze_spp(const QwConfig& cfg, const OpticalStack& stack);

// Full thin-film summary; group velocities always differentiate the
// explicit forms, wavevectors follow the requested method.
ThinFilmModes analyze_thin_film(const QwConfig& cfg, const OpticalStack& stack,
                                FilmMethod method = FilmMethod::explicit_small_q);

} // namespace spp

#endif
