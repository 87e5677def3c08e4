#ifndef SPP_QUANTUM_MEDIUM_HPP
#define SPP_QUANTUM_MEDIUM_HPP

#include <tuple>

#include "spp/constants.hpp"
#include "spp/errors.hpp"
#include "spp/multilayer.hpp"

namespace spp {

// Density-dipole prefactor N*|mu13|^2/(eps0*hbar) in meV, fixed by requiring
// Re[k_spp] = k0*n_t*sin(77 deg) at the four-wave-mixing operating point
// (delta_p = -1.73 meV, omega_b = 2 meV) with the default stack.
// Regenerate with:  spp calibrate
inline constexpr double default_alpha = 0.99939186400585689;

// Drive and decay parameters of the four-level asymmetric double quantum
// well. All quantities in meV. Defaults are the published operating set.
struct QwConfig {
    double omega_p = 1.0;   // probe Rabi frequency, |1> -> |3>
    double omega_c = 4.0;   // control Rabi frequency, |2> -> |3>
    double omega_b = 0.0;   // pump Rabi frequency, |2> -> |4>
    double omega_s = 1.0;   // generated FWM field, |1> -> |4> (fixed input)
    double delta_p = -1.73; // probe detuning
    double delta_c = 0.0;   // control detuning
    double delta_b = 0.0;   // pump detuning
    double gamma_2 = 0.0;   // total decay of |2>
    double gamma_3l = 2.07; // LO-phonon decay of |3>
    double gamma_4l = 2.07; // LO-phonon decay of |4>
    double gamma_3d = 2.58; // dephasing of |3>
    double gamma_4d = 2.58; // dephasing of |4>
    double alpha = default_alpha; // susceptibility prefactor
    double pole_eps = 1e-12;      // underflow threshold for pole detection

    double gamma_3() const { return gamma_3l + gamma_3d; }
    double gamma_4() const { return gamma_4l + gamma_4d; }
    // Tunneling-induced cross coupling of the bonding/anti-bonding states.
    double kappa() const;

    // Throws validation_error on negative rates or omega_p <= 0.
    void validate() const;
};

struct MediumResponse {
    cplx chi;   // dimensionless susceptibility
    cplx eps_s; // dimensionless permittivity, local-field corrected
};

// d2 = (dp-dc) + i*g2, d3 = dp + i*g3, d4 = (dp-dc+db) + i*g4.
std::tuple<cplx, cplx, cplx> complex_denominators(const QwConfig& cfg);

// Closed-form steady-state susceptibility of the driven four-level well.
// Throws denominator_underflow when the parameter point sits on a pole.
cplx susceptibility(const QwConfig& cfg);

// Independent route: solves the 3x3 steady-state amplitude system with the
// ground state undepleted (A1 = 1) and returns alpha/omega_p * A3.
// Throws singular_system if the linear system is numerically singular.
cplx susceptibility_oracle(const QwConfig& cfg);

// eps_s = 1 + chi/(1 - chi/3). Throws local_field_pole near chi = 3.
cplx permittivity(cplx chi, double pole_eps = 1e-12);

MediumResponse medium_response(const QwConfig& cfg);

// Optical gain power G = -k0*Im[eps_s]/Re[eps_s] in nm^-1; positive under
// net gain. Throws divide_by_zero when Re[eps_s] = 0.
double gain_power(cplx eps_s, double k0);

// Finds alpha such that Re[k_spp(eps_s(alpha))] = k0*n_t*sin(target_theta)
// at delta_p = target_delta_p, scanning alpha in [1e-3, 1e2] meV and
// refining until |residual| < tol_rel * k0. The cfg's omega_b selects the
// operating point the resonance is imposed at.
// Throws no_bracket (with the sampled residual curve) if no sign change.
double calibrate_prefactor(const QwConfig& cfg_without_alpha,
                           const OpticalStack& stack, double target_delta_p,
                           double target_theta_deg, double tol_rel = 1e-12);

} // namespace spp

#endif
