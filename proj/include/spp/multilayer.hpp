#ifndef SPP_MULTILAYER_HPP
#define SPP_MULTILAYER_HPP

#include "spp/constants.hpp"
#include "spp/errors.hpp"

namespace spp {

// Air/metal/quantum-well stack geometry. The bottom permittivity eps_s is
// not stored here; it comes from the quantum medium at each operating point.
struct OpticalStack {
    cplx eps_t = 1.0;               // top layer permittivity
    cplx eps_m = cplx{-13.3, 0.883}; // metal film permittivity
    double q = 50.0;                // film thickness, nm
    double lambda0 = 589.1;         // vacuum wavelength, nm
    double n_t = 1.0;               // top layer refractive index

    double k0() const { return 2.0 * pi / lambda0; }

    void validate() const;
};

struct StackResponse {
    cplx r;       // stack reflection coefficient
    cplx t;       // stack transmission coefficient
    double R;     // reflectivity |r|^2
    double T_el;  // electric-field enhancement |eps_t/eps_s| * |t|^2
};

// k_z = k0 * n_t * sin(theta_p); theta_p in degrees, |theta_p| <= 90.
double in_plane_wavevector(const OpticalStack& stack, double theta_p_deg);

// k_jx = sqrt(k0^2 eps_j - k_z^2) on the branch Im >= 0 (Re >= 0 tie-break),
// so evanescent tails decay away from the interface.
cplx normal_wavevector(cplx eps_j, double k0, double k_z);

// TM Fresnel reflection r_ij = (e_j k_ix - e_i k_jx)/(e_j k_ix + e_i k_jx).
// A vanishing denominator is the single-interface surface-mode condition and
// is signalled as surface_mode_pole rather than returned as infinity.
cplx fresnel_r_tm(cplx eps_i, cplx eps_j, cplx k_ix, cplx k_jx,
                  double pole_eps = 1e-12);

// Three-layer reflection/transmission with the Fabry-Perot phase factor
// exp(2 i k_mx q), plus the TM field-enhancement factor.
StackResponse stack_coefficients(const OpticalStack& stack, cplx eps_s,
                                 double theta_p_deg);

} // namespace spp

#endif
