#include "spp/multilayer.hpp"

#include <cmath>
#include <complex>

namespace spp {

void OpticalStack::validate() const {
    if (q < 0.0) throw validation_error("stack: film thickness q must be >= 0");
    if (lambda0 <= 0.0) throw validation_error("stack: lambda0 must be > 0");
    if (n_t <= 0.0) throw validation_error("stack: n_t must be > 0");
}

double in_plane_wavevector(const OpticalStack& stack, double theta_p_deg) {
    if (theta_p_deg < -90.0 || theta_p_deg > 90.0)
        throw validation_error("theta_p outside [-90, 90] degrees");
    return stack.k0() * stack.n_t * std::sin(deg_to_rad(theta_p_deg));
}

cplx normal_wavevector(cplx eps_j, double k0, double k_z) {
    cplx w = std::sqrt(k0 * k0 * eps_j - k_z * k_z);
    if (w.imag() < 0.0 || (w.imag() == 0.0 && w.real() < 0.0)) w = -w;
    return w;
}

cplx fresnel_r_tm(cplx eps_i, cplx eps_j, cplx k_ix, cplx k_jx,
                  double pole_eps) {
    const cplx a = eps_j * k_ix;
    const cplx b = eps_i * k_jx;
    const cplx den = a + b;
    const double scale = std::abs(a) + std::abs(b);
    if (std::abs(den) < pole_eps * std::max(scale, 1e-300))
        throw surface_mode_pole("TM Fresnel denominator underflow "
                                "(single-interface surface mode condition)");
    return (a - b) / den;
}

StackResponse stack_coefficients(const OpticalStack& stack, cplx eps_s,
                                 double theta_p_deg) {
    stack.validate();
    const double k0 = stack.k0();
    const double k_z = in_plane_wavevector(stack, theta_p_deg);

    const cplx k_tx = normal_wavevector(stack.eps_t, k0, k_z);
    const cplx k_mx = normal_wavevector(stack.eps_m, k0, k_z);
    const cplx k_sx = normal_wavevector(eps_s, k0, k_z);

    const cplx r_tm = fresnel_r_tm(stack.eps_t, stack.eps_m, k_tx, k_mx);
    const cplx r_ms = fresnel_r_tm(stack.eps_m, eps_s, k_mx, k_sx);

    const cplx phase = std::exp(cplx{0.0, 2.0} * k_mx * stack.q);
    const cplx den = 1.0 + r_tm * r_ms * phase;
    if (std::abs(den) < 1e-12)
        throw fabry_perot_pole("stack denominator underflow "
                               "(leaky-mode pole of the three-layer system)");

    StackResponse out;
    out.r = (r_tm + r_ms * phase) / den;
    // t_ij = 1 + r_ij for TM single interfaces.
    out.t = (1.0 + r_tm) * (1.0 + r_ms) *
            std::exp(cplx{0.0, 1.0} * k_mx * stack.q) / den;
    out.R = std::norm(out.r);
    out.T_el = std::abs(stack.eps_t / eps_s) * std::norm(out.t);
    return out;
}

} // namespace spp
