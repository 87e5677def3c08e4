#include "spp/quantum_medium.hpp"

#include <array>
#include <cmath>
#include <complex>

#include "spp/root_finding.hpp"
#include "spp/spp_analysis.hpp"

namespace spp {

double QwConfig::kappa() const { return std::sqrt(gamma_3l * gamma_4l); }

void QwConfig::validate() const {
    if (omega_p <= 0.0)
        throw validation_error("qw: omega_p must be > 0 (chi divides by it)");
    if (omega_c < 0.0 || omega_b < 0.0 || omega_s < 0.0)
        throw validation_error("qw: Rabi frequencies must be >= 0");
    if (gamma_2 < 0.0 || gamma_3l < 0.0 || gamma_4l < 0.0 || gamma_3d < 0.0 ||
        gamma_4d < 0.0)
        throw validation_error("qw: decay rates must be >= 0");
    if (pole_eps <= 0.0)
        throw validation_error("qw: pole_eps must be > 0");
}

std::tuple<cplx, cplx, cplx> complex_denominators(const QwConfig& cfg) {
    const cplx d2{cfg.delta_p - cfg.delta_c, cfg.gamma_2};
    const cplx d3{cfg.delta_p, cfg.gamma_3()};
    const cplx d4{cfg.delta_p - cfg.delta_c + cfg.delta_b, cfg.gamma_4()};
    return {d2, d3, d4};
}

cplx susceptibility(const QwConfig& cfg) {
    cfg.validate();
    const auto [d2, d3, d4] = complex_denominators(cfg);
    const double kap = cfg.kappa();
    const cplx ik{0.0, kap};

    // All Rabi frequencies are real, so conjugates drop out.
    const cplx num = (cfg.omega_b * cfg.omega_b - d2 * d4) * cfg.omega_p -
                     (cfg.omega_c * cfg.omega_b + d2 * ik) * cfg.omega_s;
    const cplx den = -ik * (2.0 * cfg.omega_c * cfg.omega_b) -
                     (d4 * cfg.omega_c * cfg.omega_c +
                      d3 * cfg.omega_b * cfg.omega_b) +
                     d2 * (d3 * d4 + kap * kap);
    if (std::abs(den) < cfg.pole_eps)
        throw denominator_underflow(
            "susceptibility denominator underflow (parameter point on a pole)");
    return cfg.alpha * (num / den / cfg.omega_p);
}

cplx susceptibility_oracle(const QwConfig& cfg) {
    cfg.validate();
    const auto [d2, d3, d4] = complex_denominators(cfg);
    const cplx mik{0.0, -cfg.kappa()};

    // Steady state of the amplitude equations with A1 = 1 and delta_k = 0:
    //   d2 A2 + Oc A3 + Ob A4 = 0
    //   Oc A2 + d3 A3 - ik A4 = -Op
    //   Ob A2 - ik A3 + d4 A4 = -Os
    std::array<std::array<cplx, 4>, 3> m = {{
        {d2, cfg.omega_c, cfg.omega_b, 0.0},
        {cfg.omega_c, d3, mik, -cfg.omega_p},
        {cfg.omega_b, mik, d4, -cfg.omega_s},
    }};

    double max_entry = 0.0;
    for (const auto& row : m)
        for (int j = 0; j < 3; ++j)
            max_entry = std::max(max_entry, std::abs(row[j]));

    // Gaussian elimination with partial pivoting.
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (std::abs(m[piv][col]) < 1e-14 * std::max(max_entry, 1e-300))
            throw singular_system("steady-state amplitude system is singular");
        std::swap(m[col], m[piv]);
        for (int r = col + 1; r < 3; ++r) {
            const cplx factor = m[r][col] / m[col][col];
            for (int j = col; j < 4; ++j) m[r][j] -= factor * m[col][j];
        }
    }
    std::array<cplx, 3> a;
    for (int r = 2; r >= 0; --r) {
        cplx acc = m[r][3];
        for (int j = r + 1; j < 3; ++j) acc -= m[r][j] * a[j];
        a[r] = acc / m[r][r];
    }

    const cplx a3 = a[1];
    return cfg.alpha * a3 / cfg.omega_p;
}

cplx permittivity(cplx chi, double pole_eps) {
    const cplx w = 1.0 - chi / 3.0;
    if (std::abs(w) < pole_eps)
        throw local_field_pole("local-field correction pole (chi near 3)");
    return 1.0 + chi / w;
}

MediumResponse medium_response(const QwConfig& cfg) {
    const cplx chi = susceptibility(cfg);
    return {chi, permittivity(chi, cfg.pole_eps)};
}

double gain_power(cplx eps_s, double k0) {
    if (eps_s.real() == 0.0)
        throw divide_by_zero("gain power undefined at Re[eps_s] = 0");
    return -k0 * eps_s.imag() / eps_s.real();
}

double calibrate_prefactor(const QwConfig& cfg_without_alpha,
                           const OpticalStack& stack, double target_delta_p,
                           double target_theta_deg, double tol_rel) {
    QwConfig cfg = cfg_without_alpha;
    cfg.delta_p = target_delta_p;
    stack.validate();
    const double k0 = stack.k0();
    const double k_z = in_plane_wavevector(stack, target_theta_deg);

    auto residual = [&](double alpha) {
        cfg.alpha = alpha;
        const cplx eps_s = medium_response(cfg).eps_s;
        return k_spp_single_interface(stack.eps_m, eps_s, k0).real() - k_z;
    };
    return bracketed_root(residual, 1e-3, 1e2, tol_rel * k0, 400,
                          /*log_spacing=*/true);
}

} // namespace spp
