#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "spp/quantum_medium.hpp"
#include "spp/spp_analysis.hpp"

using namespace spp;

namespace {

// Draws with |closed-form denominator| above the cutoff, so both routes are
// well conditioned.
struct RandomQw {
    std::mt19937 rng{20240815};
    std::uniform_real_distribution<double> rabi{0.0, 5.0};
    std::uniform_real_distribution<double> probe{0.2, 5.0};
    std::uniform_real_distribution<double> det{-5.0, 5.0};
    std::uniform_real_distribution<double> gam{0.05, 3.0};

    QwConfig next() {
        for (;;) {
            QwConfig c;
            c.omega_p = probe(rng);
            c.omega_c = rabi(rng);
            c.omega_b = rabi(rng);
            c.omega_s = rabi(rng);
            c.delta_p = det(rng);
            c.delta_c = det(rng);
            c.delta_b = det(rng);
            c.gamma_2 = 0.5 * gam(rng);
            c.gamma_3l = gam(rng);
            c.gamma_4l = gam(rng);
            c.gamma_3d = gam(rng);
            c.gamma_4d = gam(rng);
            c.alpha = 0.1 + rabi(rng);
            const auto [d2, d3, d4] = complex_denominators(c);
            const double kap = c.kappa();
            const cplx den = -cplx{0.0, kap} * (2.0 * c.omega_c * c.omega_b) -
                             (d4 * c.omega_c * c.omega_c +
                              d3 * c.omega_b * c.omega_b) +
                             d2 * (d3 * d4 + kap * kap);
            if (std::abs(den) > 1e-6) return c;
        }
    }
};

} // namespace

TEST_CASE("complex denominators at the published decay rates") {
    QwConfig c;
    c.delta_p = c.delta_c = c.delta_b = 0.0;
    auto [d2, d3, d4] = complex_denominators(c);
    CHECK(d2 == cplx{0.0, 0.0});
    CHECK(d3.real() == 0.0);
    CHECK(d3.imag() == doctest::Approx(4.65).epsilon(1e-12));
    CHECK(d4.imag() == doctest::Approx(4.65).epsilon(1e-12));

    QwConfig zero;
    zero.delta_p = zero.delta_c = zero.delta_b = 0.0;
    zero.gamma_3l = zero.gamma_4l = zero.gamma_3d = zero.gamma_4d = 0.0;
    auto [z2, z3, z4] = complex_denominators(zero);
    CHECK(z2 == cplx{0.0, 0.0});
    CHECK(z3 == cplx{0.0, 0.0});
    CHECK(z4 == cplx{0.0, 0.0});

    QwConfig real_d2;
    real_d2.delta_p = -1.73;
    real_d2.delta_c = real_d2.delta_b = 0.0;
    auto [r2, r3, r4] = complex_denominators(real_d2);
    CHECK(r2 == cplx{-1.73, 0.0});
}

TEST_CASE("dark state: chi vanishes when the pump branch is off") {
    QwConfig c;
    c.omega_b = c.omega_s = 0.0;
    c.gamma_3l = 0.0; // kappa = 0
    c.delta_p = c.delta_c = 0.7;
    c.gamma_2 = 0.0;
    CHECK(std::abs(susceptibility(c)) == 0.0);
    CHECK(std::abs(susceptibility_oracle(c)) == 0.0);
}

TEST_CASE("operating point: medium nearly transparent at omega_b = 2") {
    QwConfig c;
    c.omega_b = 2.0;
    const cplx chi = susceptibility(c);
    // Frozen from an independent evaluation of the steady-state solve.
    CHECK(chi.real() == doctest::Approx(-0.118053567327379).epsilon(1e-9));
    CHECK(chi.imag() == doctest::Approx(0.000261099835330).epsilon(1e-6));
    CHECK(std::abs(chi.imag()) < 0.003 * std::abs(chi));
}

TEST_CASE("closed form equals the steady-state linear solve") {
    RandomQw gen;
    for (int i = 0; i < 200; ++i) {
        const QwConfig c = gen.next();
        const cplx a = susceptibility(c);
        const cplx b = susceptibility_oracle(c);
        REQUIRE(std::abs(a - b) <= 1e-9 * std::abs(b));
    }
}

TEST_CASE("decoupled probe transition reduces to a two-level Lorentzian") {
    QwConfig c;
    c.omega_c = c.omega_b = c.omega_s = 0.0;
    c.gamma_3l = 0.0; // kappa = 0
    c.gamma_3d = 0.75;
    c.delta_p = -1.0;
    c.alpha = 2.0;
    const cplx expected = -2.0 / cplx{-1.0, 0.75};
    const cplx got = susceptibility_oracle(c);
    CHECK(std::abs(got - expected) < 1e-14 * std::abs(expected));
    const cplx closed = susceptibility(c);
    CHECK(std::abs(closed - expected) < 1e-14 * std::abs(expected));
}

TEST_CASE("pole point raises on both routes") {
    QwConfig c;
    c.omega_c = c.omega_b = c.omega_s = 0.0;
    c.gamma_3l = 0.0;
    c.gamma_2 = 0.0;
    c.delta_p = c.delta_c = 0.0; // d2 = 0 and no drive: undetermined A2
    CHECK_THROWS_AS(susceptibility(c), denominator_underflow);
    CHECK_THROWS_AS(susceptibility_oracle(c), singular_system);
}

TEST_CASE("config validation") {
    QwConfig c;
    c.omega_p = 0.0;
    CHECK_THROWS_AS(susceptibility(c), validation_error);
    QwConfig d;
    d.gamma_3l = -0.1;
    CHECK_THROWS_AS(susceptibility(d), validation_error);
}

TEST_CASE("local-field corrected permittivity") {
    CHECK(permittivity(0.0) == cplx{1.0, 0.0});
    CHECK(std::abs(permittivity(1.5) - 4.0) < 1e-14);
    CHECK_THROWS_AS(permittivity(cplx{3.0, 0.0}), local_field_pole);

    // Im[eps_s] = Im[chi] / |1 - chi/3|^2, same sign as Im[chi].
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        const cplx chi{u(rng), u(rng)};
        if (std::abs(1.0 - chi / 3.0) < 1e-3) continue;
        const cplx eps = permittivity(chi);
        const double expected = chi.imag() / std::norm(1.0 - chi / 3.0);
        CHECK(eps.imag() == doctest::Approx(expected).epsilon(1e-12));
        if (chi.imag() != 0.0)
            CHECK(std::signbit(eps.imag()) == std::signbit(chi.imag()));
    }
}

TEST_CASE("gain power") {
    CHECK(gain_power(cplx{0.9, 0.0}, 0.0106661) == 0.0);
    const double g = gain_power(cplx{0.9, -0.009}, 0.010666);
    CHECK(g == doctest::Approx(1.0666e-4).epsilon(1e-12));
    CHECK_THROWS_AS(gain_power(cplx{0.0, 0.5}, 0.01), divide_by_zero);
}

TEST_CASE("chi is exactly linear in alpha") {
    RandomQw gen;
    for (int i = 0; i < 20; ++i) {
        QwConfig c = gen.next();
        const cplx chi1 = susceptibility(c);
        c.alpha *= 2.0;
        const cplx chi2 = susceptibility(c);
        CHECK(chi2 == 2.0 * chi1);
    }
}

TEST_CASE("chi is real when every decay channel is off") {
    QwConfig c;
    c.omega_b = 2.0;
    c.delta_p = -1.7;
    c.delta_c = 0.3;
    c.delta_b = 0.2;
    c.gamma_2 = c.gamma_3l = c.gamma_4l = c.gamma_3d = c.gamma_4d = 0.0;
    CHECK(susceptibility(c).imag() == 0.0);
}

TEST_CASE("prefactor calibration") {
    OpticalStack stack;
    QwConfig qw;

    SUBCASE("operating point reproduces the shipped default") {
        qw.omega_b = 2.0;
        const double alpha = calibrate_prefactor(qw, stack, -1.73, 77.0);
        CHECK(alpha == doctest::Approx(default_alpha).epsilon(1e-9));

        qw.alpha = alpha;
        qw.delta_p = -1.73;
        const cplx eps_s = medium_response(qw).eps_s;
        const double resid =
            k_spp_single_interface(stack.eps_m, eps_s, stack.k0()).real() -
            in_plane_wavevector(stack, 77.0);
        CHECK(std::abs(resid) < 1e-12 * stack.k0());
    }

    SUBCASE("lambda-configuration point") {
        qw.omega_b = 0.0;
        const double alpha = calibrate_prefactor(qw, stack, -1.73, 77.0);
        CHECK(alpha == doctest::Approx(0.823316223872224).epsilon(1e-9));
    }

    SUBCASE("residual is locally monotone around the root") {
        qw.omega_b = 2.0;
        const double alpha = calibrate_prefactor(qw, stack, -1.73, 77.0);
        qw.delta_p = -1.73;
        auto resid = [&](double a) {
            QwConfig c = qw;
            c.alpha = a;
            return k_spp_single_interface(stack.eps_m,
                                          medium_response(c).eps_s, stack.k0())
                       .real() -
                   in_plane_wavevector(stack, 77.0);
        };
        CHECK(resid(0.99 * alpha) > 0.0);
        CHECK(resid(1.01 * alpha) < 0.0);
    }

    SUBCASE("no bracket when EIT cannot move the permittivity") {
        // Dark-state drive: chi = 0 for every alpha, eps_s pinned at 1.
        qw.omega_b = qw.omega_s = 0.0;
        qw.gamma_3l = 0.0;
        qw.delta_c = -1.73; // d2 = 0 at the target detuning
        CHECK_THROWS_AS(calibrate_prefactor(qw, stack, -1.73, 77.0),
                        no_bracket);
    }

    SUBCASE("light-line target at 90 degrees is still reachable here") {
        qw.omega_b = 2.0;
        const double alpha = calibrate_prefactor(qw, stack, -1.73, 90.0);
        qw.alpha = alpha;
        qw.delta_p = -1.73;
        const double resid =
            k_spp_single_interface(stack.eps_m, medium_response(qw).eps_s,
                                   stack.k0())
                .real() -
            in_plane_wavevector(stack, 90.0);
        CHECK(std::abs(resid) < 1e-12 * stack.k0());
    }
}
