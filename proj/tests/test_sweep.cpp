#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "spp/figures.hpp"
#include "spp/spp_analysis.hpp"
#include "spp/sweep.hpp"

using namespace spp;

namespace {

const char* kMinimal =
    "[sweep]\n"
    "variable = omega_b\n"
    "start = 0\n"
    "stop = 4\n"
    "count = 5\n"
    "[outputs]\n"
    "quantities = eps_s\n";

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("complex literals") {
    CHECK(parse_complex("1.5") == cplx{1.5, 0.0});
    CHECK(parse_complex("-13.3+0.883i") == cplx{-13.3, 0.883});
    CHECK(parse_complex("2i") == cplx{0.0, 2.0});
    CHECK(parse_complex("-i") == cplx{0.0, -1.0});
    CHECK(parse_complex("1e-3-2.5e-1i") == cplx{1e-3, -0.25});
    CHECK_THROWS_AS(parse_complex("fish"), validation_error);
    for (cplx z : {cplx{0.3, -0.7}, cplx{-13.3, 0.883}, cplx{4.0, 0.0}})
        CHECK(parse_complex(format_complex(z)) == z);
}

TEST_CASE("empty sections give the published defaults") {
    const std::string text = std::string("[qw]\n[stack]\n") + kMinimal;
    const RunConfig cfg = parse_config(text);
    CHECK(cfg.qw.omega_c == 4.0);
    CHECK(cfg.qw.omega_p == 1.0);
    CHECK(cfg.qw.omega_s == 1.0);
    CHECK(cfg.qw.omega_b == 0.0);
    CHECK(cfg.qw.gamma_3l == 2.07);
    CHECK(cfg.qw.gamma_3d == 2.58);
    CHECK(cfg.qw.delta_c == 0.0);
    CHECK(cfg.qw.delta_b == 0.0);
    CHECK(cfg.qw.alpha == default_alpha);
    CHECK(cfg.stack.q == 50.0);
    CHECK(cfg.stack.lambda0 == 589.1);
    CHECK(cfg.stack.eps_m == cplx{-13.3, 0.883});
    CHECK(cfg.stack.n_t == 1.0);
    CHECK(cfg.theta_p == 77.0);
}

TEST_CASE("config rejections") {
    SUBCASE("degenerate grid") {
        const char* text =
            "[sweep]\nvariable = omega_b\nstart = 0\nstop = 4\ncount = 1\n"
            "[outputs]\nquantities = R\n";
        CHECK_THROWS_AS(parse_config(text), validation_error);
    }
    SUBCASE("unknown key") {
        const std::string text =
            std::string("[qw]\nomega_q = 1\n") + kMinimal;
        CHECK_THROWS_AS(parse_config(text), validation_error);
    }
    SUBCASE("unknown section") {
        const std::string text = std::string("[wq]\n") + kMinimal;
        CHECK_THROWS_AS(parse_config(text), validation_error);
    }
    SUBCASE("unknown quantity") {
        const char* text =
            "[sweep]\nvariable = omega_b\nstart = 0\nstop = 4\ncount = 5\n"
            "[outputs]\nquantities = reflectivity\n";
        CHECK_THROWS_AS(parse_config(text), validation_error);
    }
    SUBCASE("unknown sweep variable") {
        const char* text =
            "[sweep]\nvariable = humidity\nstart = 0\nstop = 4\ncount = 5\n"
            "[outputs]\nquantities = R\n";
        CHECK_THROWS_AS(parse_config(text), validation_error);
    }
    SUBCASE("missing sweep") {
        CHECK_THROWS_AS(parse_config("[outputs]\nquantities = R\n"),
                        validation_error);
    }
    SUBCASE("duplicate key") {
        const std::string text =
            std::string("[qw]\nomega_b = 1\nomega_b = 2\n") + kMinimal;
        CHECK_THROWS_AS(parse_config(text), parse_error);
    }
    SUBCASE("bad number with line info") {
        const std::string text =
            std::string("[qw]\nomega_b = soup\n") + kMinimal;
        try {
            parse_config(text);
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(e.line == 2);
        }
    }
    SUBCASE("same variable on both axes") {
        const char* text =
            "[sweep]\nvariable = q\nstart = 1\nstop = 50\ncount = 5\n"
            "[sweep2]\nvariable = q\nstart = 1\nstop = 50\ncount = 5\n"
            "[outputs]\nquantities = R\n";
        CHECK_THROWS_AS(parse_config(text), validation_error);
    }
}

TEST_CASE("serialize/parse round trip") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::uniform_int_distribution<int> counts(2, 400);
    std::uniform_int_distribution<int> nq(1, 4);
    const Quantity pool[] = {Quantity::chi,     Quantity::eps_s,
                             Quantity::R,       Quantity::T_el,
                             Quantity::G,       Quantity::L,
                             Quantity::delta_m, Quantity::k_lr,
                             Quantity::l_sr,    Quantity::tau_lr};
    for (int i = 0; i < 50; ++i) {
        RunConfig cfg;
        cfg.qw.omega_b = std::abs(u(rng));
        cfg.qw.delta_p = u(rng);
        cfg.qw.alpha = 0.1 + std::abs(u(rng));
        cfg.stack.eps_m = cplx{-15.0 + u(rng), std::abs(u(rng))};
        cfg.stack.q = 10.0 + u(rng);
        cfg.theta_p = 20.0 * u(rng);
        cfg.axes.push_back(
            {SweepVar::omega_b, 0.0, 2.0 + std::abs(u(rng)), counts(rng)});
        if (i % 2)
            cfg.axes.push_back(
                {SweepVar::theta_p, -80.0, 80.0, counts(rng)});
        const int n = nq(rng);
        for (int k = 0; k < n; ++k)
            cfg.outputs.push_back(pool[(i + k * 3) % 10]);
        cfg.out_path = (i % 3) ? "" : "x.csv";
        cfg.plot = i % 2;

        const std::string text = serialize_config(cfg);
        const RunConfig back = parse_config(text);
        CHECK(serialize_config(back) == text);
        CHECK(back.qw.alpha == cfg.qw.alpha);
        CHECK(back.stack.eps_m == cfg.stack.eps_m);
        CHECK(back.axes.size() == cfg.axes.size());
        CHECK(back.outputs == cfg.outputs);
    }
}

TEST_CASE("vg/tau aliases expand to both film modes") {
    const char* text =
        "[sweep]\nvariable = q\nstart = 5\nstop = 40\ncount = 4\n"
        "[outputs]\nquantities = vg, tau\n";
    const RunConfig cfg = parse_config(text);
    REQUIRE(cfg.outputs.size() == 4);
    CHECK(cfg.outputs[0] == Quantity::vg_lr);
    CHECK(cfg.outputs[1] == Quantity::vg_sr);
    CHECK(cfg.outputs[2] == Quantity::tau_lr);
    CHECK(cfg.outputs[3] == Quantity::tau_sr);
}

TEST_CASE("smoke grid reproduces direct calls bit-identically") {
    RunConfig cfg;
    cfg.qw.omega_b = 2.0;
    cfg.axes.push_back({SweepVar::delta_p, -2.0, -1.0, 2});
    cfg.outputs = {Quantity::eps_s, Quantity::R, Quantity::L};

    const SweepResult res = run_sweep_serial(cfg);
    REQUIRE(res.rows == 2);
    REQUIRE(res.columns.size() == 5);

    for (int i = 0; i < 2; ++i) {
        QwConfig qw = cfg.qw;
        qw.delta_p = cfg.axes[0].value_at(i);
        const MediumResponse med = medium_response(qw);
        const StackResponse stack =
            stack_coefficients(cfg.stack, med.eps_s, cfg.theta_p);
        const double L = propagation_length_um(k_spp_single_interface(
            cfg.stack.eps_m, med.eps_s, cfg.stack.k0()));
        const double* row = &res.cells[i * 5];
        CHECK(row[1] == med.eps_s.real());
        CHECK(row[2] == med.eps_s.imag());
        CHECK(row[3] == stack.R);
        CHECK(row[4] == L);
    }
}

TEST_CASE("determinism: serial, parallel, and repeat runs agree byte for byte") {
    RunConfig cfg;
    cfg.qw.delta_p = -1.73;
    cfg.axes.push_back({SweepVar::omega_b, 0.0, 4.0, 41});
    cfg.axes.push_back({SweepVar::theta_p, -90.0, 90.0, 19});
    cfg.outputs = {Quantity::R, Quantity::T_el, Quantity::G, Quantity::chi};

    const std::string serial = to_csv(run_sweep_serial(cfg));
    const std::string p1 = to_csv(run_sweep(cfg, 1));
    const std::string p2 = to_csv(run_sweep(cfg, 2));
    const std::string p3 = to_csv(run_sweep(cfg, 3));
    const std::string again = to_csv(run_sweep(cfg, 3));
    CHECK(serial == p1);
    CHECK(serial == p2);
    CHECK(serial == p3);
    CHECK(serial == again);
}

TEST_CASE("pole points become nan cells plus warnings, never aborts") {
    RunConfig cfg;
    // Everything undriven and decay-free: chi has a pole at delta_p = 0.
    cfg.qw.omega_c = cfg.qw.omega_b = cfg.qw.omega_s = 0.0;
    cfg.qw.gamma_3l = cfg.qw.gamma_4l = 0.0;
    cfg.qw.gamma_3d = cfg.qw.gamma_4d = 0.0;
    cfg.axes.push_back({SweepVar::delta_p, -1.0, 1.0, 3}); // hits 0 exactly
    cfg.outputs = {Quantity::eps_s};

    const SweepResult res = run_sweep_serial(cfg);
    REQUIRE(res.rows == 3);
    CHECK(!res.warnings.empty());
    CHECK(std::isnan(res.cells[1 * 3 + 1]));
    CHECK(std::isnan(res.cells[1 * 3 + 2]));
    CHECK(!std::isnan(res.cells[0 * 3 + 1]));
    CHECK(!std::isnan(res.cells[2 * 3 + 1]));
    CHECK(res.warnings[0].find("row 1") != std::string::npos);

    const std::string csv = to_csv(res);
    CHECK(csv.find("nan") != std::string::npos);
}

TEST_CASE("csv schema and literals") {
    RunConfig cfg;
    // Lossless metal against the gain window: Im[k_spp] < 0, so L = inf.
    cfg.stack.eps_m = cplx{-13.3, 0.0};
    cfg.axes.push_back({SweepVar::omega_b, 2.5, 2.6, 2});
    cfg.outputs = {Quantity::eps_s, Quantity::L};

    const SweepResult res = run_sweep_serial(cfg);
    const std::string csv = to_csv(res);
    CHECK(csv.rfind("omega_b,eps_s.re,eps_s.im,L\n", 0) == 0);
    CHECK(csv.find("inf") != std::string::npos);
    CHECK(csv.find("\r") == std::string::npos);

    // 17 significant digits survive a round trip through the text form.
    std::istringstream lines(csv);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    const auto comma = first.find(',');
    const double back = std::strtod(first.substr(comma + 1).c_str(), nullptr);
    CHECK(back == res.cells[1]);
}

TEST_CASE("figure panels") {
    SUBCASE("every id is defined with its published axes") {
        CHECK(figure_ids().size() == 22);
        const RunConfig f2a = figure_config("2a");
        CHECK(f2a.axes.size() == 1);
        CHECK(f2a.axes[0].var == SweepVar::delta_p);
        CHECK(f2a.qw.omega_b == 0.0);
        CHECK(f2a.outputs == std::vector<Quantity>{Quantity::eps_s});

        const RunConfig f4b = figure_config("4b");
        REQUIRE(f4b.axes.size() == 2);
        CHECK(f4b.axes[1].var == SweepVar::theta_p);
        CHECK(f4b.qw.delta_p == -1.73);

        const RunConfig f8c = figure_config("8c");
        CHECK(f8c.axes[0].var == SweepVar::q);
        CHECK(f8c.qw.omega_b == 2.0);
        CHECK(f8c.outputs == std::vector<Quantity>{Quantity::l_lr});

        CHECK_THROWS_AS(figure_config("11z"), unknown_figure_id);
    }

    SUBCASE("panel 2a shows perfect transparency at two-photon resonance") {
        const SweepResult res = run_sweep_serial(figure_config("2a"));
        const std::size_t cols = res.columns.size();
        double im_at0 = 1e300, im_at2 = 0.0;
        for (std::size_t r = 0; r < res.rows; ++r) {
            const double dp = res.cells[r * cols];
            if (dp == 0.0) im_at0 = res.cells[r * cols + 2];
            if (std::abs(dp - 2.0) < 1e-9) im_at2 = res.cells[r * cols + 2];
        }
        CHECK(im_at0 == 0.0); // chi vanishes exactly at delta_p = delta_c
        CHECK(im_at2 > 0.01);
    }

    SUBCASE("panel 5b lands on the published propagation lengths") {
        const RunConfig cfg = figure_config("5b");
        const SweepResult res = run_sweep_serial(cfg);
        const std::size_t cols = res.columns.size();
        double at2 = 0.0, at25 = 0.0;
        for (std::size_t r = 0; r < res.rows; ++r) {
            const double ob = res.cells[r * cols];
            if (std::abs(ob - 2.0) < 1e-9) at2 = res.cells[r * cols + 1];
            if (std::abs(ob - 2.5) < 1e-9) at25 = res.cells[r * cols + 1];
        }
        CHECK(at2 == doctest::Approx(19.204489).epsilon(1e-6));
        CHECK(at25 == doctest::Approx(64.626874).epsilon(1e-6));
    }

    SUBCASE("writing a panel produces the CSV on disk") {
        const auto dir =
            std::filesystem::temp_directory_path() / "spp_fig_test";
        std::filesystem::remove_all(dir);
        const std::string path = reproduce_figure("2b", dir.string(), 0, true);
        const std::string csv = slurp(path);
        CHECK(csv.rfind("omega_b,eps_s.re,eps_s.im\n", 0) == 0);
        CHECK(std::filesystem::exists(dir / "fig_2b.svg"));

        // Transparency recovered twice: the Im trace crosses zero at the
        // two pump strengths where absorption vanishes.
        std::istringstream lines(csv);
        std::string line;
        std::getline(lines, line);
        int sign_changes = 0;
        double prev = 0.0;
        bool first = true;
        while (std::getline(lines, line)) {
            const auto c2 = line.rfind(',');
            const double im = std::strtod(line.substr(c2 + 1).c_str(), nullptr);
            if (!first && im * prev < 0.0) ++sign_changes;
            prev = im;
            first = false;
        }
        CHECK(sign_changes == 2);
        std::filesystem::remove_all(dir);
    }
}
