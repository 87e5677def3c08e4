#include "spp/root_finding.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace spp {

namespace {

std::string residual_table(const std::vector<double>& xs,
                           const std::vector<double>& fs) {
    std::string out = "x,residual\n";
    char buf[80];
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.9g,%.9g\n", xs[i], fs[i]);
        out += buf;
    }
    return out;
}

} // namespace

double bracketed_root(const std::function<double(double)>& f, double lo,
                      double hi, double tol_f, int scan_points,
                      bool log_spacing, int max_iter) {
    std::vector<double> xs(scan_points), fs(scan_points);
    for (int i = 0; i < scan_points; ++i) {
        const double t = static_cast<double>(i) / (scan_points - 1);
        xs[i] = log_spacing ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
        fs[i] = f(xs[i]);
    }

    double a = 0.0, b = 0.0, fa = 0.0, fb = 0.0;
    bool found = false;
    for (int i = 0; i + 1 < scan_points; ++i) {
        if (fs[i] == 0.0) return xs[i];
        if (std::signbit(fs[i]) != std::signbit(fs[i + 1])) {
            a = xs[i];
            b = xs[i + 1];
            fa = fs[i];
            fb = fs[i + 1];
            found = true;
            break;
        }
    }
    if (!found)
        throw no_bracket("no sign change of the residual over the scan range",
                         residual_table(xs, fs));

    // Bisection until the interval is tight, then secant steps for the last
    // digits; fall back to the midpoint whenever secant leaves [a, b].
    double x = 0.5 * (a + b), fx = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        double xs_next = b - fb * (b - a) / (fb - fa);
        if (!(xs_next > std::min(a, b) && xs_next < std::max(a, b)))
            xs_next = 0.5 * (a + b);
        x = xs_next;
        fx = f(x);
        if (std::abs(fx) < tol_f || a == b) return x;
        if (std::signbit(fa) != std::signbit(fx)) {
            b = x;
            fb = fx;
        } else {
            a = x;
            fa = fx;
        }
    }
    return x;
}

cplx newton_complex(const std::function<cplx(cplx)>& F, cplx seed,
                    double tol_f, int max_iter) {
    cplx k = seed;
    for (int it = 0; it < max_iter; ++it) {
        const cplx Fk = F(k);
        const double res = std::abs(Fk);
        if (res < tol_f) return k;

        const double h = 1e-7 * std::max(std::abs(k), 1e-12);
        const cplx dF = (F(k + h) - F(k - h)) / (2.0 * h);
        if (std::abs(dF) == 0.0)
            throw no_convergence("Newton derivative vanished", res);
        const cplx step = Fk / dF;

        // Halve the step until the residual actually drops.
        double lambda = 1.0;
        cplx k_next = k - step;
        while (lambda > 1e-6 && std::abs(F(k_next)) >= res) {
            lambda *= 0.5;
            k_next = k - lambda * step;
        }
        k = k_next;
    }
    if (std::abs(F(k)) < tol_f) return k;
    throw no_convergence("complex Newton did not converge", std::abs(F(k)));
}

} // namespace spp
