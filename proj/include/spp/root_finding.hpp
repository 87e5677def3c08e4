#ifndef SPP_ROOT_FINDING_HPP
#define SPP_ROOT_FINDING_HPP

#include <functional>

#include "spp/constants.hpp"
#include "spp/errors.hpp"

namespace spp {

// Scans [lo, hi] (geometrically when log_spacing) for a sign change of f,
// then refines by bisection with a secant polish until |f| < tol_f.
// Throws no_bracket carrying the sampled residual table.
double bracketed_root(const std::function<double(double)>& f, double lo,
                      double hi, double tol_f, int scan_points = 200,
                      bool log_spacing = false, int max_iter = 200);

// Damped Newton iteration on a complex map F with a central-difference
// derivative; stops when |F| < tol_f. Throws no_convergence with the last
// residual after max_iter iterations.
cplx newton_complex(const std::function<cplx(cplx)>& F, cplx seed,
                    double tol_f = 1e-10, int max_iter = 100);

} // namespace spp

#endif
