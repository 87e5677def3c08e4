#ifndef SPP_ERRORS_HPP
#define SPP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spp {

// Numerical failures map to CLI exit code 2, configuration problems to 1,
// filesystem problems to 3.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct denominator_underflow : numeric_error {
    using numeric_error::numeric_error;
};
struct singular_system : numeric_error {
    using numeric_error::numeric_error;
};
struct local_field_pole : numeric_error {
    using numeric_error::numeric_error;
};
struct divide_by_zero : numeric_error {
    using numeric_error::numeric_error;
};
struct surface_mode_pole : numeric_error {
    using numeric_error::numeric_error;
};
struct fabry_perot_pole : numeric_error {
    using numeric_error::numeric_error;
};
struct surface_plasmon_pole : numeric_error {
    using numeric_error::numeric_error;
};
struct thickness_zero : numeric_error {
    using numeric_error::numeric_error;
};
struct step_too_large : numeric_error {
    using numeric_error::numeric_error;
};

// Root finder could not locate a sign change; carries the sampled residual
// curve so callers can inspect what was scanned.
struct no_bracket : numeric_error {
    no_bracket(const std::string& msg, std::string residual_table)
        : numeric_error(msg), residuals(std::move(residual_table)) {}
    std::string residuals;
};

struct no_convergence : numeric_error {
    no_convergence(const std::string& msg, double last_residual)
        : numeric_error(msg), residual(last_residual) {}
    double residual;
};

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : config_error {
    parse_error(const std::string& msg, int line_no)
        : config_error(msg + " (line " + std::to_string(line_no) + ")"),
          line(line_no) {}
    int line;
};

struct validation_error : config_error {
    using config_error::config_error;
};

struct unknown_figure_id : config_error {
    using config_error::config_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace spp

#endif
