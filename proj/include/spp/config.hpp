#ifndef SPP_CONFIG_HPP
#define SPP_CONFIG_HPP

#include <string>
#include <vector>

#include "spp/multilayer.hpp"
#include "spp/quantum_medium.hpp"

namespace spp {

enum class SweepVar { delta_p, omega_b, theta_p, q };

struct SweepAxis {
    SweepVar var;
    double start;
    double stop;
    int count;

    double value_at(int i) const {
        return start + (stop - start) * static_cast<double>(i) /
                           static_cast<double>(count - 1);
    }
};

// Requestable per-point quantities. Complex ones serialize as .re/.im column
// pairs; `vg` and `tau` in config files expand to the _lr/_sr pair.
enum class Quantity {
    chi,
    eps_s,
    R,
    T_el,
    G,
    L,
    delta_m,
    delta_s,
    k_lr,
    k_sr,
    k_lr_root,
    k_sr_root,
    l_lr,
    l_sr,
    vg_lr,
    vg_sr,
    tau_lr,
    tau_sr,
    im_k_lr_over_k0,
    im_k_sr_over_k0,
};

const char* quantity_name(Quantity id);
const char* sweep_var_name(SweepVar var);

struct RunConfig {
    QwConfig qw;
    OpticalStack stack;
    double theta_p = 77.0; // probe incidence angle, degrees
    std::vector<SweepAxis> axes; // outer first; one or two
    std::vector<Quantity> outputs;
    std::string out_path; // empty = stdout / caller decides
    bool plot = false;

    void validate() const;
};

// Parses the sectioned key=value format ([qw], [stack], [sweep], [sweep2],
// [outputs]); omitted keys take the published defaults. Unknown keys and
// sections are rejected. Throws parse_error / validation_error.
RunConfig parse_config(const std::string& text);

RunConfig parse_config_file(const std::string& path);

// Canonical text form; parse_config(serialize_config(c)) reproduces c.
std::string serialize_config(const RunConfig& cfg);

cplx parse_complex(const std::string& text); // "a", "bi" or "a+bi"
std::string format_complex(cplx z);
std::string format_double(double v); // 17 significant digits, inf/nan literals

} // namespace spp

#endif
