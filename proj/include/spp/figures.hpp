#ifndef SPP_FIGURES_HPP
#define SPP_FIGURES_HPP

#include <string>
#include <vector>

#include "spp/config.hpp"
#include "spp/sweep.hpp"

namespace spp {

// Panel ids of the published figures: 2a 2b 3a-3d 4a 4b 5a 5b 6a 6b 7a 7b
// 8a-8d 9a-9d.
const std::vector<std::string>& figure_ids();

// The exact sweep behind one panel. Throws unknown_figure_id.
RunConfig figure_config(const std::string& id);

// Runs the panel sweep and writes "<out_dir>/fig_<id>.csv" (plus .svg when
// plot is set). fig7_residual switches panels 7a/7b from solved Im[k]/k0 to
// the dispersion-relation residual evaluated at the explicit-form k.
// Returns the CSV path.
std::string reproduce_figure(const std::string& id, const std::string& out_dir,
                             int threads = 0, bool plot = false,
                             bool fig7_residual = false,
                             std::vector<std::string>* warnings = nullptr);

} // namespace spp

#endif
