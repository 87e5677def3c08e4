#ifndef SPP_SVG_PLOT_HPP
#define SPP_SVG_PLOT_HPP

#include <string>

#include "spp/config.hpp"
#include "spp/sweep.hpp"

namespace spp {

// Convenience rendering of a sweep result: polylines for 1D sweeps, a
// grayscale heatmap of the first output for 2D grids. Carries no acceptance
// weight; the CSVs are the data of record.
std::string render_svg(const SweepResult& result, const RunConfig& cfg);

void write_svg_file(const SweepResult& result, const RunConfig& cfg,
                    const std::string& path);

} // namespace spp

#endif
