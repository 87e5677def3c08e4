#ifndef SPP_SWEEP_HPP
#define SPP_SWEEP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "spp/config.hpp"

namespace spp {

struct SweepResult {
    std::vector<std::string> columns; // sweep variables, then outputs
    std::size_t rows = 0;
    std::vector<double> cells; // row-major, rows * columns.size()
    // One entry per physics failure, in grid order; the offending cells
    // hold NaN.
    std::vector<std::string> warnings;
};

// Number of CSV columns a quantity expands to (2 for complex values).
int quantity_width(Quantity id);

// Serial reference engine. Kept as the ground truth the parallel kernel is
// compared against.
SweepResult run_sweep_serial(const RunConfig& cfg);

// OpenMP engine; grid points fan out across threads, rows land in
// deterministic grid order. Output is byte-identical to run_sweep_serial
// for every thread count. threads <= 0 leaves the OpenMP default.
SweepResult run_sweep(const RunConfig& cfg, int threads = 0);

// RFC-4180-style CSV: header row, \n endings, 17-significant-digit floats,
// inf/nan literals.
std::string to_csv(const SweepResult& result);

// Writes the CSV; a non-empty warning list lands next to it in
// "<path>.log". Throws io_error.
void write_csv_file(const SweepResult& result, const std::string& path);

} // namespace spp

#endif
