#include "spp/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "spp/errors.hpp"

namespace spp {

namespace {

constexpr int kW = 720, kH = 480, kMargin = 60;

struct Range {
    double lo = 0.0, hi = 1.0;
    void expand(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
};

Range finite_range(const SweepResult& res, std::size_t col) {
    Range r{std::numeric_limits<double>::max(),
            std::numeric_limits<double>::lowest()};
    const std::size_t cols = res.columns.size();
    for (std::size_t i = 0; i < res.rows; ++i) r.expand(res.cells[i * cols + col]);
    if (r.lo > r.hi) r = {0.0, 1.0};
    if (r.lo == r.hi) r.hi = r.lo + 1.0;
    return r;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void polyline(std::ostringstream& out, const SweepResult& res, std::size_t col,
              const Range& xr, const Range& yr, const char* color) {
    const std::size_t cols = res.columns.size();
    out << "<polyline fill='none' stroke='" << color
        << "' stroke-width='1.5' points='";
    bool pen_down = false;
    for (std::size_t i = 0; i < res.rows; ++i) {
        const double x = res.cells[i * cols];
        const double y = res.cells[i * cols + col];
        if (!std::isfinite(x) || !std::isfinite(y)) {
            pen_down = false;
            continue;
        }
        const double px =
            kMargin + (x - xr.lo) / (xr.hi - xr.lo) * (kW - 2 * kMargin);
        const double py =
            kH - kMargin - (y - yr.lo) / (yr.hi - yr.lo) * (kH - 2 * kMargin);
        if (!pen_down && i) out << ' ';
        out << num(px) << ',' << num(py) << ' ';
        pen_down = true;
    }
    out << "'/>\n";
}

std::string heatmap(const SweepResult& res, const RunConfig& cfg) {
    const std::size_t cols = res.columns.size();
    const int nx = cfg.axes[0].count, ny = cfg.axes[1].count;
    const std::size_t vcol = 2; // first output column
    Range vr = finite_range(res, vcol);

    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kW
        << "' height='" << kH << "'>\n";
    const double cw = static_cast<double>(kW - 2 * kMargin) / nx;
    const double ch = static_cast<double>(kH - 2 * kMargin) / ny;
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            const double v = res.cells[(static_cast<std::size_t>(i) * ny + j) *
                                           cols +
                                       vcol];
            int shade = 255;
            if (std::isfinite(v)) {
                const double t = (v - vr.lo) / (vr.hi - vr.lo);
                shade = static_cast<int>(255.0 * (1.0 - std::clamp(t, 0.0, 1.0)));
            }
            out << "<rect x='" << num(kMargin + i * cw) << "' y='"
                << num(kH - kMargin - (j + 1) * ch) << "' width='"
                << num(cw + 0.5) << "' height='" << num(ch + 0.5)
                << "' fill='rgb(" << shade << ',' << shade << ',' << shade
                << ")'/>\n";
        }
    }
    out << "<text x='" << kW / 2 << "' y='" << kH - 16
        << "' text-anchor='middle' font-size='13'>" << res.columns[0]
        << "</text>\n";
    out << "<text x='16' y='" << kH / 2
        << "' transform='rotate(-90 16 " << kH / 2
        << ")' text-anchor='middle' font-size='13'>" << res.columns[1]
        << "</text>\n";
    out << "<text x='" << kW / 2 << "' y='20' text-anchor='middle' "
        << "font-size='13'>" << res.columns[vcol] << " (black = "
        << num(vr.hi) << ", white = " << num(vr.lo) << ")</text>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace

std::string render_svg(const SweepResult& result, const RunConfig& cfg) {
    if (cfg.axes.size() == 2) return heatmap(result, cfg);

    const std::size_t cols = result.columns.size();
    Range xr = finite_range(result, 0);
    Range yr{std::numeric_limits<double>::max(),
             std::numeric_limits<double>::lowest()};
    for (std::size_t c = 1; c < cols; ++c) {
        const Range r = finite_range(result, c);
        yr.lo = std::min(yr.lo, r.lo);
        yr.hi = std::max(yr.hi, r.hi);
    }
    if (yr.lo > yr.hi) yr = {0.0, 1.0};
    if (yr.lo == yr.hi) yr.hi = yr.lo + 1.0;

    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kW
        << "' height='" << kH << "'>\n";
    out << "<rect x='" << kMargin << "' y='" << kMargin << "' width='"
        << kW - 2 * kMargin << "' height='" << kH - 2 * kMargin
        << "' fill='white' stroke='black'/>\n";
    static const char* kColors[] = {"#c0392b", "#7d3c98", "#1f618d",
                                    "#148f77"};
    for (std::size_t c = 1; c < cols; ++c)
        polyline(out, result, c, xr, yr, kColors[(c - 1) % 4]);

    out << "<text x='" << kW / 2 << "' y='" << kH - 16
        << "' text-anchor='middle' font-size='13'>" << result.columns[0]
        << " [" << num(xr.lo) << ", " << num(xr.hi) << "]</text>\n";
    std::string legend;
    for (std::size_t c = 1; c < cols; ++c) {
        if (c > 1) legend += ", ";
        legend += result.columns[c];
    }
    out << "<text x='16' y='" << kH / 2 << "' transform='rotate(-90 16 "
        << kH / 2 << ")' text-anchor='middle' font-size='13'>" << legend
        << " [" << num(yr.lo) << ", " << num(yr.hi) << "]</text>\n";
    out << "</svg>\n";
    return out.str();
}

void write_svg_file(const SweepResult& result, const RunConfig& cfg,
                    const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open output file '" + path + "'");
    out << render_svg(result, cfg);
    if (!out) throw io_error("failed writing '" + path + "'");
}

} // namespace spp
