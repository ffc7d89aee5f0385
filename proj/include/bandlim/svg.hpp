#pragma once

#include <string>
#include <vector>

namespace bandlim {

struct SvgSeries {
    std::vector<double> x;
    std::vector<double> y;
    std::string label;
    std::string color = "#4c78a8";
    bool dashed = false;
    bool markers = false;
    std::vector<double> band_lo;  // optional envelope, same length as x
    std::vector<double> band_hi;
};

// Self-contained 800x500 SVG line chart: axes, ticks, optional translucent
// bands, legend. Byte-identical output for identical input.
std::string render_chart(const std::string& title, const std::string& xlabel,
                         const std::string& ylabel, const std::vector<SvgSeries>& series);

}  // namespace bandlim
