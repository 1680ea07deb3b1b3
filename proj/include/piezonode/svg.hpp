#pragma once

#include <string>
#include <vector>

namespace piezonode {

struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Self-contained SVG line chart (polyline + axes + tick labels + legend).
/// Long series are decimated to at most 2000 points per line.
std::string svg_line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                           const std::vector<SvgSeries>& series, int width = 860, int height = 480);

}  // namespace piezonode
