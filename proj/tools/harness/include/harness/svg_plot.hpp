#pragma once

#include <string>
#include <vector>

namespace ifoi::harness {

struct Series {
    std::string label;
    std::string color;
    std::vector<double> x;
    std::vector<double> y;
    double width = 1.5;
    /// Dashed stroke when set.
    bool dashed = false;
    /// Whether the series gets a legend entry.
    bool in_legend = true;
};

struct LinePlot {
    std::string title;
    std::string x_label = "x";
    std::string y_label;
    std::vector<Series> series;
};

/// Self-contained SVG 1.1 document: frame, ticks, labels, legend, and one
/// <polyline> per series. Output depends only on the input values.
std::string render_svg(const LinePlot& plot);

/// Hex color on a blue-to-red ramp, t in [0, 1].
std::string ramp_color(double t);

}  // namespace ifoi::harness
