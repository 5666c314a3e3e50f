#include "harness/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace ifoi::harness {

namespace {

constexpr double kWidth = 820.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 200.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

std::string escape(const std::string& text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

double nice_step(double range) {
    const double raw = range / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double frac = raw / mag;
    const double nice = frac < 1.5 ? 1.0 : frac < 3.5 ? 2.0 : frac < 7.5 ? 5.0 : 10.0;
    return nice * mag;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void finish(bool pad) {
        if (!std::isfinite(lo)) {
            lo = 0.0;
            hi = 1.0;
        }
        if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
            lo -= 0.5;
            hi += 0.5;
        } else if (pad) {
            const double margin = 0.05 * (hi - lo);
            lo -= margin;
            hi += margin;
        }
    }
};

}  // namespace

std::string ramp_color(double t) {
    t = std::clamp(t, 0.0, 1.0);
    const auto channel = [t](double a, double b) {
        return static_cast<int>(std::lround(a + (b - a) * t));
    };
    return fmt::format("#{:02x}{:02x}{:02x}", channel(60, 214), channel(110, 39),
                       channel(220, 40));
}

std::string render_svg(const LinePlot& plot) {
    Range xr;
    Range yr;
    for (const auto& s : plot.series) {
        for (double v : s.x) xr.add(v);
        for (double v : s.y) yr.add(v);
    }
    xr.finish(false);
    yr.finish(true);

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    const auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    const auto py = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.0f}\" "
        "height=\"{:.0f}\" viewBox=\"0 0 {:.0f} {:.0f}\" font-family=\"sans-serif\">\n",
        kWidth, kHeight, kWidth, kHeight);
    out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n",
                       kWidth, kHeight);
    out += fmt::format("<text x=\"{:.2f}\" y=\"24\" font-size=\"16\" text-anchor=\"middle\">{}</text>\n",
                       kLeft + pw / 2.0, escape(plot.title));

    // Grid and ticks.
    out += "<g stroke=\"#dddddd\" stroke-width=\"1\" font-size=\"11\" fill=\"#333333\">\n";
    const double xs = nice_step(xr.hi - xr.lo);
    for (double t = std::ceil(xr.lo / xs) * xs; t <= xr.hi + 1e-9 * xs; t += xs) {
        const double x = px(t);
        out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", x,
                           kTop, x, kTop + ph);
        out += fmt::format(
            "<text x=\"{:.2f}\" y=\"{:.2f}\" stroke=\"none\" text-anchor=\"middle\">{:.3g}</text>\n",
            x, kTop + ph + 16.0, std::abs(t) < 1e-12 * xs ? 0.0 : t);
    }
    const double ys = nice_step(yr.hi - yr.lo);
    for (double t = std::ceil(yr.lo / ys) * ys; t <= yr.hi + 1e-9 * ys; t += ys) {
        const double y = py(t);
        out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n",
                           kLeft, y, kLeft + pw, y);
        out += fmt::format(
            "<text x=\"{:.2f}\" y=\"{:.2f}\" stroke=\"none\" text-anchor=\"end\">{:.3g}</text>\n",
            kLeft - 6.0, y + 4.0, std::abs(t) < 1e-12 * ys ? 0.0 : t);
    }
    out += "</g>\n";
    out += fmt::format(
        "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"none\" "
        "stroke=\"black\" stroke-width=\"1\"/>\n",
        kLeft, kTop, pw, ph);
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"13\" text-anchor=\"middle\">{}</text>\n",
                       kLeft + pw / 2.0, kHeight - 18.0, escape(plot.x_label));
    out += fmt::format(
        "<text x=\"18\" y=\"{:.2f}\" font-size=\"13\" text-anchor=\"middle\" "
        "transform=\"rotate(-90 18 {:.2f})\">{}</text>\n",
        kTop + ph / 2.0, kTop + ph / 2.0, escape(plot.y_label));

    for (const auto& s : plot.series) {
        std::string points;
        const std::size_t count = std::min(s.x.size(), s.y.size());
        for (std::size_t i = 0; i < count; ++i) {
            if (i > 0) points += ' ';
            points += fmt::format("{:.2f},{:.2f}", px(s.x[i]), py(s.y[i]));
        }
        out += fmt::format(
            "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"{:.2f}\"{} points=\"{}\"/>\n",
            s.color, s.width, s.dashed ? " stroke-dasharray=\"6,4\"" : "", points);
    }

    // Legend.
    double ly = kTop + 10.0;
    const double lx = kLeft + pw + 16.0;
    out += "<g font-size=\"12\">\n";
    for (const auto& s : plot.series) {
        if (!s.in_legend) continue;
        out += fmt::format(
            "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" "
            "stroke-width=\"{:.2f}\"{}/>\n",
            lx, ly, lx + 24.0, ly, s.color, s.width, s.dashed ? " stroke-dasharray=\"6,4\"" : "");
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", lx + 30.0, ly + 4.0,
                           escape(s.label));
        ly += 18.0;
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace ifoi::harness
