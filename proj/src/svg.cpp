#include "childci/svg.hpp"

#include <cstdarg>
#include <cstdio>
#include <set>

namespace childci {

namespace {

#if defined(__GNUC__)
__attribute__((format(printf, 2, 3)))
#endif
void appendf(std::string& out, const char* fmt, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    out += buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

constexpr const char* kCurveColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                        "#d62728", "#9467bd", "#8c564b"};

const char* band_color(Band band) {
    switch (band) {
        case Band::below_low: return "#d62728";
        case Band::mid: return "#444444";
        case Band::above_high: return "#2ca02c";
        case Band::unclassified: return "#999999";
    }
    return "#999999";
}

}  // namespace

std::string chart_svg(const GrowthChart& chart, const Trajectory* trajectory) {
    const double width = 720, height = 480;
    const double left = 64, right = 24, top = 48, bottom = 56;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    std::set<int> levels;
    for (const auto& curve : chart.curves) {
        for (const auto& pt : curve) levels.insert(pt.group_level);
    }
    if (trajectory) {
        for (const auto& pt : trajectory->points) levels.insert(pt.group_level);
    }
    for (const auto& [level, n] : chart.sample_counts) levels.insert(level);
    const int lo = levels.empty() ? 2 : *levels.begin();
    const int hi = levels.empty() ? 8 : *levels.rbegin();

    const auto x_of = [&](double level) {
        return hi == lo ? left + plot_w / 2 : left + (level - lo) / (hi - lo) * plot_w;
    };
    const auto y_of = [&](double q) { return top + (100.0 - q) / 100.0 * plot_h; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    appendf(out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
            "viewBox=\"0 0 %.0f %.0f\" font-family=\"sans-serif\" font-size=\"12\">\n",
            width, height, width, height);
    appendf(out, "<rect width=\"%.0f\" height=\"%.0f\" fill=\"#ffffff\"/>\n", width, height);

    std::string title = "Test " + std::to_string(chart.test_id);
    if (trajectory) title += " / child " + trajectory->child_id;
    appendf(out, "<text x=\"%.1f\" y=\"24\" font-size=\"15\" fill=\"#222222\">%s</text>\n", left,
            xml_escape(title).c_str());

    // Horizontal grid every 20 Q-points.
    for (int q = 0; q <= 100; q += 20) {
        const double y = y_of(q);
        appendf(out,
                "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#dddddd\"/>\n",
                left, y, left + plot_w, y);
        appendf(out,
                "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\" fill=\"#555555\">%d</text>\n",
                left - 8, y + 4, q);
    }
    // One tick per level.
    for (int level = lo; level <= hi; ++level) {
        const double x = x_of(level);
        appendf(out,
                "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#bbbbbb\"/>\n", x,
                top + plot_h, x, top + plot_h + 5);
        appendf(out,
                "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\" fill=\"#555555\">%d</text>\n",
                x, top + plot_h + 20, level);
    }
    appendf(out, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#333333\"/>\n",
            left, top, left, top + plot_h);
    appendf(out, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#333333\"/>\n",
            left, top + plot_h, left + plot_w, top + plot_h);
    appendf(out,
            "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\" fill=\"#555555\">age group "
            "(educational level)</text>\n",
            left + plot_w / 2, height - 14);
    appendf(out, "<text x=\"14\" y=\"%.1f\" fill=\"#555555\">Q %%</text>\n", top - 10);

    for (std::size_t i = 0; i < chart.curves.size(); ++i) {
        const char* color = kCurveColors[i % (sizeof kCurveColors / sizeof *kCurveColors)];
        const auto& curve = chart.curves[i];
        if (curve.size() > 1) {
            out += "<polyline fill=\"none\" stroke=\"";
            out += color;
            out += "\" stroke-width=\"2\" points=\"";
            for (std::size_t j = 0; j < curve.size(); ++j) {
                appendf(out, "%s%.2f,%.2f", j ? " " : "", x_of(curve[j].group_level),
                        y_of(curve[j].q));
            }
            out += "\"/>\n";
        }
        for (const auto& pt : curve) {
            appendf(out, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"%s\"/>\n",
                    x_of(pt.group_level), y_of(pt.q), color);
        }
        appendf(out, "<text x=\"%.1f\" y=\"%.1f\" fill=\"%s\">p%g</text>\n",
                left + plot_w - 34, top + 16 * static_cast<double>(i + 1), color,
                chart.percentiles[i]);
    }

    if (trajectory) {
        const auto& pts = trajectory->points;
        if (pts.size() > 1) {
            out += "<polyline fill=\"none\" stroke=\"#444444\" stroke-width=\"1.5\" "
                   "stroke-dasharray=\"5 4\" points=\"";
            for (std::size_t j = 0; j < pts.size(); ++j) {
                appendf(out, "%s%.2f,%.2f", j ? " " : "", x_of(pts[j].group_level), y_of(pts[j].q));
            }
            out += "\"/>\n";
        }
        for (const auto& pt : pts) {
            const double x = x_of(pt.group_level);
            const double y = y_of(pt.q);
            appendf(out,
                    "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"5\" fill=\"%s\" stroke=\"#ffffff\" "
                    "stroke-width=\"1.5\"/>\n",
                    x, y, band_color(pt.band));
            appendf(out, "<text x=\"%.2f\" y=\"%.2f\" fill=\"#333333\">a%d</text>\n", x + 8, y - 8,
                    pt.acquisition_id);
        }
    }

    out += "</svg>\n";
    return out;
}

}  // namespace childci
