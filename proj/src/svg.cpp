#include "piezonode/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "piezonode/format.hpp"

namespace piezonode {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
constexpr std::size_t kMaxPoints = 2000;

struct Range {
    double lo = 0.0;
    double hi = 1.0;
};

Range span(const std::vector<SvgSeries>& series, bool use_y) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& s : series)
        for (double v : (use_y ? s.y : s.x)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    if (!std::isfinite(lo) || !std::isfinite(hi)) return {0.0, 1.0};
    if (lo == hi) return {lo - 1.0, hi + 1.0};
    const double pad = use_y ? 0.05 * (hi - lo) : 0.0;
    return {lo - pad, hi + pad};
}

}  // namespace

std::string svg_line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                           const std::vector<SvgSeries>& series, int width, int height) {
    const double ml = 72, mr = 24, mt = 42, mb = 52;
    const double pw = width - ml - mr;
    const double ph = height - mt - mb;
    const Range rx = span(series, false);
    const Range ry = span(series, true);

    auto px = [&](double x) { return ml + pw * (x - rx.lo) / (rx.hi - rx.lo); };
    auto py = [&](double y) { return mt + ph * (1.0 - (y - ry.lo) / (ry.hi - ry.lo)); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"15\">"
        << title << "</text>\n";

    // Grid and tick labels.
    for (int i = 0; i <= 5; ++i) {
        const double fx = rx.lo + (rx.hi - rx.lo) * i / 5.0;
        const double fy = ry.lo + (ry.hi - ry.lo) * i / 5.0;
        out << "<line x1=\"" << fmt_sig(px(fx), 6) << "\" y1=\"" << fmt_sig(mt, 6) << "\" x2=\""
            << fmt_sig(px(fx), 6) << "\" y2=\"" << fmt_sig(mt + ph, 6)
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out << "<line x1=\"" << fmt_sig(ml, 6) << "\" y1=\"" << fmt_sig(py(fy), 6) << "\" x2=\""
            << fmt_sig(ml + pw, 6) << "\" y2=\"" << fmt_sig(py(fy), 6)
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << fmt_sig(px(fx), 6) << "\" y=\"" << fmt_sig(mt + ph + 18, 6)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << fmt_sig(fx, 4)
            << "</text>\n";
        out << "<text x=\"" << fmt_sig(ml - 6, 6) << "\" y=\"" << fmt_sig(py(fy) + 4, 6)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt_sig(fy, 4)
            << "</text>\n";
    }

    out << "<rect x=\"" << fmt_sig(ml, 6) << "\" y=\"" << fmt_sig(mt, 6) << "\" width=\"" << fmt_sig(pw, 6)
        << "\" height=\"" << fmt_sig(ph, 6) << "\" fill=\"none\" stroke=\"#333333\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << x_label << "</text>\n";
    out << "<text x=\"18\" y=\"" << height / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 18 "
        << height / 2 << ")\">" << y_label << "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const std::size_t n = std::min(s.x.size(), s.y.size());
        if (n == 0) continue;
        const std::size_t stride = std::max<std::size_t>(1, (n + kMaxPoints - 1) / kMaxPoints);
        out << "<polyline fill=\"none\" stroke=\"" << kPalette[k % 5] << "\" stroke-width=\"1.4\" points=\"";
        for (std::size_t i = 0; i < n; i += stride)
            out << fmt_sig(px(s.x[i]), 6) << ',' << fmt_sig(py(s.y[i]), 6) << ' ';
        if ((n - 1) % stride != 0)
            out << fmt_sig(px(s.x[n - 1]), 6) << ',' << fmt_sig(py(s.y[n - 1]), 6) << ' ';
        out << "\"/>\n";
        out << "<text x=\"" << fmt_sig(ml + pw - 8, 6) << "\" y=\"" << fmt_sig(mt + 16 + 16 * double(k), 6)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << kPalette[k % 5]
            << "\">" << s.label << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace piezonode
