#include "crowdex/svg.hpp"

#include <algorithm>

#include "crowdex/format.hpp"
#include "crowdex/preference_graph.hpp"

namespace crowdex {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kMarginLeft = 52.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 44.0;
constexpr double kMarginBottom = 64.0;
constexpr double kPlotWidth = kWidth - kMarginLeft - kMarginRight;
constexpr double kPlotHeight = kHeight - kMarginTop - kMarginBottom;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string escapeXml(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
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

std::string num(double v) { return formatFixed(v, 2); }

std::string svgOpen() {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
           num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
}

std::string rect(double x, double y, double w, double h, const std::string& fill) {
    return "  <rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) +
           "\" height=\"" + num(h) + "\" fill=\"" + fill + "\"/>\n";
}

std::string line(double x1, double y1, double x2, double y2, const std::string& stroke,
                 double width = 1.0) {
    return "  <line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
           num(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" + num(width) + "\"/>\n";
}

std::string text(double x, double y, const std::string& content, const std::string& anchor,
                 double size = 12.0, const std::string& fill = "#333333") {
    return "  <text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" " +
           "font-size=\"" + num(size) + "\" text-anchor=\"" + anchor + "\" fill=\"" + fill +
           "\">" + escapeXml(content) + "</text>\n";
}

std::string circle(double x, double y, double r, const std::string& fill) {
    return "  <circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"" + num(r) + "\" fill=\"" +
           fill + "\"/>\n";
}

std::string axes() {
    std::string out;
    out += line(kMarginLeft, kMarginTop, kMarginLeft, kMarginTop + kPlotHeight, "#333333");
    out += line(kMarginLeft, kMarginTop + kPlotHeight, kMarginLeft + kPlotWidth,
                kMarginTop + kPlotHeight, "#333333");
    return out;
}

} // namespace

std::string renderHistogramSvg(const Histogram& histogram, const std::string& title) {
    const std::size_t peak =
        std::max<std::size_t>(std::size_t{1}, *std::max_element(histogram.counts.begin(),
                                                                histogram.counts.end()));
    std::string out = svgOpen();
    out += rect(0, 0, kWidth, kHeight, "#ffffff");
    out += text(kWidth / 2.0, kMarginTop - 18.0, title, "middle", 14.0);
    out += axes();

    const double bin_width = kPlotWidth / double(histogram.counts.size());
    for (std::size_t i = 0; i < histogram.counts.size(); ++i) {
        const double h = kPlotHeight * double(histogram.counts[i]) / double(peak);
        const double x = kMarginLeft + double(i) * bin_width + 3.0;
        const double y = kMarginTop + kPlotHeight - h;
        out += rect(x, y, bin_width - 6.0, h, "#4878a8");
        if (histogram.counts[i] > 0) {
            out += text(x + (bin_width - 6.0) / 2.0, y - 4.0,
                        std::to_string(histogram.counts[i]), "middle", 10.0, "#555555");
        }
    }

    // Degree boundaries every other bin, plus the y extremes.
    for (int tick = 0; tick <= 10; tick += 2) {
        const double x = kMarginLeft + kPlotWidth * double(tick) / 10.0;
        out += line(x, kMarginTop + kPlotHeight, x, kMarginTop + kPlotHeight + 4.0, "#333333");
        out += text(x, kMarginTop + kPlotHeight + 18.0, formatFixed(tick / 10.0, 1), "middle",
                    10.0);
    }
    out += text(kMarginLeft - 6.0, kMarginTop + kPlotHeight + 4.0, "0", "end", 10.0);
    out += text(kMarginLeft - 6.0, kMarginTop + 8.0, std::to_string(peak), "end", 10.0);
    out += text(kMarginLeft + kPlotWidth / 2.0, kHeight - 16.0, "expertise degree", "middle",
                11.0);

    out += "</svg>\n";
    return out;
}

std::string renderConditionCurvesSvg(const std::vector<CurveSeries>& series,
                                     const std::string& title) {
    std::string out = svgOpen();
    out += rect(0, 0, kWidth, kHeight, "#ffffff");
    out += text(kWidth / 2.0, kMarginTop - 18.0, title, "middle", 14.0);
    out += axes();

    const std::size_t condition_count = series.empty() ? 0 : series.front().points.size();
    const auto x_at = [&](std::size_t i) {
        if (condition_count <= 1) {
            return kMarginLeft + kPlotWidth / 2.0;
        }
        return kMarginLeft + kPlotWidth * double(i) / double(condition_count - 1);
    };
    const auto y_at = [&](double mean) {
        const double t = (mean - kRatingMin) / double(kRatingMax - kRatingMin);
        return kMarginTop + kPlotHeight * (1.0 - t);
    };

    // Rating gridlines.
    for (int note = kRatingMin; note <= kRatingMax; ++note) {
        const double y = y_at(double(note));
        out += line(kMarginLeft, y, kMarginLeft + kPlotWidth, y, "#dddddd");
        out += text(kMarginLeft - 6.0, y + 4.0, std::to_string(note), "end", 10.0);
    }

    // Condition labels along the x axis.
    for (std::size_t i = 0; i < condition_count; ++i) {
        out += text(x_at(i), kMarginTop + kPlotHeight + 16.0, series.front().points[i].condition_id,
                    "middle", 9.0);
    }

    for (std::size_t s = 0; s < series.size(); ++s) {
        const std::string color = kPalette[s % kPaletteSize];
        // Contiguous runs of conditions with data; gaps break the line.
        std::vector<std::pair<double, double>> run;
        const auto flush = [&]() {
            if (run.size() >= 2) {
                std::string points;
                for (const auto& [x, y] : run) {
                    points += num(x) + "," + num(y) + " ";
                }
                points.pop_back();
                out += "  <polyline points=\"" + points + "\" fill=\"none\" stroke=\"" + color +
                       "\" stroke-width=\"1.5\"/>\n";
            }
            run.clear();
        };
        for (std::size_t i = 0; i < series[s].points.size(); ++i) {
            const auto& point = series[s].points[i];
            if (point.mean) {
                const double x = x_at(i);
                const double y = y_at(*point.mean);
                run.emplace_back(x, y);
                out += circle(x, y, 3.0, color);
            } else {
                flush();
            }
        }
        flush();

        // Legend entry.
        const double ly = kMarginTop + 14.0 * double(s);
        out += line(kMarginLeft + kPlotWidth - 120.0, ly, kMarginLeft + kPlotWidth - 100.0, ly,
                    color, 2.0);
        out += text(kMarginLeft + kPlotWidth - 94.0, ly + 4.0, series[s].label, "start", 10.0);
    }

    out += text(kMarginLeft + kPlotWidth / 2.0, kHeight - 16.0, "condition", "middle", 11.0);
    out += "</svg>\n";
    return out;
}

} // namespace crowdex
