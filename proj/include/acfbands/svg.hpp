#ifndef ACFBANDS_SVG_HPP
#define ACFBANDS_SVG_HPP

#include <algorithm>
#include <cstdio>
#include <string>

#include "acfbands/report.hpp"

namespace acfbands {

namespace detail {

inline std::string fmt_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline const char* band_color(BandKind kind) {
    switch (kind) {
        case BandKind::sig_simultaneous: return "#d62728";
        case BandKind::sig_pointwise: return "#1f77b4";
        case BandKind::conf_supt: return "#2ca02c";
        case BandKind::conf_bonferroni: return "#ff7f0e";
        case BandKind::conf_pointwise: return "#9467bd";
        case BandKind::sig_dynamic_exact: return "#8c564b";
        case BandKind::sig_dynamic_naive: return "#7f7f7f";
    }
    return "#000000";
}

} // namespace detail

/// Standalone SVG autocorrelogram: one spike per lag, stepped horizontal
/// lines per band (clipped to [-1, 1] for display; the stored report is
/// left unclipped). Output is byte-deterministic for identical reports.
inline std::string render_svg(const BandReport& report) {
    const int H = report.acf.H;
    if (H < 1) throw InvalidArgument("render_svg: report has no lags");

    const double width = 760.0, height = 420.0;
    const double ml = 56.0, mr = 16.0, mt = 20.0, mb = 44.0;
    const double pw = width - ml - mr;
    const double ph = height - mt - mb;

    auto x_of = [&](double h) { return ml + pw * (h - 0.25) / (H + 0.5); };
    auto y_of = [&](double v) { return mt + ph * (1.0 - (v + 1.0) / 2.0); };
    auto clip = [](double v) { return std::clamp(v, -1.0, 1.0); };
    using detail::fmt_coord;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"760\" height=\"420\" "
           "viewBox=\"0 0 760 420\">\n";
    svg += "<rect width=\"760\" height=\"420\" fill=\"white\"/>\n";

    // y axis with ticks at -1, -0.5, 0, 0.5, 1
    svg += "<line x1=\"" + fmt_coord(ml) + "\" y1=\"" + fmt_coord(mt) + "\" x2=\"" + fmt_coord(ml) +
           "\" y2=\"" + fmt_coord(mt + ph) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (double v = -1.0; v <= 1.0001; v += 0.5) {
        const double y = y_of(v);
        svg += "<line x1=\"" + fmt_coord(ml - 4) + "\" y1=\"" + fmt_coord(y) + "\" x2=\"" +
               fmt_coord(ml) + "\" y2=\"" + fmt_coord(y) + "\" stroke=\"black\"/>\n";
        char label[16];
        std::snprintf(label, sizeof(label), "%.1f", v);
        svg += "<text x=\"" + fmt_coord(ml - 8) + "\" y=\"" + fmt_coord(y + 4) +
               "\" font-size=\"12\" text-anchor=\"end\" font-family=\"sans-serif\">" + label +
               "</text>\n";
    }
    // zero line and x axis labels
    svg += "<line x1=\"" + fmt_coord(ml) + "\" y1=\"" + fmt_coord(y_of(0.0)) + "\" x2=\"" +
           fmt_coord(ml + pw) + "\" y2=\"" + fmt_coord(y_of(0.0)) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    const int tick_step = (H > 20) ? 5 : (H > 10 ? 2 : 1);
    for (int h = 1; h <= H; ++h) {
        if (h % tick_step != 0 && h != 1) continue;
        svg += "<text x=\"" + fmt_coord(x_of(h)) + "\" y=\"" + fmt_coord(mt + ph + 16) +
               "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"sans-serif\">" +
               std::to_string(h) + "</text>\n";
    }
    svg += "<text x=\"" + fmt_coord(ml + pw / 2) + "\" y=\"" + fmt_coord(height - 8) +
           "\" font-size=\"13\" text-anchor=\"middle\" font-family=\"sans-serif\">lag h</text>\n";

    // bands: stepped horizontal segments per lag
    for (const auto& band : report.bands) {
        const char* color = detail::band_color(band.kind);
        for (int side = 0; side < 2; ++side) {
            std::string points;
            for (int h = 1; h <= band.H; ++h) {
                const double v = clip(side == 0 ? band.lower_at(h) : band.upper_at(h));
                points += fmt_coord(x_of(h - 0.45)) + "," + fmt_coord(y_of(v)) + " ";
                points += fmt_coord(x_of(h + 0.45)) + "," + fmt_coord(y_of(v)) + " ";
            }
            svg += "<polyline class=\"band\" data-kind=\"" + std::string(to_string(band.kind)) +
                   "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\" points=\"" +
                   points + "\"/>\n";
        }
    }

    // spikes for the empirical autocorrelations
    for (int h = 1; h <= H; ++h) {
        const double r = clip(report.acf.rho_at(h));
        svg += "<line class=\"spike\" x1=\"" + fmt_coord(x_of(h)) + "\" y1=\"" +
               fmt_coord(y_of(0.0)) + "\" x2=\"" + fmt_coord(x_of(h)) + "\" y2=\"" +
               fmt_coord(y_of(r)) + "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        svg += "<circle cx=\"" + fmt_coord(x_of(h)) + "\" cy=\"" + fmt_coord(y_of(r)) +
               "\" r=\"2.2\" fill=\"black\"/>\n";
    }

    // legend
    double ly = mt + 6.0;
    for (const auto& band : report.bands) {
        const char* color = detail::band_color(band.kind);
        svg += "<line x1=\"" + fmt_coord(ml + pw - 150) + "\" y1=\"" + fmt_coord(ly) + "\" x2=\"" +
               fmt_coord(ml + pw - 130) + "\" y2=\"" + fmt_coord(ly) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + fmt_coord(ml + pw - 124) + "\" y=\"" + fmt_coord(ly + 4) +
               "\" font-size=\"11\" font-family=\"sans-serif\">" + to_string(band.kind) +
               "</text>\n";
        ly += 16.0;
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace acfbands

#endif
