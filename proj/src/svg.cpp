#include "bandlim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bandlim/errors.hpp"

namespace bandlim {

namespace {

constexpr double kWidth = 800, kHeight = 500;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string esc(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

}  // namespace

std::string render_chart(const std::string& title, const std::string& xlabel,
                         const std::string& ylabel, const std::vector<SvgSeries>& series) {
    bool any = false;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    for (const auto& s : series) {
        for (size_t i = 0; i < s.x.size(); ++i) {
            double lo = s.band_lo.size() == s.x.size() ? s.band_lo[i] : s.y[i];
            double hi = s.band_hi.size() == s.x.size() ? s.band_hi[i] : s.y[i];
            if (!any) {
                xmin = xmax = s.x[i];
                ymin = std::min(0.0, lo);
                ymax = hi;
                any = true;
            } else {
                xmin = std::min(xmin, s.x[i]);
                xmax = std::max(xmax, s.x[i]);
                ymin = std::min(ymin, lo);
                ymax = std::max(ymax, hi);
            }
        }
    }
    if (!any) throw InvalidInputError("chart has no data");
    if (xmax == xmin) { xmin -= 1; xmax += 1; }
    if (ymax == ymin) { ymax = ymin + 1; }
    double ypad = 0.08 * (ymax - ymin);
    ymax += ypad;
    double xpad = 0.04 * (xmax - xmin);
    xmin -= xpad;
    xmax += xpad;

    auto X = [&](double v) { return kLeft + (v - xmin) / (xmax - xmin) * (kWidth - kLeft - kRight); };
    auto Y = [&](double v) { return kHeight - kBottom - (v - ymin) / (ymax - ymin) * (kHeight - kTop - kBottom); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
           "viewBox=\"0 0 800 500\">\n";
    svg += "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
    svg += "<text x=\"" + px(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" + esc(title) + "</text>\n";

    // axes
    svg += "<line x1=\"" + px(kLeft) + "\" y1=\"" + px(kHeight - kBottom) + "\" x2=\"" +
           px(kWidth - kRight) + "\" y2=\"" + px(kHeight - kBottom) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + px(kLeft) + "\" y1=\"" + px(kTop) + "\" x2=\"" + px(kLeft) +
           "\" y2=\"" + px(kHeight - kBottom) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    for (int i = 0; i <= 5; ++i) {
        double xv = xmin + i * (xmax - xmin) / 5;
        double yv = ymin + i * (ymax - ymin) / 5;
        svg += "<line x1=\"" + px(X(xv)) + "\" y1=\"" + px(kHeight - kBottom) + "\" x2=\"" +
               px(X(xv)) + "\" y2=\"" + px(kHeight - kBottom + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + px(X(xv)) + "\" y=\"" + px(kHeight - kBottom + 18) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               num(xv) + "</text>\n";
        svg += "<line x1=\"" + px(kLeft - 5) + "\" y1=\"" + px(Y(yv)) + "\" x2=\"" + px(kLeft) +
               "\" y2=\"" + px(Y(yv)) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + px(kLeft - 8) + "\" y=\"" + px(Y(yv) + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + num(yv) +
               "</text>\n";
    }
    svg += "<text x=\"" + px((kLeft + kWidth - kRight) / 2) + "\" y=\"" + px(kHeight - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + esc(xlabel) +
           "</text>\n";
    svg += "<text x=\"16\" y=\"" + px((kTop + kHeight - kBottom) / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 16 " + px((kTop + kHeight - kBottom) / 2) + ")\">" +
           esc(ylabel) + "</text>\n";

    // bands first so lines draw on top
    for (const auto& s : series) {
        if (s.band_lo.size() != s.x.size() || s.band_hi.size() != s.x.size() || s.x.empty())
            continue;
        std::string d = "M " + px(X(s.x[0])) + " " + px(Y(s.band_lo[0]));
        for (size_t i = 1; i < s.x.size(); ++i)
            d += " L " + px(X(s.x[i])) + " " + px(Y(s.band_lo[i]));
        for (size_t i = s.x.size(); i-- > 0;)
            d += " L " + px(X(s.x[i])) + " " + px(Y(s.band_hi[i]));
        d += " Z";
        svg += "<path d=\"" + d + "\" fill=\"" + s.color + "\" fill-opacity=\"0.25\" "
               "stroke=\"none\"/>\n";
    }

    for (const auto& s : series) {
        if (s.x.empty()) continue;
        std::string pts;
        for (size_t i = 0; i < s.x.size(); ++i) {
            if (i) pts += ' ';
            pts += px(X(s.x[i])) + "," + px(Y(s.y[i]));
        }
        svg += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + s.color +
               "\" stroke-width=\"2\"" + (s.dashed ? " stroke-dasharray=\"7,4\"" : "") + "/>\n";
        if (s.markers)
            for (size_t i = 0; i < s.x.size(); ++i)
                svg += "<circle cx=\"" + px(X(s.x[i])) + "\" cy=\"" + px(Y(s.y[i])) +
                       "\" r=\"3\" fill=\"" + s.color + "\"/>\n";
    }

    // legend, top-right
    double ly = kTop + 8;
    for (const auto& s : series) {
        if (s.label.empty()) continue;
        svg += "<line x1=\"" + px(kWidth - 190) + "\" y1=\"" + px(ly) + "\" x2=\"" +
               px(kWidth - 160) + "\" y2=\"" + px(ly) + "\" stroke=\"" + s.color +
               "\" stroke-width=\"2\"" + (s.dashed ? " stroke-dasharray=\"7,4\"" : "") + "/>\n";
        svg += "<text x=\"" + px(kWidth - 154) + "\" y=\"" + px(ly + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + esc(s.label) + "</text>\n";
        ly += 18;
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace bandlim
