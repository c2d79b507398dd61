#include "sizefn/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace sizefn {

static std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string diagram_to_svg(const SizeFunctionDiagram& d) {
    double lo = 0.0, hi = 1.0;
    bool seen = false;
    auto take = [&](double v) {
        lo = seen ? std::min(lo, v) : v;
        hi = seen ? std::max(hi, v) : v;
        seen = true;
    };
    for (double k : d.at_infinity) take(k);
    for (const auto& c : d.proper) {
        take(c.x);
        take(c.y);
    }
    if (!seen) {
        lo = 0.0;
        hi = 1.0;
    }
    double pad = (hi - lo) * 0.15;
    if (pad <= 0.0) pad = 1.0;
    lo -= pad;
    hi += pad;

    const double size = 420.0, margin = 46.0;
    const double span = hi - lo;
    auto X = [&](double v) { return margin + (v - lo) / span * size; };
    auto Y = [&](double v) { return margin + size - (v - lo) / span * size; };

    std::ostringstream svg;
    const double W = size + 2 * margin, H = size + 2 * margin;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    svg << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";

    // half-plane above the diagonal
    svg << "<polygon points=\"" << X(lo) << "," << Y(lo) << " " << X(lo) << "," << Y(hi) << " "
        << X(hi) << "," << Y(hi) << "\" fill=\"#eef3fb\"/>\n";
    // frame and diagonal
    svg << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << size
        << "\" height=\"" << size << "\" fill=\"none\" stroke=\"#888\"/>\n";
    svg << "<line x1=\"" << X(lo) << "\" y1=\"" << Y(lo) << "\" x2=\"" << X(hi) << "\" y2=\""
        << Y(hi) << "\" stroke=\"#555\" stroke-dasharray=\"5 4\"/>\n";

    // axis extent labels
    svg << "<text x=\"" << margin << "\" y=\"" << H - 12 << "\" font-size=\"12\" fill=\"#333\">"
        << num(lo) << "</text>\n";
    svg << "<text x=\"" << margin + size - 30 << "\" y=\"" << H - 12
        << "\" font-size=\"12\" fill=\"#333\">" << num(hi) << "</text>\n";

    // cornerpoints at infinity: vertical lines from the diagonal upward
    for (double k : d.at_infinity) {
        svg << "<line x1=\"" << X(k) << "\" y1=\"" << Y(k) << "\" x2=\"" << X(k) << "\" y2=\""
            << margin << "\" stroke=\"#b03030\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << X(k) + 4 << "\" y=\"" << margin + 14
            << "\" font-size=\"12\" fill=\"#b03030\">k=" << num(k) << "</text>\n";
    }

    // proper cornerpoints, disk area grows with multiplicity
    for (const auto& c : d.proper) {
        const double r = 4.0 * std::sqrt(static_cast<double>(c.multiplicity));
        svg << "<circle cx=\"" << X(c.x) << "\" cy=\"" << Y(c.y) << "\" r=\"" << r
            << "\" fill=\"#2b5fad\" fill-opacity=\"0.85\"/>\n";
        svg << "<text x=\"" << X(c.x) + r + 3 << "\" y=\"" << Y(c.y) - 3
            << "\" font-size=\"12\" fill=\"#2b5fad\">(" << num(c.x) << "," << num(c.y) << ")x"
            << c.multiplicity << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace sizefn
