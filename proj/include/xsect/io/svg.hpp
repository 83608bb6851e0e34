#pragma once

#include "../family.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

namespace xsect {

// Display only; nothing here feeds back into verification.
inline void write_svg(std::ostream& os, const ObjectFamily& f, double scale = 100.0) {
    double x0 = std::numeric_limits<double>::max(), y0 = x0, x1 = -x0, y1 = -x0;
    auto grow = [&](double x, double y, double r = 0) {
        x0 = std::min(x0, x - r), x1 = std::max(x1, x + r);
        y0 = std::min(y0, y - r), y1 = std::max(y1, y + r);
    };
    for (auto& s : f.segments) grow(to_double(s.p.x), to_double(s.p.y)), grow(to_double(s.q.x), to_double(s.q.y));
    for (auto& d : f.disks) grow(to_double(d.center.x), to_double(d.center.y), to_double(d.radius));
    for (auto& p : f.polylines)
        for (auto& v : p.vertices) grow(to_double(v.x), to_double(v.y));
    if (f.ground) grow(to_double(f.ground->center.x), to_double(f.ground->center.y), to_double(f.ground->radius));
    if (x0 > x1) x0 = y0 = 0, x1 = y1 = 1;
    double pad = 0.05 * std::max(x1 - x0, y1 - y0) + 1e-9;
    x0 -= pad, y0 -= pad, x1 += pad, y1 += pad;
    auto X = [&](const Rational& x) { return (to_double(x) - x0) * scale; };
    auto Y = [&](const Rational& y) { return (y1 - to_double(y)) * scale; };
    double stroke = std::max(x1 - x0, y1 - y0) * scale / 500.0;

    os << std::setprecision(10);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<!-- coordinates are approximate: exact rationals rounded to double for display -->\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << (x1 - x0) * scale << "\" height=\""
       << (y1 - y0) * scale << "\">\n";
    os << "<g fill=\"none\" stroke-width=\"" << stroke << "\">\n";
    if (f.ground)
        os << "<circle cx=\"" << X(f.ground->center.x) << "\" cy=\"" << Y(f.ground->center.y) << "\" r=\""
           << to_double(f.ground->radius) * scale << "\" stroke=\"#999999\"/>\n";
    for (auto& s : f.segments)
        os << "<line x1=\"" << X(s.p.x) << "\" y1=\"" << Y(s.p.y) << "\" x2=\"" << X(s.q.x) << "\" y2=\"" << Y(s.q.y)
           << "\" stroke=\"black\"><title>" << s.label << "</title></line>\n";
    for (auto& d : f.disks)
        os << "<circle cx=\"" << X(d.center.x) << "\" cy=\"" << Y(d.center.y) << "\" r=\"" << to_double(d.radius) * scale
           << "\" stroke=\"black\"><title>" << d.label << "</title></circle>\n";
    for (auto& p : f.polylines) {
        os << "<polyline points=\"";
        for (std::size_t i = 0; i < p.vertices.size(); ++i) os << (i ? " " : "") << X(p.vertices[i].x) << ',' << Y(p.vertices[i].y);
        os << "\" stroke=\"black\"><title>" << p.label << "</title></polyline>\n";
    }
    os << "</g>\n</svg>\n";
}

}  // namespace xsect
