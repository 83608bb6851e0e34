#pragma once

#include "../family.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace xsect {

inline std::string rung(int i) { return "l" + std::to_string(i); }
inline std::string spoke(int j, int i) { return "s" + std::to_string(j) + "_" + std::to_string(i); }
inline std::string ring(int i) { return "c" + std::to_string(i); }

// Adjacencies forced by the gadget's six conditions.
inline Graph ordering_gadget_mandated(int n) {
    Graph g;
    g.add_vertex("l");
    for (int i = 1; i <= n; ++i) g.add_vertex(rung(i));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= 3; ++j) g.add_vertex(spoke(j, i));
    for (int i = 1; i <= 4 * n; ++i) g.add_vertex(ring(i));

    for (int i = 1; i <= n; ++i) g.add_edge("l", rung(i));
    for (int i = 1; i < n; ++i) g.add_edge("l", spoke(2, i));
    for (int i = 1; i <= 4 * n; ++i) g.add_edge(ring(i), ring(i % (4 * n) + 1));
    for (int i = 1; i <= n; ++i) {
        g.add_edge(rung(i), ring(2 * i));
        g.add_edge(rung(i), ring(4 * n - 2 * i + 2));
    }
    for (int i = 1; i < n; ++i) {
        g.add_edge(spoke(1, i), spoke(2, i));
        g.add_edge(spoke(3, i), spoke(2, i));
        g.add_edge(spoke(1, i), ring(2 * i + 1));
        g.add_edge(spoke(3, i), ring(4 * n - 2 * i + 1));
    }
    return g;
}

// Ring c_1..c_4n: extended edges of a convex polygon symmetric about the
// y-axis, with c_1 on top, c_2..c_2n down the left side, c_{2n+1} at the
// bottom and the rest back up the right side. Rungs l_i are horizontal
// chords through c_2i and its mirror; l is vertical at x = 1/2.
inline ModelBundle ordering_gadget(int n) {
    if (n < 2) throw std::invalid_argument("ordering_gadget needs n >= 2");
    auto left = [n](int m) {
        Rational u = 2 * m - 2 * n - 1;
        return Point{-100 + u * u / 8, Rational(-40 * m)};
    };
    auto mirror = [](const Point& p) { return Point{-p.x, p.y}; };
    auto mid = [](const Point& p, const Point& q) { return Rational(1, 2) * (p + q); };
    auto extended = [](const Point& p, const Point& q, std::string label) {
        Point d = Rational(1, 20) * (q - p);
        return Segment{p - d, q + d, std::move(label)};
    };

    ModelBundle b;
    auto& segs = b.family.segments;
    b.family.kind = FamilyKind::Segments;

    segs.push_back(extended(left(1), mirror(left(1)), ring(1)));
    for (int j = 2; j <= 2 * n; ++j) segs.push_back(extended(left(j - 1), left(j), ring(j)));
    segs.push_back(extended(left(2 * n), mirror(left(2 * n)), ring(2 * n + 1)));
    for (int j = 2 * n + 2; j <= 4 * n; ++j) {
        int k = 4 * n + 2 - j;  // mirror index on the left
        segs.push_back(extended(mirror(left(k)), mirror(left(k - 1)), ring(j)));
    }

    Rational top, bottom;
    for (int i = 1; i <= n; ++i) {
        Point m = mid(left(2 * i - 1), left(2 * i));
        segs.emplace_back(Point{m.x - 2, m.y}, Point{-m.x + 2, m.y}, rung(i));
        if (i == 1) top = m.y + 1;
        if (i == n) bottom = m.y - 1;
    }
    for (int i = 1; i < n; ++i) {
        Point m = mid(left(2 * i), left(2 * i + 1));
        segs.emplace_back(Point{m.x - 3, m.y + 1}, Point{-1, m.y + 1}, spoke(1, i));
        segs.emplace_back(Point{-6, m.y + 3}, Point{6, m.y - 3}, spoke(2, i));
        segs.emplace_back(Point{1, m.y - 1}, Point{-m.x + 3, m.y - 1}, spoke(3, i));
    }
    segs.emplace_back(Point{Rational(1, 2), top}, Point{Rational(1, 2), bottom}, "l");

    b.intended = ordering_gadget_mandated(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (segments_intersect(b.family.segment(rung(i)), b.family.segment(rung(j))))
                b.intended.add_edge(rung(i), rung(j));
    for (auto& v : b.intended.vertices()) b.roles[v] = v;
    return b;
}

}  // namespace xsect
