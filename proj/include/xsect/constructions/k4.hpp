#pragma once

#include "../family.hpp"

#include <utility>

namespace xsect {

// Segment model of the 1-subdivision of K4 on vertices A, B, C, D.
// Vertex segments are short bars near the corners of a triangle; each edge
// vertex is a segment joining the two bars it subdivides.
inline std::pair<Graph, ObjectFamily> k4_subdivision_example() {
    Graph k4{{"A", "B", "C", "D"}, {{"A", "B"}, {"A", "C"}, {"A", "D"}, {"B", "C"}, {"B", "D"}, {"C", "D"}}};
    Graph g = one_subdivision(k4);
    ObjectFamily f;
    f.kind = FamilyKind::Segments;
    auto seg = [&](long long x1, long long y1, long long x2, long long y2, std::string label) {
        f.segments.emplace_back(Point{x1, y1}, Point{x2, y2}, std::move(label));
    };
    seg(4, -1, 0, 5, "A");
    seg(16, -1, 20, 5, "B");
    seg(6, 16, 14, 16, "C");
    seg(5, 6, 15, 6, "D");
    seg(2, 0, 18, 0, subdivision_label("A", "B"));
    seg(1, 2, 9, 18, subdivision_label("A", "C"));
    seg(6, 7, 2, 1, subdivision_label("A", "D"));
    seg(19, 2, 11, 18, subdivision_label("B", "C"));
    seg(14, 7, 18, 1, subdivision_label("B", "D"));
    seg(10, 5, 10, 17, subdivision_label("C", "D"));
    return {g, f};
}

}  // namespace xsect
