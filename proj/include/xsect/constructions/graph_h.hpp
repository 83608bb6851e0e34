#pragma once

#include "../verification/verify.hpp"
#include "ordering_gadget.hpp"

#include <stdexcept>
#include <string>

namespace xsect {

namespace detail {

inline void add_h_edges(Graph& g) {
    for (auto* w : {"b", "l", "l1", "s1_1", "l2", "s3_2"}) g.add_edge("a", w);
    for (auto* w : {"a", "l", "l1", "s3_1", "l2", "s1_2"}) g.add_edge("b", w);
}

inline void set_h_roles(ModelBundle& b) {
    b.roles = {{"a", "a"}, {"b", "b"}, {"c", "l1"}, {"z", "s2_1"}, {"l", "l"},
               {"l2", "l2"}, {"s2_2", "s2_2"}, {"l3", "l3"}};
}

}  // namespace detail

// The ordering gadget for n = 3 plus two vertices a and b.
inline Graph graph_h() {
    Graph g = ordering_gadget(3).intended;
    detail::add_h_edges(g);
    return g;
}

inline ModelBundle segment_model_h() {
    ModelBundle b = ordering_gadget(3);
    auto line = [](Rational px, Rational py, Rational dx, Rational dy, Rational s0, Rational s1, std::string label) {
        return Segment{{px + s0 * dx, py + s0 * dy}, {px + s1 * dx, py + s1 * dy}, std::move(label)};
    };
    b.family.segments.push_back(line(-10, -99, 18, -83, Rational(-1, 2), 1, "a"));
    b.family.segments.push_back(line(10, -99, -18, -83, Rational(-1, 2), 1, "b"));
    b.intended = graph_h();
    detail::set_h_roles(b);
    return b;
}

namespace detail {

struct UnitPiece {
    const char* label;
    int cx, cy;  // center in thousandths
    int tp, tq;  // direction circle_point_at(tp/tq)
};

// Unit segments of H away from z. s1_1 and s3_1 end next to the point where
// z crosses l and are placed separately.
inline constexpr UnitPiece unit_layout[] = {
    {"l1", 242, 459, 15, 73},     {"l2", 195, -224, 2, 71},     {"l3", 282, -799, -29, 98},
    {"s1_2", -432, -672, 32, 93}, {"s2_2", 245, -704, -26, 81}, {"s3_2", 511, -724, -13, 81},
    {"c1", 399, 593, 13, 73},     {"c2", 138, 535, 8, 23},      {"c3", -222, 298, 74, 95},
    {"c4", -413, 4, -59, 95},     {"c5", -415, -152, -27, 56},  {"c6", 215, -833, -20, 51},
    {"c7", 210, -983, -20, 99},   {"c8", 568, -1310, 60, 89},   {"c9", 737, -1140, 99, 100},
    {"c10", 677, -268, -33, 38},  {"c11", 653, 58, -39, 53},    {"c12", 720, 472, -7, 89},
    {"a", 9, -183, -65, 97},      {"b", 100, 41, 43, 63},
};

inline ModelBundle unit_model_h_at(const Rational& eps) {
    ModelBundle b;
    b.family.kind = FamilyKind::Segments;
    auto& segs = b.family.segments;
    for (auto& u : unit_layout) {
        Point c{Rational(u.cx, 1000), Rational(u.cy, 1000)};
        Point h = Rational(1, 2) * circle_point_at(Rational(u.tp, u.tq));
        segs.emplace_back(c - h, c + h, u.label);
    }
    Point tip1{-eps, 2 * eps}, tip3{eps, -2 * eps};
    segs.emplace_back(tip1 - circle_point_at(Rational(-25, 73)), tip1, "s1_1");
    segs.emplace_back(tip3 + circle_point_at(Rational(4, 19)), tip3, "s3_1");
    segs.emplace_back(Point{3 * eps, -4 * eps}, Point{-3 * eps, 4 * eps}, "s2_1");
    segs.emplace_back(Point{0, Rational(-3, 25) + Rational(1, 2)}, Point{0, Rational(-3, 25) - Rational(1, 2)}, "l");
    b.intended = graph_h();
    set_h_roles(b);
    return b;
}

}  // namespace detail

inline Report verify_unit_model_h(const ModelBundle& b, const Rational& C) {
    Report r = verify_model(b);
    r.merge(verify_triangle_containment(b));
    r.merge(verify_lengths(b.family, {b.role("z")}));
    r.merge(verify_c_margin(b, C));
    r.merge(verify_radius(b.family, 20));
    return r;
}

// Every segment but z has length 1; z is shrunk until it is C times closer
// to itself than to a, b and c.
inline ModelBundle unit_model_h(const Rational& C) {
    if (C < 1) throw std::invalid_argument("unit_model_h needs C >= 1");
    Rational eps(1, 100);
    for (int i = 0; i < 64; ++i, eps /= 2) {
        ModelBundle b = detail::unit_model_h_at(eps);
        if (verify_unit_model_h(b, C).summary()) return b;
    }
    throw std::runtime_error("unit_model_h: no admissible z for C = " + to_string(C));
}

}  // namespace xsect
