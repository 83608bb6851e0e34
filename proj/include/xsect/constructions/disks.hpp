#pragma once

#include "../family.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace xsect {

namespace detail {

// Rational unit vectors near 0, 62, 118, 180, 242 and 298 degrees.
inline std::array<Point, 6> hexagonal_directions() {
    Rational c(8, 17), s(15, 17);
    return {Point{1, 0}, Point{c, s}, Point{-c, s}, Point{-1, 0}, Point{-c, -s}, Point{c, -s}};
}

// Rational unit vectors near -75, -45, -15, 15, 45 and 75 degrees.
inline std::array<Point, 6> fan_directions() {
    return {circle_point_at(Rational(-23, 30)), circle_point_at(Rational(-12, 29)), circle_point_at(Rational(-2, 15)),
            circle_point_at(Rational(2, 15)),   circle_point_at(Rational(12, 29)),  circle_point_at(Rational(23, 30))};
}

inline Point rotate(const Point& u, const Point& v) { return {u.x * v.x - u.y * v.y, u.x * v.y + u.y * v.x}; }

}  // namespace detail

// K_{1,6}: a disk of radius 3 and six unit disks at center distance 7/2.
inline ModelBundle k16_disk_model() {
    ModelBundle b;
    b.family.kind = FamilyKind::Disks;
    b.family.disks.emplace_back(Point{0, 0}, Rational(3), "D");
    b.intended.add_vertex("D");
    b.roles["center"] = "D";
    int i = 1;
    for (auto& u : detail::hexagonal_directions()) {
        std::string label = "D" + std::to_string(i++);
        b.family.disks.emplace_back(Rational(7, 2) * u, Rational(1), label);
        b.intended.add_edge("D", label);
    }
    return b;
}

// Rooted 6-ary tree with k levels; level j has radius 3, 1, 1/5, 1/25, ...
inline ModelBundle gk_disks(int k) {
    if (k < 2) throw std::invalid_argument("gk_disks needs k >= 2");
    ModelBundle b;
    b.family.kind = FamilyKind::Disks;
    b.family.disks.emplace_back(Point{0, 0}, Rational(3), "r");
    b.intended.add_vertex("r");
    b.roles["root"] = "r";

    struct Node {
        std::string label;
        Point center, dir;
        Rational radius;
    };
    std::vector<Node> frontier;
    auto hex = detail::hexagonal_directions();
    for (int m = 0; m < 6; ++m) {
        Node c{"r." + std::to_string(m + 1), Rational(7, 2) * hex[m], hex[m], Rational(1)};
        b.family.disks.emplace_back(c.center, c.radius, c.label);
        b.intended.add_edge("r", c.label);
        b.roles["center_" + std::to_string(m + 1)] = c.label;
        frontier.push_back(c);
    }
    auto fan = detail::fan_directions();
    for (int level = 3; level <= k; ++level) {
        std::vector<Node> next;
        for (auto& p : frontier)
            for (int m = 0; m < 6; ++m) {
                Point d = detail::rotate(p.dir, fan[m]);
                Node c{p.label + "." + std::to_string(m + 1), p.center + Rational(11, 10) * p.radius * d, d,
                       p.radius / 5};
                b.family.disks.emplace_back(c.center, c.radius, c.label);
                b.intended.add_edge(p.label, c.label);
                next.push_back(std::move(c));
            }
        frontier = std::move(next);
    }
    return b;
}

}  // namespace xsect
