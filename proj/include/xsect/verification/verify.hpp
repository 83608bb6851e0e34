#pragma once

#include "../family.hpp"
#include "../isomorphism.hpp"
#include "report.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace xsect {

inline std::string fmt(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }
inline std::string fmt(const Segment& s) { return s.label + "[" + fmt(s.p) + "-" + fmt(s.q) + "]"; }
inline std::string fmt(const Disk& d) { return d.label + "[" + fmt(d.center) + " r=" + to_string(d.radius) + "]"; }

// Labeled difference between two graphs on the same labels.
inline std::string graph_difference(const Graph& realized, const Graph& intended) {
    std::string out;
    int shown = 0;
    for (auto& [u, v] : intended.edges())
        if (!realized.has_edge(u, v) && shown++ < 8) out += "missing edge " + u + "-" + v + "; ";
    for (auto& [u, v] : realized.edges())
        if (!intended.has_edge(u, v) && shown++ < 8) out += "extra edge " + u + "-" + v + "; ";
    for (auto& v : intended.vertices())
        if (!realized.has_vertex(v) && shown++ < 8) out += "missing object " + v + "; ";
    if (out.empty()) out = "no isomorphism";
    return out;
}

inline Report check_isomorphism(const ModelBundle& b) {
    Report r;
    Graph realized;
    try {
        realized = intersection_graph(b.family);
    } catch (const std::exception& e) {
        r.add("isomorphism", false, e.what());
        return r;
    }
    VertexMap anchors;
    for (auto& [name, label] : b.roles) {
        if (!realized.has_vertex(label) || !b.intended.has_vertex(label)) {
            r.add("roles", false, "role " + name + " -> '" + label + "' missing from family or graph");
            return r;
        }
        anchors[label] = label;
    }
    r.add("roles", true);
    bool iso = is_isomorphic(realized, b.intended, anchors);
    r.add("isomorphism", iso, iso ? "" : graph_difference(realized, b.intended));
    return r;
}

inline Report check_no_touch(const ObjectFamily& f) {
    Report r;
    std::string witness;
    std::size_t n = f.size();
    for (std::size_t i = 0; i < n && witness.empty(); ++i)
        for (std::size_t j = i + 1; j < n && witness.empty(); ++j) {
            switch (f.kind) {
                case FamilyKind::Disks:
                    if (disks_tangent(f.disks[i], f.disks[j]))
                        witness = "tangent " + fmt(f.disks[i]) + " " + fmt(f.disks[j]);
                    break;
                case FamilyKind::Polylines:
                    if (polylines_touch(f.polylines[i], f.polylines[j]))
                        witness = "touch " + f.polylines[i].label + " " + f.polylines[j].label;
                    break;
                default:
                    if (segments_cross(f.segments[i], f.segments[j]) == CrossKind::Touch)
                        witness = "touch " + fmt(f.segments[i]) + " " + fmt(f.segments[j]);
            }
        }
    r.add("no-touch", witness.empty(), witness);
    return r;
}

inline Report check_ground_incidence(const ObjectFamily& f) {
    Report r;
    if (f.kind != FamilyKind::Chords && f.kind != FamilyKind::Polylines) return r;
    if (!f.ground) {
        r.add("ground-incidence", false, "no ground circle");
        return r;
    }
    const Circle& c = *f.ground;
    std::string witness;
    if (f.kind == FamilyKind::Chords) {
        for (auto& s : f.segments) {
            for (auto* p : {&s.p, &s.q})
                if (circle_side(c, *p) != 0 && witness.empty()) witness = s.label + " endpoint " + fmt(*p) + " off circle";
        }
    } else {
        for (auto& pl : f.polylines) {
            auto& v = pl.vertices;
            int on_first = circle_side(c, v.front()) == 0, on_last = circle_side(c, v.back()) == 0;
            if (on_first + on_last != 1 && witness.empty())
                witness = pl.label + " has " + std::to_string(on_first + on_last) + " endpoints on the circle";
            for (std::size_t i = 0; i < v.size() && witness.empty(); ++i) {
                bool end_on = (i == 0 && on_first) || (i + 1 == v.size() && on_last);
                if (!end_on && circle_side(c, v[i]) >= 0)
                    witness = pl.label + " vertex " + fmt(v[i]) + " not strictly inside";
            }
        }
    }
    r.add("ground-incidence", witness.empty(), witness);
    return r;
}

inline Report verify_model(const ModelBundle& b) {
    Report r = check_isomorphism(b);
    r.merge(check_no_touch(b.family));
    r.merge(check_ground_incidence(b.family));
    return r;
}

enum class OrderResult { Forward, Reverse, Violated };

inline const char* to_string(OrderResult o) {
    switch (o) {
        case OrderResult::Forward: return "Forward";
        case OrderResult::Reverse: return "Reverse";
        default: return "Violated";
    }
}

// Order in which the listed segments cross `line_label`, compared with `order`.
inline OrderResult verify_crossing_order(const ObjectFamily& f, const std::string& line_label,
                                         const std::vector<std::string>& order) {
    const Segment& l = f.segment(line_label);
    std::vector<std::pair<Rational, std::string>> hits;
    for (auto& name : order) {
        const Segment& s = f.segment(name);
        if (segments_cross(l, s) != CrossKind::ProperCross)
            throw std::invalid_argument("'" + name + "' does not cross '" + line_label + "'");
        hits.emplace_back(crossing_parameter(l, s), name);
    }
    std::sort(hits.begin(), hits.end());
    for (std::size_t i = 0; i + 1 < hits.size(); ++i)
        if (hits[i].first == hits[i + 1].first) return OrderResult::Violated;
    std::vector<std::string> got;
    for (auto& h : hits) got.push_back(h.second);
    if (got == order) return OrderResult::Forward;
    std::reverse(got.begin(), got.end());
    if (got == order) return OrderResult::Reverse;
    return OrderResult::Violated;
}

inline Report verify_triangle_containment(const ModelBundle& b) {
    for (auto* role : {"a", "b", "c", "z"})
        if (!b.has_role(role)) throw std::invalid_argument(std::string("missing role '") + role + "'");
    Report r;
    const auto& f = b.family;
    Triangle t;
    try {
        t = triangle_of(f.segment(b.role("a")), f.segment(b.role("b")), f.segment(b.role("c")));
    } catch (const std::exception& e) {
        r.add("triangle", false, e.what());
        return r;
    }
    const Segment& z = f.segment(b.role("z"));
    std::string witness;
    for (auto* p : {&z.p, &z.q})
        if (!point_in_triangle(*p, t) && witness.empty())
            witness = "endpoint " + fmt(*p) + " of " + z.label + " outside triangle " + fmt(t.corners[0]) + " " +
                      fmt(t.corners[1]) + " " + fmt(t.corners[2]);
    r.add("triangle-containment", witness.empty(), witness);
    return r;
}

// Every segment except those listed has squared length exactly `len2`.
inline Report verify_lengths(const ObjectFamily& f, const std::vector<std::string>& except, const Rational& len2 = 1) {
    Report r;
    std::string witness;
    for (auto& s : f.segments)
        if (std::find(except.begin(), except.end(), s.label) == except.end() && s.length2() != len2 && witness.empty())
            witness = s.label + " has squared length " + to_string(s.length2());
    r.add("unit-lengths", witness.empty(), witness);
    return r;
}

// Squared distance from z to a, b and c is at least C^2 |z|^2.
inline Report verify_c_margin(const ModelBundle& b, const Rational& C) {
    Report r;
    const auto& f = b.family;
    const Segment& z = f.segment(b.role("z"));
    Rational need = C * C * z.length2();
    std::string witness;
    for (auto* role : {"a", "b", "c"}) {
        Rational d = segment_distance2(z, f.segment(b.role(role)));
        if (d < need && witness.empty())
            witness = std::string("squared distance to ") + role + " is " + to_string(d) + " < " + to_string(need);
    }
    r.add("c-margin", witness.empty(), witness);
    return r;
}

// All segments inside the closed disk of the given radius about the origin.
inline Report verify_radius(const ObjectFamily& f, const Rational& radius) {
    Report r;
    std::string witness;
    for (auto& s : f.segments)
        for (auto* p : {&s.p, &s.q})
            if (norm2(*p) > radius * radius && witness.empty()) witness = s.label + " endpoint " + fmt(*p);
    r.add("radius", witness.empty(), witness);
    return r;
}

}  // namespace xsect
