#pragma once

#include "geometry.hpp"
#include "graph.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace xsect {

enum class FamilyKind { Segments, Disks, Polylines, Chords };

inline const char* to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::Segments: return "segments";
        case FamilyKind::Disks: return "disks";
        case FamilyKind::Polylines: return "polylines";
        default: return "chords";
    }
}

inline std::optional<FamilyKind> parse_kind(const std::string& s) {
    if (s == "segments") return FamilyKind::Segments;
    if (s == "disks") return FamilyKind::Disks;
    if (s == "polylines") return FamilyKind::Polylines;
    if (s == "chords") return FamilyKind::Chords;
    return std::nullopt;
}

// Segments are used for both the segments and chords kinds.
struct ObjectFamily {
    FamilyKind kind = FamilyKind::Segments;
    std::vector<Segment> segments;
    std::vector<Disk> disks;
    std::vector<Polyline> polylines;
    std::optional<Circle> ground;

    std::size_t size() const {
        switch (kind) {
            case FamilyKind::Disks: return disks.size();
            case FamilyKind::Polylines: return polylines.size();
            default: return segments.size();
        }
    }

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        switch (kind) {
            case FamilyKind::Disks:
                for (auto& d : disks) out.push_back(d.label);
                break;
            case FamilyKind::Polylines:
                for (auto& p : polylines) out.push_back(p.label);
                break;
            default:
                for (auto& s : segments) out.push_back(s.label);
        }
        return out;
    }

    const Segment& segment(const std::string& label) const {
        for (auto& s : segments)
            if (s.label == label) return s;
        throw std::out_of_range("no segment '" + label + "'");
    }
    Segment& segment(const std::string& label) {
        for (auto& s : segments)
            if (s.label == label) return s;
        throw std::out_of_range("no segment '" + label + "'");
    }
    const Disk& disk(const std::string& label) const {
        for (auto& d : disks)
            if (d.label == label) return d;
        throw std::out_of_range("no disk '" + label + "'");
    }

    bool operator==(const ObjectFamily&) const = default;
};

struct ModelBundle {
    ObjectFamily family;
    Graph intended;
    std::map<std::string, std::string> roles;

    std::string role(const std::string& name) const {
        auto it = roles.find(name);
        if (it == roles.end()) throw std::out_of_range("missing role '" + name + "'");
        return it->second;
    }
    bool has_role(const std::string& name) const { return roles.count(name) != 0; }

    bool operator==(const ModelBundle&) const = default;
};

// Whether a point lies on, strictly inside, or outside a circle.
inline int circle_side(const Circle& c, const Point& p) {
    Rational d = norm2(p - c.center), r = c.radius * c.radius;
    return d < r ? -1 : (d == r ? 0 : 1);
}

inline bool polylines_intersect(const Polyline& a, const Polyline& b) {
    for (std::size_t i = 0; i < a.pieces(); ++i)
        for (std::size_t j = 0; j < b.pieces(); ++j)
            if (segments_intersect(a.piece(i), b.piece(j))) return true;
    return false;
}

// Any Touch contact between two polylines (an intersection that is not a proper crossing of pieces).
inline bool polylines_touch(const Polyline& a, const Polyline& b) {
    for (std::size_t i = 0; i < a.pieces(); ++i)
        for (std::size_t j = 0; j < b.pieces(); ++j)
            if (segments_cross(a.piece(i), b.piece(j)) == CrossKind::Touch) return true;
    return false;
}

inline bool polyline_self_intersects(const Polyline& p) {
    for (std::size_t i = 0; i < p.pieces(); ++i)
        for (std::size_t j = i + 1; j < p.pieces(); ++j) {
            Segment a = p.piece(i), b = p.piece(j);
            if (j == i + 1) {
                // consecutive pieces share a vertex; anything more is an overlap
                if (orientation(a.p, a.q, b.q) == Orientation::Collinear && dot(a.direction(), b.direction()) < 0)
                    return true;
            } else if (segments_intersect(a, b)) {
                return true;
            }
        }
    return false;
}

inline Graph intersection_graph(const ObjectFamily& f) {
    Graph g;
    auto labels = f.labels();
    std::set<std::string> seen;
    for (auto& l : labels) {
        if (!seen.insert(l).second) throw std::invalid_argument("duplicate label '" + l + "'");
        g.add_vertex(l);
    }
    std::size_t n = labels.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool hit = false;
            switch (f.kind) {
                case FamilyKind::Disks: hit = disks_intersect(f.disks[i], f.disks[j]); break;
                case FamilyKind::Polylines: hit = polylines_intersect(f.polylines[i], f.polylines[j]); break;
                default: hit = segments_intersect(f.segments[i], f.segments[j]);
            }
            if (hit) g.add_edge(labels[i], labels[j]);
        }
    return g;
}

}  // namespace xsect
