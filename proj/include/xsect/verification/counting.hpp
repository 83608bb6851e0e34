#pragma once

#include "../family.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace xsect {

inline std::size_t count_segment_lengths(const ObjectFamily& f) {
    if (f.kind != FamilyKind::Segments && f.kind != FamilyKind::Chords)
        throw std::invalid_argument("count_segment_lengths needs a segment family");
    std::set<Rational> lengths;
    for (auto& s : f.segments) lengths.insert(s.length2());
    return lengths.size();
}

inline std::size_t count_disk_sizes(const ObjectFamily& f) {
    if (f.kind != FamilyKind::Disks) throw std::invalid_argument("count_disk_sizes needs a disk family");
    std::set<Rational> radii;
    for (auto& d : f.disks) radii.insert(d.radius);
    return radii.size();
}

namespace detail {
// Angular order of nonzero vectors, starting at the positive x-axis.
inline bool angle_less(const Point& a, const Point& b) {
    auto half = [](const Point& p) { return p.y < 0 || (p.y == 0 && p.x < 0); };
    bool ha = half(a), hb = half(b);
    if (ha != hb) return hb;
    return cross(a, b) > 0;
}
}  // namespace detail

// Six disks of the central radius, each meeting the central disk: two of
// them must meet. Returns such a pair (indices into `satellites`).
inline std::pair<int, int> kissing_check(const Disk& central, const std::vector<Disk>& satellites) {
    if (satellites.size() != 6) throw std::invalid_argument("kissing_check needs six satellites");
    for (auto& s : satellites) {
        if (s.radius != central.radius) throw std::invalid_argument("satellite radius differs from central radius");
        if (!disks_intersect(s, central)) throw std::invalid_argument("satellite '" + s.label + "' misses the central disk");
    }
    std::vector<int> idx;
    for (int i = 0; i < 6; ++i) {
        if (satellites[i].center == central.center) return {i, i == 0 ? 1 : 0};
        idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return detail::angle_less(satellites[a].center - central.center, satellites[b].center - central.center);
    });
    // some cyclically adjacent pair spans at most 60 degrees
    for (int k = 0; k < 6; ++k) {
        int i = idx[k], j = idx[(k + 1) % 6];
        if (disks_intersect(satellites[i], satellites[j])) return {std::min(i, j), std::max(i, j)};
    }
    throw std::logic_error("kissing_check: no intersecting pair");
}

}  // namespace xsect
