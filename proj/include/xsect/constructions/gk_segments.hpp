#pragma once

#include "graph_h.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace xsect {

struct NestedLevel {
    int copy = 0;
    Rational scale;       // copy length / base length
    Similarity motion;    // base coordinates -> global coordinates
    Triangle triangle;    // triangle of a, b, c of this copy
    Rational longest;     // longest segment length of this copy
    std::map<std::string, std::string> labels;  // base label -> global label
};

struct NestedFamilyTrace {
    std::vector<NestedLevel> levels;
};

inline std::string copy_label(int copy, const std::string& label) { return std::to_string(copy) + "." + label; }

// k copies of the unit model; copy i+1 is scaled and moved so its a-segment
// becomes the z-segment of copy i, and the two are one object.
inline std::pair<ModelBundle, NestedFamilyTrace> gk_segments(int k, const Rational& C = 100) {
    if (k < 1) throw std::invalid_argument("gk_segments needs k >= 1");
    ModelBundle base = unit_model_h(C);
    const Segment& aa = base.family.segment("a");
    ModelBundle out;
    out.family.kind = FamilyKind::Segments;
    NestedFamilyTrace trace;

    Similarity motion;  // identity for copy 1
    for (int i = 1; i <= k; ++i) {
        NestedLevel lvl;
        lvl.copy = i;
        if (i > 1) {
            const auto& prev = trace.levels.back();
            const Segment& z = out.family.segment(prev.labels.at("s2_1"));
            motion = Similarity::mapping(aa.p, aa.q, z.p, z.q);
        }
        lvl.motion = motion;
        auto scale = exact_sqrt(motion.scale2());
        if (!scale) throw std::runtime_error("gk_segments: irrational scale");
        lvl.scale = *scale;
        for (auto& s : base.family.segments) {
            if (i > 1 && s.label == "a") {
                lvl.labels["a"] = trace.levels.back().labels.at("s2_1");
                continue;
            }
            Segment t = motion(s);
            t.label = copy_label(i, s.label);
            lvl.labels[s.label] = t.label;
            out.family.segments.push_back(t);
        }
        auto& f = out.family;
        Rational longest2 = 0;
        for (auto& [base_label, label] : lvl.labels) longest2 = std::max(longest2, f.segment(label).length2());
        lvl.longest = exact_sqrt(longest2).value();
        lvl.triangle = triangle_of(f.segment(lvl.labels["a"]), f.segment(lvl.labels["b"]), f.segment(lvl.labels["l1"]));
        trace.levels.push_back(lvl);
        std::string idx = "_" + std::to_string(i);
        out.roles["a" + idx] = lvl.labels["a"];
        out.roles["b" + idx] = lvl.labels["b"];
        out.roles["c" + idx] = lvl.labels["l1"];
        out.roles["z" + idx] = lvl.labels["s2_1"];
    }
    out.intended = intersection_graph(out.family);
    return {out, trace};
}

}  // namespace xsect
