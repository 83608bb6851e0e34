#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace xsect;

namespace {

void expect_verified(const ModelBundle& b) {
    auto r = verify_model(b);
    EXPECT_TRUE(r.summary()) << r;
}

std::vector<std::string> copy_labels(const NestedLevel& lvl) {
    std::vector<std::string> out;
    for (auto& [base, label] : lvl.labels) out.push_back(label);
    return out;
}

}  // namespace

TEST(CircleModel, Triangle) {
    auto b = circle_model_of_subdivision(complete_graph(3));
    EXPECT_EQ(b.family.kind, FamilyKind::Chords);
    EXPECT_EQ(b.family.segments.size(), 6u);
    auto g = intersection_graph(b.family);
    EXPECT_TRUE(is_isomorphic(g, cycle_graph(6)));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            EXPECT_FALSE(g.has_edge("v" + std::to_string(i), "v" + std::to_string(j)));
    expect_verified(b);
}

TEST(CircleModel, SingleEdge) {
    Graph e{{"x", "y"}, {{"x", "y"}}};
    auto b = circle_model_of_subdivision(e);
    ASSERT_EQ(b.family.segments.size(), 3u);
    auto g = intersection_graph(b.family);
    EXPECT_TRUE(g.has_edge("x", subdivision_label("x", "y")));
    EXPECT_TRUE(g.has_edge("y", subdivision_label("x", "y")));
    EXPECT_FALSE(g.has_edge("x", "y"));
    for (auto& s : b.family.segments) {
        EXPECT_EQ(norm2(s.p), 1);
        EXPECT_EQ(norm2(s.q), 1);
    }
}

TEST(CircleModel, K4Fails) {
    try {
        circle_model_of_subdivision(complete_graph(4));
        FAIL() << "expected NotOuterplanar";
    } catch (const NotOuterplanar& e) {
        EXPECT_EQ(e.result.witness_kind, WitnessKind::K4Subdivision);
        EXPECT_EQ(e.result.witness.num_edges(), 6u);
    }
}

TEST(CircleModel, OuterplanarCorpusUpToSix) {
    auto op = oracle::outerplanar_graphs(6);
    for (int n = 1; n <= 6; ++n)
        for (auto& s : op[n]) {
            auto g = s.graph();
            auto b = circle_model_of_subdivision(g);
            auto r = verify_model(b);
            ASSERT_TRUE(r.summary()) << r;
        }
}

TEST(K4Subdivision, SegmentModel) {
    auto [g, f] = k4_subdivision_example();
    EXPECT_EQ(g.num_vertices(), 10u);
    EXPECT_EQ(g.num_edges(), 12u);
    EXPECT_TRUE(is_isomorphic(g, one_subdivision(complete_graph(4))));
    EXPECT_EQ(f.segments.size(), 10u);
    EXPECT_TRUE(is_isomorphic(intersection_graph(f), g));
    EXPECT_FALSE(is_outerplanar(complete_graph(4)).outerplanar);
}

TEST(OrderingGadget, Counts) {
    for (int n = 2; n <= 5; ++n) {
        auto b = ordering_gadget(n);
        EXPECT_EQ(b.family.segments.size(), static_cast<std::size_t>(1 + n + 3 * (n - 1) + 4 * n));
    }
    EXPECT_EQ(ordering_gadget(3).family.segments.size(), 22u);
    EXPECT_EQ(ordering_gadget_mandated(3).num_edges(), 31u);
    EXPECT_THROW(ordering_gadget(1), std::invalid_argument);
}

TEST(OrderingGadget, ConditionsAndOrder) {
    for (int n = 2; n <= 4; ++n) {
        auto b = ordering_gadget(n);
        expect_verified(b);
        // realized graph = mandated edges plus rung-rung crossings only
        auto g = intersection_graph(b.family);
        auto m = ordering_gadget_mandated(n);
        for (auto& [u, v] : m.edges()) EXPECT_TRUE(g.has_edge(u, v)) << u << "-" << v;
        for (auto& [u, v] : g.edges())
            if (!m.has_edge(u, v)) EXPECT_TRUE(u[0] == 'l' && v[0] == 'l' && u != "l" && v != "l") << u << "-" << v;
        std::vector<std::string> order;
        for (int i = 1; i <= n; ++i) order.push_back(rung(i));
        auto res = verify_crossing_order(b.family, "l", order);
        EXPECT_NE(res, OrderResult::Violated);
        if (n < 3) continue;
        std::swap(order[0], order[1]);
        EXPECT_EQ(verify_crossing_order(b.family, "l", order), OrderResult::Violated);
    }
}

TEST(GraphH, Structure) {
    auto h = graph_h();
    EXPECT_EQ(h.num_vertices(), 24u);
    EXPECT_TRUE(h.has_edge("a", "b"));
    EXPECT_TRUE(h.has_edge("a", "l1"));
    EXPECT_TRUE(h.has_edge("b", "l1"));
    EXPECT_EQ(h.degree("a"), 6u);
    EXPECT_EQ(h.neighbors("a"), (std::set<std::string>{"b", "l", "l1", "s1_1", "l2", "s3_2"}));
    EXPECT_EQ(h.neighbors("b"), (std::set<std::string>{"a", "l", "l1", "s3_1", "l2", "s1_2"}));
}

TEST(GraphH, SegmentModel) {
    auto b = segment_model_h();
    expect_verified(b);
    EXPECT_TRUE(is_isomorphic(intersection_graph(b.family), graph_h(),
                              {{"a", "a"}, {"b", "b"}, {"l1", "l1"}, {"s2_1", "s2_1"}}));
    auto t = triangle_of(b.family.segment("a"), b.family.segment("b"), b.family.segment("l1"));
    EXPECT_TRUE(segment_in_triangle(b.family.segment("s2_1"), t));
    EXPECT_TRUE(verify_triangle_containment(b).summary());
    auto res = verify_crossing_order(b.family, "l", {"l1", "s2_1", "l2", "s2_2", "l3"});
    EXPECT_NE(res, OrderResult::Violated);
    EXPECT_EQ(verify_crossing_order(b.family, "l", {"s2_1", "l1", "l2", "s2_2", "l3"}), OrderResult::Violated);
}

TEST(UnitModelH, PostConditions) {
    Rational zlen[2];
    int i = 0;
    for (Rational c : {Rational(1), Rational(100)}) {
        auto b = unit_model_h(c);
        auto r = verify_unit_model_h(b, c);
        EXPECT_TRUE(r.summary()) << r;
        for (auto& s : b.family.segments)
            if (s.label != b.role("z")) EXPECT_EQ(s.length2(), 1) << s.label;
        zlen[i++] = b.family.segment(b.role("z")).length2();
    }
    EXPECT_LT(zlen[1], zlen[0]);
    EXPECT_THROW(unit_model_h(Rational(1, 2)), std::invalid_argument);
}

TEST(GkSegments, LengthsAndNesting) {
    for (int k = 1; k <= 3; ++k) {
        auto [b, trace] = gk_segments(k);
        ASSERT_EQ(trace.levels.size(), static_cast<std::size_t>(k));
        EXPECT_EQ(count_segment_lengths(b.family), static_cast<std::size_t>(k + 1));
        expect_verified(b);
        for (int i = 0; i + 1 < k; ++i) {
            auto& lo = trace.levels[i];
            auto& hi = trace.levels[i + 1];
            EXPECT_GT(lo.scale, hi.scale);
            EXPECT_GT(lo.longest, hi.longest);
            for (auto& label : copy_labels(hi)) {
                const Segment& s = b.family.segment(label);
                EXPECT_TRUE(segment_in_triangle(s, lo.triangle)) << label;
                for (auto* role : {"a", "b", "l1"})
                    EXPECT_EQ(segments_cross(s, b.family.segment(lo.labels.at(role))), CrossKind::Disjoint)
                        << label << " meets " << lo.labels.at(role);
            }
            // the shared object
            EXPECT_EQ(hi.labels.at("a"), lo.labels.at("s2_1"));
        }
    }
    EXPECT_THROW(gk_segments(0), std::invalid_argument);
}

TEST(GkSegments, OneCopyIsUnitModel) {
    auto [b, trace] = gk_segments(1);
    auto u = unit_model_h(100);
    ASSERT_EQ(b.family.segments.size(), u.family.segments.size());
    EXPECT_TRUE(is_isomorphic(b.intended, u.intended));
    EXPECT_EQ(trace.levels[0].scale, 1);
}

TEST(Disks, K16) {
    auto b = k16_disk_model();
    EXPECT_EQ(b.family.disks.size(), 7u);
    EXPECT_EQ(count_disk_sizes(b.family), 2u);
    EXPECT_TRUE(is_isomorphic(intersection_graph(b.family), star_graph(6)));
    expect_verified(b);
    auto& c = b.family.disk("D");
    for (auto& d : b.family.disks) {
        if (d.label == "D") continue;
        EXPECT_EQ(norm2(d.center - c.center), Rational(49, 4));
        EXPECT_TRUE(disks_overlap_strictly(c, d));
    }
}

TEST(Disks, Trees) {
    std::size_t expect_n[] = {0, 0, 7, 43, 259};
    for (int k = 2; k <= 4; ++k) {
        auto b = gk_disks(k);
        EXPECT_EQ(b.family.disks.size(), expect_n[k]);
        EXPECT_EQ(count_disk_sizes(b.family), static_cast<std::size_t>(k));
        auto g = intersection_graph(b.family);
        EXPECT_EQ(g.num_edges(), g.num_vertices() - 1);
        EXPECT_EQ(g.degree("r"), 6u);
        for (auto& v : g.vertices()) {
            std::size_t depth = std::count(v.begin(), v.end(), '.');
            std::size_t want = v == "r" ? 6 : depth + 1 == static_cast<std::size_t>(k) ? 1 : 7;
            EXPECT_EQ(g.degree(v), want) << v;
        }
        expect_verified(b);
    }
    EXPECT_THROW(gk_disks(1), std::invalid_argument);
}

TEST(Powerset, Models) {
    for (int k = 1; k <= 4; ++k) {
        auto b = outer_string_model_powerset(k);
        EXPECT_EQ(b.family.polylines.size(), static_cast<std::size_t>(k + (1 << k)));
        expect_verified(b);
        EXPECT_TRUE(is_isomorphic(intersection_graph(b.family), powerset_graph(k)));
    }
    auto g = intersection_graph(outer_string_model_powerset(3).family);
    EXPECT_EQ(distinct_neighborhoods(g, {"1", "2", "3"}).size(), 8u);
}
