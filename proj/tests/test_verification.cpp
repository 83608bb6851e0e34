#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace xsect;

TEST(Report, Format) {
    Report r;
    r.add("one", true, "ignored");
    r.add("two", false, "x = 1/3", "why");
    EXPECT_FALSE(r.summary());
    EXPECT_EQ(r.find("one")->witness, "");
    EXPECT_EQ(r.str(), "check one PASS\ncheck two FAIL (why) : x = 1/3\nsummary FAIL\n");
    Report empty;
    EXPECT_TRUE(empty.summary());
}

TEST(VerifyModel, Deterministic) {
    auto b = segment_model_h();
    auto r1 = verify_model(b).str(), r2 = verify_model(b).str();
    EXPECT_EQ(r1, r2);
    EXPECT_EQ(verify_model(parse_model(serialize_model(b))).str(), r1);
}

TEST(Mutation, ShortenedSegmentLosesEdge) {
    auto b = segment_model_h();
    auto& s = b.family.segment("a");
    // cut a down to a tiny piece near its first endpoint
    s = Segment(s.p, s.p + Rational(1, 1000) * s.direction(), "a");
    auto r = verify_model(b);
    EXPECT_FALSE(r.summary());
    EXPECT_NE(r.find("isomorphism")->witness.find("missing edge a-"), std::string::npos) << r;
}

TEST(Mutation, ChordOffCircle) {
    auto b = circle_model_of_subdivision(cycle_graph(4));
    auto& s = b.family.segments[0];
    s = Segment(Rational(99, 100) * s.p, s.q, s.label);
    auto r = verify_model(b);
    EXPECT_FALSE(r.summary());
    EXPECT_FALSE(r.find("ground-incidence")->pass);
    EXPECT_NE(r.find("ground-incidence")->witness.find(s.label), std::string::npos);
}

TEST(Mutation, ZTranslatedOutOfTriangle) {
    auto b = segment_model_h();
    auto& z = b.family.segment("s2_1");
    Point d{0, 1000};
    z = Segment(z.p + d, z.q + d, "s2_1");
    auto r = verify_triangle_containment(b);
    EXPECT_FALSE(r.summary());
    EXPECT_NE(r.find("triangle-containment")->witness.find("endpoint"), std::string::npos);
    EXPECT_THROW(verify_triangle_containment(ModelBundle{}), std::invalid_argument);
}

TEST(Mutation, TouchIsReported) {
    ObjectFamily f;
    f.segments = {Segment({0, 0}, {2, 0}, "s"), Segment({1, 0}, {1, 1}, "t")};
    ModelBundle b{f, intersection_graph(f), {}};
    auto r = verify_model(b);
    EXPECT_FALSE(r.find("no-touch")->pass);
    ObjectFamily d;
    d.kind = FamilyKind::Disks;
    d.disks = {Disk({0, 0}, 1, "p"), Disk({2, 0}, 1, "q")};
    EXPECT_FALSE(check_no_touch(d).summary());
}

// Fixed coordinate perturbations that change the pattern must be caught.
TEST(Mutation, SmokeSuite) {
    std::vector<ModelBundle> shipped{ordering_gadget(3), segment_model_h(), unit_model_h(1), k16_disk_model(),
                                     outer_string_model_powerset(2)};
    for (auto& base : shipped) {
        ASSERT_TRUE(verify_model(base).summary());
        int flipped = 0, tried = 0;
        for (std::size_t i = 0; i < base.family.size(); ++i) {
            ModelBundle m = base;
            auto& f = m.family;
            if (f.kind == FamilyKind::Disks) {
                auto& d = f.disks[i];
                d = Disk(d.center, d.radius * 3, d.label);
            } else if (f.kind == FamilyKind::Polylines) {
                auto v = f.polylines[i].vertices;
                v.back() = v.back() + Point{0, Rational(-1, 2)};
                f.polylines[i] = Polyline(v, f.polylines[i].label);
            } else {
                auto& s = f.segments[i];
                s = Segment(s.p, s.p + Rational(1, 100) * s.direction(), s.label);
            }
            auto realized = intersection_graph(f);
            if (realized == base.intended) continue;
            ++tried;
            flipped += !verify_model(m).summary();
        }
        EXPECT_GT(tried, 0);
        EXPECT_EQ(flipped, tried);
    }
}

TEST(Counting, Examples) {
    ObjectFamily f;
    f.segments = {Segment({0, 0}, {3, 4}, "s")};
    EXPECT_EQ(count_segment_lengths(f), 1u);
    f.segments.push_back(Segment({0, 1}, {5, 1}, "t"));
    EXPECT_EQ(count_segment_lengths(f), 1u);
    EXPECT_THROW(count_disk_sizes(f), std::invalid_argument);
}

TEST(Kissing, NearUniformDirections) {
    Disk c({0, 0}, 1, "c");
    std::vector<Disk> sat;
    for (Rational t : {Rational(0), Rational(4, 7), Rational(7, 4), Rational(-7, 4), Rational(-4, 7), Rational(1000)}) {
        Point u = circle_point_at(t);
        sat.emplace_back(2 * u, 1, "s");
    }
    auto [i, j] = kissing_check(c, sat);
    EXPECT_NE(i, j);
    EXPECT_LE(norm2(sat[i].center - sat[j].center), 4);
}

TEST(Kissing, CoincidentPair) {
    Disk c({0, 0}, 1, "c");
    std::vector<Disk> sat;
    for (int m = 0; m < 6; ++m) sat.emplace_back(Point{2, 0}, 1, "s" + std::to_string(m));
    auto [i, j] = kissing_check(c, sat);
    EXPECT_NE(i, j);
    EXPECT_EQ(sat[i].center, sat[j].center);
}

TEST(Kissing, Preconditions) {
    Disk c({0, 0}, 1, "c");
    std::vector<Disk> five(5, Disk({1, 0}, 1, "s"));
    EXPECT_THROW(kissing_check(c, five), std::invalid_argument);
    std::vector<Disk> far(6, Disk({5, 0}, 1, "s"));
    EXPECT_THROW(kissing_check(c, far), std::invalid_argument);
    std::vector<Disk> big(6, Disk({1, 0}, 2, "s"));
    EXPECT_THROW(kissing_check(c, big), std::invalid_argument);
}

TEST(Kissing, RandomConfigurations) {
    std::mt19937_64 g(2024);
    for (int iter = 0; iter < 2000; ++iter) {
        Rational r(static_cast<long long>(g() % 9) + 1, static_cast<long long>(g() % 4) + 1);
        Point c{Rational(static_cast<long long>(g() % 201) - 100, 7), Rational(static_cast<long long>(g() % 201) - 100, 3)};
        std::vector<Disk> sat;
        while (sat.size() < 6) {
            Point d{Rational(static_cast<long long>(g() % 401) - 200, 100), Rational(static_cast<long long>(g() % 401) - 200, 100)};
            if (norm2(d) <= 4) sat.emplace_back(c + r * d, r, "s");
        }
        auto [i, j] = kissing_check(Disk(c, r, "c"), sat);
        ASSERT_NE(i, j);
        ASSERT_LE(norm2(sat[i].center - sat[j].center), 4 * r * r);
    }
}

TEST(Signatures, Examples) {
    std::vector<Segment> stack{Segment({0, 0}, {4, 0}, "h0"), Segment({0, 1}, {4, 1}, "h1"),
                               Segment({0, 2}, {4, 2}, "h2")};
    EXPECT_EQ(transversal_signature(stack, Segment({10, 10}, {11, 11})), 0u);
    EXPECT_EQ(transversal_signature(stack, Segment({2, -1}, {2, 3})), 7u);
    Segment ext({-1, 0}, {5, 0});
    EXPECT_EQ(transversal_signature(stack, ext) & 1u, 1u);

    auto one = enumerate_signatures({Segment({3, 3}, {5, 4}, "s")}, GridCandidates{8});
    EXPECT_LE(one.signatures.size(), 2u);
    EXPECT_EQ(one.bound, Integer(10000) * 10000);
    EXPECT_THROW(enumerate_signatures({}, GridCandidates{4}), std::invalid_argument);
}

TEST(Signatures, MatchGridOracle) {
    std::vector<Segment> row;
    for (int i = 0; i < 4; ++i) {
        row.emplace_back(Point{Rational(2 * i + 1, 1), 3}, Point{Rational(2 * i + 2, 1), 3}, "u" + std::to_string(i));
        auto s = enumerate_signatures(row, GridCandidates{10});
        EXPECT_EQ(s.signatures.size(), oracle::grid_signature_count(row, 10));
        EXPECT_LE(s.signatures.size(), std::size_t(1) << row.size());
        EXPECT_EQ(s.bound, signature_bound(row.size()));
    }
}

TEST(Signatures, WorkerCountDoesNotMatter) {
    std::vector<Segment> s{Segment({1, 1}, {4, 2}, "a"), Segment({6, 1}, {5, 7}, "b"),
                           Segment({2, 8}, {9, 9}, "c")};
    auto one = enumerate_signatures(s, GridCandidates{9}, 1);
    auto four = enumerate_signatures(s, GridCandidates{9}, 4);
    EXPECT_EQ(one.signatures, four.signatures);
    auto r1 = enumerate_signatures(s, RandomCandidates{3000, 9}, 1);
    auto r3 = enumerate_signatures(s, RandomCandidates{3000, 9}, 3);
    EXPECT_EQ(r1.signatures, r3.signatures);
}

TEST(Signatures, Crossover) {
    int k0 = signature_crossover();
    EXPECT_EQ(k0, 50);
    EXPECT_FALSE(Integer(1) << 30 > signature_bound(30));
    EXPECT_TRUE(Integer(1) << 60 > signature_bound(60));
    EXPECT_FALSE(Integer(1) << (k0 - 1) > signature_bound(k0 - 1));
}
