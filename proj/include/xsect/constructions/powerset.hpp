#pragma once

#include "../family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace xsect {

inline std::string element_label(int i) { return std::to_string(i); }

// "S" followed by one bit per element, element 1 first.
inline std::string set_label(int k, unsigned long long mask) {
    std::string s = "S";
    for (int i = 0; i < k; ++i) s += (mask >> i & 1) ? '1' : '0';
    return s;
}

// Elements 1..k and all subsets; subsets form a clique, i ~ A iff i in A.
inline Graph powerset_graph(int k) {
    if (k < 1 || k > 20) throw std::invalid_argument("powerset_graph needs 1 <= k <= 20");
    Graph g;
    unsigned long long sets = 1ULL << k;
    for (int i = 1; i <= k; ++i) g.add_vertex(element_label(i));
    for (unsigned long long a = 0; a < sets; ++a) {
        g.add_vertex(set_label(k, a));
        for (unsigned long long b = 0; b < a; ++b) g.add_edge(set_label(k, a), set_label(k, b));
        for (int i = 1; i <= k; ++i)
            if (a >> (i - 1) & 1) g.add_edge(element_label(i), set_label(k, a));
    }
    return g;
}

// Grounded in the unit circle. Element i is a vertical segment rising from
// the lower arc to y = 0. Set A drops from the upper arc, runs right along
// its own height and dips below y = 0 around every member element. Sets
// further left drop from higher on the circle and run along higher tracks.
inline ModelBundle outer_string_model_powerset(int k) {
    if (k < 1 || k > 12) throw std::invalid_argument("outer_string_model_powerset needs 1 <= k <= 12");
    ModelBundle b;
    b.family.kind = FamilyKind::Polylines;
    b.family.ground = Circle{{0, 0}, 1};
    b.intended = powerset_graph(k);

    std::vector<Rational> ex(k + 1);
    for (int i = 1; i <= k; ++i) {
        Rational t = -(Rational(3, 10) + Rational(1, 2) * Rational(i - 1, std::max(k - 1, 1)));
        Point p = circle_point_at(t);
        ex[i] = p.x;
        b.family.polylines.emplace_back(std::vector<Point>{p, {p.x, 0}}, element_label(i));
        b.roles["element_" + std::to_string(i)] = element_label(i);
    }
    // members sorted left to right
    std::vector<int> by_x;
    for (int i = 1; i <= k; ++i) by_x.push_back(i);
    std::sort(by_x.begin(), by_x.end(), [&](int i, int j) { return ex[i] < ex[j]; });

    unsigned long long sets = 1ULL << k;
    Rational denom(static_cast<long long>(sets + 1));
    for (unsigned long long a = 0; a < sets; ++a) {
        Rational rank(static_cast<long long>(a + 1));
        Point top = circle_point_at(Rational(13, 10) + Rational(3, 2) * Rational(static_cast<long long>(a)) / Rational(static_cast<long long>(sets)));
        Rational track = Rational(1, 20) + Rational(1, 4) * rank / denom;
        Rational low = -Rational(1, 10) - Rational(1, 10) * rank / denom;
        Rational w = rank / (40 * denom);
        std::vector<Point> v{top, {top.x, track}};
        for (int i : by_x)
            if (a >> (i - 1) & 1) {
                v.push_back({ex[i] - w, track});
                v.push_back({ex[i] - w, low});
                v.push_back({ex[i] + w, low});
                v.push_back({ex[i] + w, track});
            }
        v.push_back({Rational(9, 10), track});
        b.family.polylines.emplace_back(std::move(v), set_label(k, a));
    }
    b.roles["empty"] = set_label(k, 0);
    return b;
}

}  // namespace xsect
