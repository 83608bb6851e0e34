#pragma once

#include "../family.hpp"
#include "../outerplanar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace xsect {

class NotOuterplanar : public std::runtime_error {
public:
    explicit NotOuterplanar(OuterplanarResult r)
        : std::runtime_error(std::string("graph is not outerplanar: contains a ") + to_string(r.witness_kind)),
          result(std::move(r)) {}
    OuterplanarResult result;
};

// Chord model of the 1-subdivision of an outerplanar graph.
// Vertex i of the outer order owns the parameter interval [i, i+1]; its chord
// joins the points at i+1/3 and i+2/3. Edge chords leave strictly inside the
// middle third, ordered so that chords sharing a vertex fan out without crossing.
inline ModelBundle circle_model_of_subdivision(const Graph& g) {
    auto op = is_outerplanar(g);
    if (!op.outerplanar) throw NotOuterplanar(std::move(op));
    const auto& order = op.embedding->order;
    int n = static_cast<int>(order.size());
    std::map<std::string, int> pos;
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    ModelBundle b;
    b.intended = one_subdivision(g);
    b.family.kind = FamilyKind::Chords;
    b.family.ground = Circle{{0, 0}, 1};
    Rational shift(n, 2);  // centers parameters around 0
    auto at = [&](const Rational& s) { return circle_point_at(s - shift); };

    // parameter of the endpoint at vertex i for the chord towards neighbour j
    std::map<std::pair<int, int>, Rational> slot;
    for (int i = 0; i < n; ++i) {
        b.family.segments.emplace_back(at(i + Rational(1, 3)), at(i + Rational(2, 3)), order[i]);
        b.roles["v:" + order[i]] = order[i];
        std::vector<int> nb;
        for (auto& w : g.neighbors(order[i])) nb.push_back(pos[w]);
        // cyclically descending from i: i-1, i-2, ..., i+1
        std::sort(nb.begin(), nb.end(), [&](int a, int c) { return (a - i + n) % n > (c - i + n) % n; });
        int d = static_cast<int>(nb.size());
        for (int m = 0; m < d; ++m) slot[{i, nb[m]}] = i + Rational(1, 3) + Rational(m + 1, 3 * (d + 1));
    }
    for (auto& [u, v] : g.edges()) {
        int i = pos[u], j = pos[v];
        std::string w;
        for (auto& x : b.intended.neighbors(u))
            if (b.intended.has_edge(x, v) && !g.has_vertex(x)) w = x;
        b.family.segments.emplace_back(at(slot[{i, j}]), at(slot[{j, i}]), w);
    }
    return b;
}

}  // namespace xsect
