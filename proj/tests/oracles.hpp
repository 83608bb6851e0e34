#pragma once

// Brute-force reference implementations used to check the library. None of
// them call the predicates they are compared against.

#include <xsect/xsect.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using xsect::Point;
using xsect::Rational;

// Sign of the determinant |ax ay 1; bx by 1; cx cy 1|, positive for CCW.
inline int det3_sign(const Point& a, const Point& b, const Point& c) {
    Rational d = a.x * (b.y - c.y) - a.y * (b.x - c.x) + (b.x * c.y - c.x * b.y);
    return d.sign();
}

enum class Meet { Proper, Touch, None };

// Solve A + t(B-A) = C + u(D-C) directly. Proper means a single common point
// interior to both segments.
inline Meet parametric(const Point& a, const Point& b, const Point& c, const Point& d) {
    Rational rx = b.x - a.x, ry = b.y - a.y, sx = d.x - c.x, sy = d.y - c.y;
    Rational wx = c.x - a.x, wy = c.y - a.y;
    Rational den = rx * sy - ry * sx;
    if (den != 0) {
        Rational t = (wx * sy - wy * sx) / den;
        Rational u = (wx * ry - wy * rx) / den;
        if (t > 0 && t < 1 && u > 0 && u < 1) return Meet::Proper;
        if (t >= 0 && t <= 1 && u >= 0 && u <= 1) return Meet::Touch;
        return Meet::None;
    }
    if (wx * ry - wy * rx != 0) return Meet::None;  // parallel lines
    Rational rr = rx * rx + ry * ry;
    Rational t0 = (wx * rx + wy * ry) / rr;
    Rational t1 = ((d.x - a.x) * rx + (d.y - a.y) * ry) / rr;
    Rational lo = std::max(std::min(t0, t1), Rational(0)), hi = std::min(std::max(t0, t1), Rational(1));
    return lo <= hi ? Meet::Touch : Meet::None;
}

inline Meet parametric(const xsect::Segment& s, const xsect::Segment& t) { return parametric(s.p, s.q, t.p, t.q); }

// Graphs on at most 8 vertices as adjacency bitmasks.
struct Small {
    int n = 0;
    std::array<std::uint8_t, 8> adj{};

    bool has(int i, int j) const { return adj[i] >> j & 1; }
    void add(int i, int j) {
        adj[i] |= std::uint8_t(1u << j);
        adj[j] |= std::uint8_t(1u << i);
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (has(i, j)) e.emplace_back(i, j);
        return e;
    }
    xsect::Graph graph(const std::string& prefix = "v") const {
        xsect::Graph g;
        for (int i = 0; i < n; ++i) g.add_vertex(prefix + std::to_string(i));
        for (auto [i, j] : edges()) g.add_edge(prefix + std::to_string(i), prefix + std::to_string(j));
        return g;
    }
};

inline std::uint64_t code(const Small& g, const std::vector<int>& perm) {
    std::uint64_t c = 0;
    int bit = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j, ++bit)
            if (g.has(perm[i], perm[j])) c |= std::uint64_t(1) << bit;
    return c;
}

// Minimum edge code over all vertex orders.
inline std::uint64_t canonical(const Small& g) {
    std::vector<int> p(g.n);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t best = ~std::uint64_t(0);
    do best = std::min(best, code(g, p));
    while (std::next_permutation(p.begin(), p.end()));
    return best;
}

inline bool interleave(const std::vector<int>& pos, std::pair<int, int> e, std::pair<int, int> f) {
    int a = pos[e.first], b = pos[e.second], c = pos[f.first], d = pos[f.second];
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

// Some cyclic vertex order has no two interleaving edges.
inline bool outerplanar(const Small& g) {
    if (g.n <= 3) return true;
    auto e = g.edges();
    std::vector<int> order(g.n), pos(g.n);
    std::iota(order.begin(), order.end(), 0);
    do {
        for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
        bool ok = true;
        for (std::size_t i = 0; i < e.size() && ok; ++i)
            for (std::size_t j = i + 1; j < e.size() && ok; ++j) ok = !interleave(pos, e[i], e[j]);
        if (ok) return true;
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return false;
}

// Labeled graph to Small, vertices in sorted label order.
inline Small small(const xsect::Graph& g) {
    Small s;
    std::map<std::string, int> id;
    for (auto& v : g.vertices()) id[v] = s.n++;
    for (auto& [u, v] : g.edges()) s.add(id[u], id[v]);
    return s;
}

inline bool isomorphic(const xsect::Graph& g, const xsect::Graph& h) {
    if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
    Small a = small(g), b = small(h);
    std::vector<int> p(a.n), id(a.n);
    std::iota(p.begin(), p.end(), 0);
    std::iota(id.begin(), id.end(), 0);
    std::uint64_t target = code(a, id);
    do
        if (code(b, p) == target) return true;
    while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Isomorphism classes on exactly n vertices, built by adding one vertex with
// every neighbour set to each class on n-1 vertices. With `keep` hereditary,
// classes[m] holds exactly the classes satisfying it.
template <class Keep>
std::vector<std::vector<Small>> classes_up_to(int nmax, Keep keep) {
    std::vector<std::vector<Small>> out(nmax + 1);
    out[0].push_back(Small{});
    for (int n = 1; n <= nmax; ++n) {
        std::set<std::uint64_t> seen;
        for (auto& base : out[n - 1])
            for (unsigned s = 0; s < (1u << (n - 1)); ++s) {
                Small g = base;
                g.n = n;
                for (int j = 0; j < n - 1; ++j)
                    if (s >> j & 1) g.add(n - 1, j);
                if (!keep(g)) continue;
                if (seen.insert(canonical(g)).second) out[n].push_back(g);
            }
    }
    return out;
}

inline std::vector<std::vector<Small>> all_graphs(int nmax) {
    return classes_up_to(nmax, [](const Small&) { return true; });
}

inline std::vector<std::vector<Small>> outerplanar_graphs(int nmax) {
    return classes_up_to(nmax, [](const Small& g) { return outerplanar(g); });
}

// Distinct subsets of S met by segments joining two points of {0..m-1}^2.
inline std::size_t grid_signature_count(const std::vector<xsect::Segment>& s, int m) {
    std::vector<Point> pts;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) pts.push_back({x, y});
    std::set<std::vector<bool>> seen;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            std::vector<bool> hit;
            for (auto& t : s) hit.push_back(parametric(t.p, t.q, pts[i], pts[j]) != Meet::None);
            seen.insert(hit);
        }
    return seen.size();
}

}  // namespace oracle
