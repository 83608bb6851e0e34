#pragma once

#include "graph.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace xsect {

struct OuterEmbedding {
    std::vector<std::string> order;  // cyclic
};

enum class WitnessKind { None, K4Subdivision, K23Subdivision };

inline const char* to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::K4Subdivision: return "K4-subdivision";
        case WitnessKind::K23Subdivision: return "K2,3-subdivision";
        default: return "none";
    }
}

struct OuterplanarResult {
    bool outerplanar = false;
    std::optional<OuterEmbedding> embedding;
    WitnessKind witness_kind = WitnessKind::None;
    Graph witness;  // minimal non-outerplanar subgraph
    std::vector<std::string> branch_vertices;
};

// Two edges interleave if their endpoints alternate around the cycle.
inline bool edges_interleave(const std::map<std::string, int>& pos, const Graph::Edge& e, const Graph::Edge& f) {
    int a = pos.at(e.first), b = pos.at(e.second), c = pos.at(f.first), d = pos.at(f.second);
    if (a > b) std::swap(a, b);
    if (a == c || a == d || b == c || b == d) return false;
    bool c_in = a < c && c < b, d_in = a < d && d < b;
    return c_in != d_in;
}

inline bool is_outer_order(const Graph& g, const std::vector<std::string>& order) {
    if (order.size() != g.num_vertices()) return false;
    std::map<std::string, int> pos;
    for (int i = 0; i < static_cast<int>(order.size()); ++i)
        if (!g.has_vertex(order[i]) || !pos.emplace(order[i], i).second) return false;
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (edges_interleave(pos, es[i], es[j])) return false;
    return true;
}

namespace detail {

// G plus an apex adjacent to everything is planar iff G is outerplanar.
// On success the apex rotation is an outer order.
inline std::optional<std::vector<std::string>> apex_rotation(const Graph& g) {
    using namespace boost;
    using BG = adjacency_list<vecS, vecS, undirectedS, property<vertex_index_t, int>, property<edge_index_t, int>>;
    auto names = g.vertices();
    int n = static_cast<int>(names.size());
    if (n == 0) return std::vector<std::string>{};
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i) idx[names[i]] = i;
    BG bg(n + 1);
    for (auto& [u, v] : g.edges()) add_edge(idx[u], idx[v], bg);
    for (int i = 0; i < n; ++i) add_edge(n, i, bg);
    auto eidx = get(edge_index, bg);
    int k = 0;
    graph_traits<BG>::edge_iterator ei, ee;
    for (tie(ei, ee) = edges(bg); ei != ee; ++ei) put(eidx, *ei, k++);

    using Edge = graph_traits<BG>::edge_descriptor;
    std::vector<std::vector<Edge>> rotation(num_vertices(bg));
    auto emb = make_iterator_property_map(rotation.begin(), get(vertex_index, bg));
    if (!boyer_myrvold_planarity_test(boyer_myrvold_params::graph = bg, boyer_myrvold_params::embedding = emb))
        return std::nullopt;
    std::vector<std::string> order;
    for (auto& e : rotation[n]) {
        auto s = source(e, bg), t = target(e, bg);
        order.push_back(names[static_cast<int>(s) == n ? t : s]);
    }
    return order;
}

}  // namespace detail

inline OuterplanarResult is_outerplanar(const Graph& g) {
    OuterplanarResult r;
    if (auto order = detail::apex_rotation(g)) {
        r.outerplanar = true;
        r.embedding = OuterEmbedding{*order};
        return r;
    }
    // Shrink to an edge-minimal non-outerplanar subgraph: a subdivision of K4 or K2,3.
    Graph w = g;
    for (auto& [u, v] : g.edges()) {
        w.remove_edge(u, v);
        if (detail::apex_rotation(w)) w.add_edge(u, v);
    }
    for (auto& v : w.vertices())
        if (w.degree(v) == 0) w.remove_vertex(v);
    for (auto& v : w.vertices())
        if (w.degree(v) >= 3) r.branch_vertices.push_back(v);
    r.witness_kind = r.branch_vertices.size() == 4 ? WitnessKind::K4Subdivision : WitnessKind::K23Subdivision;
    r.witness = std::move(w);
    return r;
}

}  // namespace xsect
