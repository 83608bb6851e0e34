#pragma once

#include "graph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace xsect {

using VertexMap = std::map<std::string, std::string>;

namespace detail {

struct IndexedGraph {
    std::vector<std::string> names;
    std::map<std::string, int> index;
    std::vector<std::vector<int>> adj;
    std::vector<std::vector<char>> mat;

    explicit IndexedGraph(const Graph& g) {
        names = g.vertices();
        for (int i = 0; i < static_cast<int>(names.size()); ++i) index[names[i]] = i;
        adj.resize(names.size());
        mat.assign(names.size(), std::vector<char>(names.size(), 0));
        for (auto& [u, v] : g.edges()) {
            int a = index[u], b = index[v];
            adj[a].push_back(b);
            adj[b].push_back(a);
            mat[a][b] = mat[b][a] = 1;
        }
    }
    int size() const { return static_cast<int>(names.size()); }
};

// Color refinement run on the disjoint union so colors are comparable.
inline std::pair<std::vector<int>, std::vector<int>> refine(const IndexedGraph& g, const IndexedGraph& h,
                                                            const std::vector<int>& g0, const std::vector<int>& h0) {
    std::vector<int> cg = g0, ch = h0;
    std::size_t classes = 0;
    for (;;) {
        std::map<std::pair<int, std::vector<int>>, int> sig;
        auto key = [](const IndexedGraph& x, const std::vector<int>& c, int v) {
            std::vector<int> ns;
            for (int w : x.adj[v]) ns.push_back(c[w]);
            std::sort(ns.begin(), ns.end());
            return std::pair{c[v], ns};
        };
        std::vector<std::pair<int, std::vector<int>>> kg, kh;
        for (int v = 0; v < g.size(); ++v) kg.push_back(key(g, cg, v)), sig.emplace(kg.back(), 0);
        for (int v = 0; v < h.size(); ++v) kh.push_back(key(h, ch, v)), sig.emplace(kh.back(), 0);
        int next = 0;
        for (auto& [k, id] : sig) id = next++;
        for (int v = 0; v < g.size(); ++v) cg[v] = sig[kg[v]];
        for (int v = 0; v < h.size(); ++v) ch[v] = sig[kh[v]];
        if (sig.size() == classes) break;
        classes = sig.size();
    }
    return {cg, ch};
}

}  // namespace detail

// Returns an isomorphism G -> H extending `anchors`, if one exists.
inline std::optional<VertexMap> find_isomorphism(const Graph& g, const Graph& h, const VertexMap& anchors = {}) {
    std::set<std::string> images;
    for (auto& [u, v] : anchors) {
        if (!g.has_vertex(u)) throw std::invalid_argument("anchor '" + u + "' is not a vertex of the first graph");
        if (!h.has_vertex(v)) throw std::invalid_argument("anchor image '" + v + "' is not a vertex of the second graph");
        if (!images.insert(v).second) throw std::invalid_argument("anchor map is not injective at '" + v + "'");
    }
    if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return std::nullopt;

    // identical labeled graphs with identity-compatible anchors
    if (g == h && std::all_of(anchors.begin(), anchors.end(), [](auto& kv) { return kv.first == kv.second; })) {
        VertexMap id;
        for (auto& v : g.vertices()) id[v] = v;
        return id;
    }

    detail::IndexedGraph G(g), H(h);
    int n = G.size();
    std::vector<int> g0(n), h0(n);
    for (int v = 0; v < n; ++v) g0[v] = static_cast<int>(G.adj[v].size());
    for (int v = 0; v < n; ++v) h0[v] = static_cast<int>(H.adj[v].size());
    int tag = n + 1;
    for (auto& [u, v] : anchors) {
        g0[G.index[u]] = tag;
        h0[H.index[v]] = tag;
        ++tag;
    }
    auto [cg, ch] = detail::refine(G, H, g0, h0);

    std::map<int, int> count;
    for (int c : cg) ++count[c];
    for (int c : ch) --count[c];
    for (auto& [c, k] : count)
        if (k != 0) return std::nullopt;

    std::map<int, int> class_size;
    for (int c : cg) ++class_size[c];

    // BFS order, starting from the rarest colors
    std::vector<int> order, seen(n, 0);
    std::vector<int> by_rarity(n);
    for (int v = 0; v < n; ++v) by_rarity[v] = v;
    std::stable_sort(by_rarity.begin(), by_rarity.end(),
                     [&](int a, int b) { return class_size[cg[a]] < class_size[cg[b]]; });
    for (int s : by_rarity) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::size_t head = order.size();
        order.push_back(s);
        while (head < order.size()) {
            int v = order[head++];
            std::vector<int> ns = G.adj[v];
            std::stable_sort(ns.begin(), ns.end(), [&](int a, int b) { return class_size[cg[a]] < class_size[cg[b]]; });
            for (int w : ns)
                if (!seen[w]) seen[w] = 1, order.push_back(w);
        }
    }

    std::vector<std::vector<int>> candidates(n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (cg[v] == ch[w]) candidates[v].push_back(w);

    std::vector<int> map(n, -1), used(n, 0);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    auto consistent = [&](int v, int w) {
        for (int i = 0; i < pos[v]; ++i) {
            int u = order[i];
            if (G.mat[v][u] != H.mat[w][map[u]]) return false;
        }
        return true;
    };

    std::vector<std::size_t> next(n, 0);
    int depth = 0;
    while (depth >= 0 && depth < n) {
        int v = order[depth];
        if (map[v] >= 0) {
            used[map[v]] = 0;
            map[v] = -1;
        }
        bool placed = false;
        while (next[depth] < candidates[v].size()) {
            int w = candidates[v][next[depth]++];
            if (!used[w] && consistent(v, w)) {
                map[v] = w;
                used[w] = 1;
                placed = true;
                break;
            }
        }
        if (placed) {
            ++depth;
            if (depth < n) next[depth] = 0;
        } else {
            next[depth] = 0;
            --depth;
        }
    }
    if (depth < 0) return std::nullopt;

    VertexMap out;
    for (int v = 0; v < n; ++v) out[G.names[v]] = H.names[map[v]];
    return out;
}

inline bool is_isomorphic(const Graph& g, const Graph& h, const VertexMap& anchors = {}) {
    return find_isomorphism(g, h, anchors).has_value();
}

}  // namespace xsect
