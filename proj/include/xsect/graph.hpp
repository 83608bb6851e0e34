#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xsect {

// Finite simple undirected graph on string labels.
class Graph {
public:
    using Edge = std::pair<std::string, std::string>;

    Graph() = default;
    Graph(std::initializer_list<std::string> vertices, std::initializer_list<Edge> edges = {}) {
        for (auto& v : vertices) add_vertex(v);
        for (auto& [u, v] : edges) add_edge(u, v);
    }

    void add_vertex(const std::string& v) { adj_.try_emplace(v); }

    void add_edge(const std::string& u, const std::string& v) {
        if (u == v) throw std::invalid_argument("loop at '" + u + "'");
        adj_[u].insert(v);
        adj_[v].insert(u);
    }

    void remove_edge(const std::string& u, const std::string& v) {
        if (auto it = adj_.find(u); it != adj_.end()) it->second.erase(v);
        if (auto it = adj_.find(v); it != adj_.end()) it->second.erase(u);
    }

    void remove_vertex(const std::string& v) {
        auto it = adj_.find(v);
        if (it == adj_.end()) return;
        for (auto& w : it->second) adj_[w].erase(v);
        adj_.erase(it);
    }

    bool has_vertex(const std::string& v) const { return adj_.count(v) != 0; }

    bool has_edge(const std::string& u, const std::string& v) const {
        auto it = adj_.find(u);
        return it != adj_.end() && it->second.count(v) != 0;
    }

    const std::set<std::string>& neighbors(const std::string& v) const {
        auto it = adj_.find(v);
        if (it == adj_.end()) throw std::out_of_range("no vertex '" + v + "'");
        return it->second;
    }

    std::size_t degree(const std::string& v) const { return neighbors(v).size(); }
    std::size_t num_vertices() const { return adj_.size(); }

    std::size_t num_edges() const {
        std::size_t m = 0;
        for (auto& [v, n] : adj_) m += n.size();
        return m / 2;
    }

    std::vector<std::string> vertices() const {
        std::vector<std::string> out;
        for (auto& [v, n] : adj_) out.push_back(v);
        return out;
    }

    // Each edge once, with first < second.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (auto& [v, n] : adj_)
            for (auto& w : n)
                if (v < w) out.emplace_back(v, w);
        return out;
    }

    const std::map<std::string, std::set<std::string>>& adjacency() const { return adj_; }

    Graph induced(const std::set<std::string>& keep) const {
        Graph g;
        for (auto& v : keep)
            if (has_vertex(v)) g.add_vertex(v);
        for (auto& [u, v] : edges())
            if (keep.count(u) && keep.count(v)) g.add_edge(u, v);
        return g;
    }

    bool operator==(const Graph&) const = default;

private:
    std::map<std::string, std::set<std::string>> adj_;
};

inline Graph complete_graph(int n, const std::string& prefix = "v") {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(prefix + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(prefix + std::to_string(i), prefix + std::to_string(j));
    return g;
}

inline Graph cycle_graph(int n, const std::string& prefix = "v") {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_edge(prefix + std::to_string(i), prefix + std::to_string((i + 1) % n));
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge("x" + std::to_string(i), "y" + std::to_string(j));
    return g;
}

inline Graph star_graph(int leaves) {
    Graph g;
    g.add_vertex("c");
    for (int i = 0; i < leaves; ++i) g.add_edge("c", "l" + std::to_string(i));
    return g;
}

inline std::string subdivision_label(const std::string& u, const std::string& v) { return "w_" + u + "_" + v; }

// Replaces every edge uv by a path u - w_u_v - v.
inline Graph one_subdivision(const Graph& g) {
    Graph out;
    for (auto& v : g.vertices()) out.add_vertex(v);
    for (auto& [u, v] : g.edges()) {
        std::string w = subdivision_label(u, v);
        while (out.has_vertex(w)) w += "'";
        out.add_edge(u, w);
        out.add_edge(w, v);
    }
    return out;
}

inline bool is_bipartite(const Graph& g) {
    std::map<std::string, int> side;
    for (auto& s : g.vertices()) {
        if (side.count(s)) continue;
        side[s] = 0;
        std::vector<std::string> stack{s};
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto& w : g.neighbors(v)) {
                auto it = side.find(w);
                if (it == side.end()) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (it->second == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool has_triangle(const Graph& g) {
    for (auto& [u, v] : g.edges())
        for (auto& w : g.neighbors(u))
            if (w != v && g.has_edge(v, w)) return true;
    return false;
}

// { N(v) & target : v outside target }
inline std::set<std::set<std::string>> distinct_neighborhoods(const Graph& g, const std::set<std::string>& target) {
    for (auto& t : target)
        if (!g.has_vertex(t)) throw std::invalid_argument("target vertex '" + t + "' not in graph");
    std::set<std::set<std::string>> out;
    for (auto& [v, n] : g.adjacency()) {
        if (target.count(v)) continue;
        std::set<std::string> s;
        for (auto& w : n)
            if (target.count(w)) s.insert(w);
        out.insert(std::move(s));
    }
    return out;
}

}  // namespace xsect
