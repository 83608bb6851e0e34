#pragma once

#include "../graph.hpp"
#include "model_file.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace xsect {

// One record per line: "u v" for an edge, "u" for a vertex. '#' starts a comment line.
inline Graph parse_graph(std::istream& is) {
    Graph g;
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto t = tokenize(raw);
        if (t.empty() || t[0].text[0] == '#') continue;
        if (t.size() > 2) throw ParseError("syntax", lineno, t[2].column, "expected 'u v' or 'u'");
        if (t.size() == 1) {
            g.add_vertex(t[0].text);
            continue;
        }
        if (t[0].text == t[1].text) throw ParseError("invariant", lineno, t[1].column, "loop at '" + t[0].text + "'");
        if (g.has_edge(t[0].text, t[1].text))
            throw ParseError("invariant", lineno, t[0].column, "repeated edge " + t[0].text + "-" + t[1].text);
        g.add_edge(t[0].text, t[1].text);
    }
    return g;
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream is(text);
    return parse_graph(is);
}

inline void serialize_graph(std::ostream& os, const Graph& g) {
    for (auto& v : g.vertices())
        if (g.degree(v) == 0) os << v << '\n';
    for (auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

}  // namespace xsect
