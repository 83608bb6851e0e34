#pragma once

#include "../family.hpp"

#include <cctype>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace xsect {

// Text model format, one record per line:
//
//   model v1
//   kind segments|disks|polylines|chords
//   ground <cx> <cy> <r>
//   seg <label> <x1> <y1> <x2> <y2>
//   disk <label> <cx> <cy> <r>
//   poly <label> <n> <x1> <y1> ... <xn> <yn>
//   role <name> <label>
//   vertex <label>
//   edge <u> <v>
//   end
//
// Numbers are exact rationals "p" or "p/q". Blank lines and lines starting
// with '#' are ignored.

class ParseError : public std::runtime_error {
public:
    ParseError(std::string category, int line, int column, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + " col " + std::to_string(column) + ": " + msg),
          category(std::move(category)), line(line), column(column) {}
    std::string category;  // syntax, invariant or version
    int line, column;
};

struct Token {
    std::string text;
    int column;
};

inline std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

inline void serialize_model(std::ostream& os, const ModelBundle& b) {
    const auto& f = b.family;
    auto pt = [&](const Point& p) { os << ' ' << to_string(p.x) << ' ' << to_string(p.y); };
    os << "model v1\n";
    os << "kind " << to_string(f.kind) << '\n';
    if (f.ground) {
        os << "ground";
        pt(f.ground->center);
        os << ' ' << to_string(f.ground->radius) << '\n';
    }
    for (auto& s : f.segments) {
        os << "seg " << s.label;
        pt(s.p);
        pt(s.q);
        os << '\n';
    }
    for (auto& d : f.disks) {
        os << "disk " << d.label;
        pt(d.center);
        os << ' ' << to_string(d.radius) << '\n';
    }
    for (auto& p : f.polylines) {
        os << "poly " << p.label << ' ' << p.vertices.size();
        for (auto& v : p.vertices) pt(v);
        os << '\n';
    }
    for (auto& [name, label] : b.roles) os << "role " << name << ' ' << label << '\n';
    for (auto& v : b.intended.vertices()) os << "vertex " << v << '\n';
    for (auto& [u, v] : b.intended.edges()) os << "edge " << u << ' ' << v << '\n';
    os << "end\n";
}

inline std::string serialize_model(const ModelBundle& b) {
    std::ostringstream os;
    serialize_model(os, b);
    return os.str();
}

// Strict mode rejects unknown records and non-canonical rationals; lenient
// mode skips unknown records and reduces rationals.
inline ModelBundle parse_model(std::istream& is, bool strict = true) {
    ModelBundle b;
    std::string raw;
    int lineno = 0;
    bool header = false, have_kind = false, ended = false;
    std::set<std::string> labels;
    struct Pending {
        int line, column;
        std::string text;
    };
    std::map<std::string, Pending> role_lines;

    auto fail = [&](const std::string& cat, int col, const std::string& msg) -> ParseError {
        return ParseError(cat, lineno, col, msg);
    };

    while (std::getline(is, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto t = tokenize(raw);
        if (t.empty() || t[0].text[0] == '#') continue;
        if (ended) throw fail("syntax", t[0].column, "content after 'end'");
        const std::string& key = t[0].text;
        auto need = [&](std::size_t n) {
            if (t.size() != n)
                throw fail("syntax", t.back().column,
                           "'" + key + "' expects " + std::to_string(n - 1) + " fields, got " + std::to_string(t.size() - 1));
        };
        auto rat = [&](std::size_t i) {
            auto r = parse_rational(t[i].text, strict);
            if (!r.value) throw fail("syntax", t[i].column, r.error);
            return *r.value;
        };
        auto point = [&](std::size_t i) { return Point{rat(i), rat(i + 1)}; };
        auto fresh = [&](std::size_t i) {
            if (!labels.insert(t[i].text).second) throw fail("invariant", t[i].column, "duplicate label '" + t[i].text + "'");
            return t[i].text;
        };

        if (!header) {
            if (key != "model") throw fail("syntax", t[0].column, "expected 'model v1'");
            need(2);
            if (t[1].text != "v1") throw fail("version", t[1].column, "unsupported version '" + t[1].text + "'");
            header = true;
            continue;
        }
        if (key == "kind") {
            need(2);
            if (have_kind) throw fail("syntax", t[0].column, "repeated 'kind'");
            auto k = parse_kind(t[1].text);
            if (!k) throw fail("syntax", t[1].column, "unknown kind '" + t[1].text + "'");
            b.family.kind = *k;
            have_kind = true;
            continue;
        }
        if (!have_kind && key != "end") throw fail("syntax", t[0].column, "'kind' must come before '" + key + "'");
        auto kind = b.family.kind;
        try {
            if (key == "ground") {
                need(4);
                if (b.family.ground) throw fail("syntax", t[0].column, "repeated 'ground'");
                Rational r = rat(3);
                if (r <= 0) throw fail("invariant", t[3].column, "ground radius must be positive");
                b.family.ground = Circle{point(1), r};
            } else if (key == "seg") {
                if (kind != FamilyKind::Segments && kind != FamilyKind::Chords)
                    throw fail("syntax", t[0].column, "'seg' in a " + std::string(to_string(kind)) + " model");
                need(6);
                Point p = point(2), q = point(4);
                b.family.segments.emplace_back(p, q, fresh(1));
            } else if (key == "disk") {
                if (kind != FamilyKind::Disks) throw fail("syntax", t[0].column, "'disk' in a " + std::string(to_string(kind)) + " model");
                need(5);
                Point c = point(2);
                Rational r = rat(4);
                b.family.disks.emplace_back(c, r, fresh(1));
            } else if (key == "poly") {
                if (kind != FamilyKind::Polylines)
                    throw fail("syntax", t[0].column, "'poly' in a " + std::string(to_string(kind)) + " model");
                if (t.size() < 3) throw fail("syntax", t.back().column, "'poly' needs a label and a vertex count");
                std::size_t n = 0;
                try {
                    n = std::stoul(t[2].text);
                } catch (...) {
                    throw fail("syntax", t[2].column, "bad vertex count '" + t[2].text + "'");
                }
                need(3 + 2 * n);
                std::vector<Point> v;
                for (std::size_t i = 0; i < n; ++i) v.push_back(point(3 + 2 * i));
                b.family.polylines.emplace_back(std::move(v), fresh(1));
            } else if (key == "role") {
                need(3);
                if (b.roles.count(t[1].text)) throw fail("invariant", t[1].column, "repeated role '" + t[1].text + "'");
                b.roles[t[1].text] = t[2].text;
                role_lines[t[1].text] = {lineno, t[2].column, t[2].text};
            } else if (key == "vertex") {
                need(2);
                if (b.intended.has_vertex(t[1].text)) throw fail("invariant", t[1].column, "repeated vertex '" + t[1].text + "'");
                b.intended.add_vertex(t[1].text);
            } else if (key == "edge") {
                need(3);
                if (t[1].text == t[2].text) throw fail("invariant", t[2].column, "loop at '" + t[1].text + "'");
                for (int i : {1, 2})
                    if (!b.intended.has_vertex(t[i].text))
                        throw fail("invariant", t[i].column, "edge endpoint '" + t[i].text + "' is not a declared vertex");
                if (b.intended.has_edge(t[1].text, t[2].text))
                    throw fail("invariant", t[1].column, "repeated edge " + t[1].text + "-" + t[2].text);
                b.intended.add_edge(t[1].text, t[2].text);
            } else if (key == "end") {
                need(1);
                ended = true;
            } else if (strict) {
                throw fail("syntax", t[0].column, "unknown record '" + key + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw fail("invariant", t.size() > 1 ? t[1].column : t[0].column, e.what());
        }
    }
    if (!header) throw ParseError("syntax", lineno, 1, "empty input");
    if (!ended) throw ParseError("syntax", lineno, 1, "missing 'end'");
    if (!have_kind) throw ParseError("syntax", lineno, 1, "missing 'kind'");

    const auto& f = b.family;
    if (f.kind == FamilyKind::Chords) {
        if (!f.ground) throw ParseError("invariant", lineno, 1, "chords model without a ground circle");
        for (auto& s : f.segments)
            for (auto* p : {&s.p, &s.q})
                if (circle_side(*f.ground, *p) != 0)
                    throw ParseError("invariant", lineno, 1, "chord '" + s.label + "' has an endpoint off the ground circle");
    }
    if (f.kind == FamilyKind::Polylines && f.ground) {
        for (auto& pl : f.polylines) {
            auto& v = pl.vertices;
            bool first = circle_side(*f.ground, v.front()) == 0, last = circle_side(*f.ground, v.back()) == 0;
            bool ok = first != last;
            for (std::size_t i = 0; i < v.size() && ok; ++i)
                if (!((i == 0 && first) || (i + 1 == v.size() && last)) && circle_side(*f.ground, v[i]) >= 0) ok = false;
            if (!ok)
                throw ParseError("invariant", lineno, 1,
                                 "polyline '" + pl.label + "' must have exactly one endpoint on the ground circle and the rest inside");
        }
    }
    for (auto& [name, p] : role_lines)
        if (!labels.count(p.text) || !b.intended.has_vertex(p.text))
            throw ParseError("invariant", p.line, p.column, "role '" + name + "' names unknown label '" + p.text + "'");
    return b;
}

inline ModelBundle parse_model(const std::string& text, bool strict = true) {
    std::istringstream is(text);
    return parse_model(is, strict);
}

}  // namespace xsect
