#pragma once

#include <xsect/xsect.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace xsect::cli {

struct Failure {
    int code;
    std::string category, message;
};

inline ModelBundle read_model(const std::string& path, std::istream& in, bool strict) {
    try {
        if (path == "-") return parse_model(in, strict);
        std::ifstream f(path);
        if (!f) throw Failure{2, "io", "cannot open '" + path + "'"};
        return parse_model(f, strict);
    } catch (const ParseError& e) {
        throw Failure{2, e.category, e.what()};
    }
}

inline Graph read_graph(const std::string& path, std::istream& in) {
    try {
        if (path == "-") return parse_graph(in);
        std::ifstream f(path);
        if (!f) throw Failure{2, "io", "cannot open '" + path + "'"};
        return parse_graph(f);
    } catch (const ParseError& e) {
        throw Failure{2, e.category, e.what()};
    }
}

inline std::vector<std::string> split_labels(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

// Crossing order check, chosen from the roles the bundle carries.
inline Report order_report(const ModelBundle& b) {
    std::string line;
    std::vector<std::string> order;
    if (b.has_role("l") && b.has_role("c") && b.has_role("z") && b.has_role("l2") && b.has_role("s2_2") && b.has_role("l3")) {
        line = b.role("l");
        for (auto* r : {"c", "z", "l2", "s2_2", "l3"}) order.push_back(b.role(r));
    } else if (b.has_role("l") && b.has_role("l1")) {
        line = b.role("l");
        for (int i = 1; b.has_role("l" + std::to_string(i)); ++i) order.push_back(b.role("l" + std::to_string(i)));
    } else {
        throw Failure{2, "usage", "model has no crossing-order roles"};
    }
    Report r;
    try {
        auto res = verify_crossing_order(b.family, line, order);
        r.add("crossing-order", res != OrderResult::Violated, to_string(res), to_string(res));
    } catch (const std::exception& e) {
        r.add("crossing-order", false, e.what());
    }
    return r;
}

inline bool has_triangle_roles(const ModelBundle& b) {
    return b.has_role("a") && b.has_role("b") && b.has_role("c") && b.has_role("z");
}

inline ModelBundle generate(const std::string& what, int k, int n, const std::string& c, const std::string& graph,
                            std::istream& in) {
    auto parse_c = [&] {
        auto r = parse_rational(c, false);
        if (!r.value || *r.value < 1) throw Failure{2, "usage", "--C must be a rational >= 1"};
        return *r.value;
    };
    try {
        if (what == "circle-model") {
            if (graph.empty()) throw Failure{2, "usage", "circle-model needs --graph"};
            return circle_model_of_subdivision(read_graph(graph, in));
        }
        if (what == "ordering-gadget") return ordering_gadget(n);
        if (what == "h") return segment_model_h();
        if (what == "unit-h") return unit_model_h(parse_c());
        if (what == "gk-seg") return gk_segments(k, parse_c()).first;
        if (what == "gk-disk") return gk_disks(k);
        if (what == "k16") return k16_disk_model();
        if (what == "powerset") return outer_string_model_powerset(k);
        if (what == "k4-sub") {
            auto [g, f] = k4_subdivision_example();
            ModelBundle b{f, g, {}};
            for (auto* v : {"A", "B", "C", "D"}) b.roles[v] = v;
            return b;
        }
    } catch (NotOuterplanar& e) {
        std::string w;
        for (auto& [u, v] : e.result.witness.edges()) w += " " + u + "-" + v;
        throw Failure{1, "not-outerplanar", std::string(e.what()) + "\nwitness:" + w};
    } catch (const std::invalid_argument& e) {
        throw Failure{2, "usage", e.what()};
    }
    throw Failure{2, "usage", "unknown model '" + what + "'"};
}

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact intersection-model workbench"};
    app.require_subcommand(1);

    std::string gen_what, gen_c = "100", gen_graph, gen_out;
    int gen_k = 2, gen_n = 3;
    auto* gen = app.add_subcommand("gen", "generate a model");
    gen->add_option("model", gen_what, "circle-model|ordering-gadget|h|unit-h|gk-seg|gk-disk|k16|powerset|k4-sub")
        ->required()
        ->check(CLI::IsMember({"circle-model", "ordering-gadget", "h", "unit-h", "gk-seg", "gk-disk", "k16", "powerset", "k4-sub"}));
    gen->add_option("--k", gen_k, "levels or elements");
    gen->add_option("--n", gen_n, "ordering gadget size");
    gen->add_option("--C", gen_c, "separation constant");
    gen->add_option("--graph", gen_graph, "edge-list file for circle-model");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    std::string ver_file, ver_check = "all";
    bool lenient = false;
    auto* ver = app.add_subcommand("verify", "verify a model file");
    ver->add_option("file", ver_file, "model file or -")->required();
    ver->add_option("--check", ver_check)->check(CLI::IsMember({"order", "triangle", "all"}));
    ver->add_flag("--lenient", lenient, "accept non-canonical rationals");

    std::string an_file, an_what, an_target;
    int an_grid = 0;
    std::size_t an_samples = 0;
    std::uint64_t an_seed = 1;
    unsigned an_workers = 1;
    auto* an = app.add_subcommand("analyze", "count lengths, sizes, neighborhoods or signatures");
    an->add_option("file", an_file, "model file or -")->required();
    an->add_option("analysis", an_what)->required()->check(CLI::IsMember({"lengths", "sizes", "neighborhoods", "signatures"}));
    an->add_option("--target", an_target, "comma-separated labels");
    an->add_option("--grid", an_grid, "grid extent for signature candidates");
    an->add_option("--samples", an_samples, "random signature candidates");
    an->add_option("--seed", an_seed);
    an->add_option("--workers", an_workers);

    std::string ex_file, ex_svg;
    double ex_scale = 100;
    auto* ex = app.add_subcommand("export", "render a model as SVG");
    ex->add_option("file", ex_file, "model file or -")->required();
    ex->add_option("--svg", ex_svg, "output path")->required();
    ex->add_option("--scale", ex_scale);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << '\n';
        return 2;
    }

    try {
        if (gen->parsed()) {
            ModelBundle b = generate(gen_what, gen_k, gen_n, gen_c, gen_graph, in);
            if (gen_out.empty()) {
                serialize_model(out, b);
            } else {
                std::ofstream f(gen_out);
                if (!f) throw Failure{2, "io", "cannot write '" + gen_out + "'"};
                serialize_model(f, b);
            }
            return 0;
        }
        if (ver->parsed()) {
            ModelBundle b = read_model(ver_file, in, !lenient);
            Report r;
            if (ver_check == "all") {
                r = verify_model(b);
                bool order_roles = b.has_role("l") && b.has_role("l1");
                if (order_roles || (b.has_role("l") && has_triangle_roles(b))) r.merge(order_report(b));
                if (has_triangle_roles(b)) r.merge(verify_triangle_containment(b));
            } else if (ver_check == "order") {
                r = order_report(b);
            } else {
                if (!has_triangle_roles(b)) throw Failure{2, "usage", "model has no a, b, c, z roles"};
                r = verify_triangle_containment(b);
            }
            out << r;
            return r.summary() ? 0 : 1;
        }
        if (an->parsed()) {
            ModelBundle b = read_model(an_file, in, true);
            const auto& f = b.family;
            try {
                if (an_what == "lengths") {
                    out << "distinct-squared-lengths " << count_segment_lengths(f) << '\n';
                } else if (an_what == "sizes") {
                    out << "distinct-radii " << count_disk_sizes(f) << '\n';
                } else if (an_what == "neighborhoods") {
                    auto labels = split_labels(an_target);
                    if (labels.empty()) throw Failure{2, "usage", "neighborhoods needs --target"};
                    std::set<std::string> target(labels.begin(), labels.end());
                    auto nb = distinct_neighborhoods(intersection_graph(f), target);
                    out << "target-size " << target.size() << '\n';
                    out << "distinct-neighborhoods " << nb.size() << '\n';
                } else {
                    if (f.kind != FamilyKind::Segments && f.kind != FamilyKind::Chords)
                        throw Failure{2, "usage", "signatures needs a segment model"};
                    CandidateSpec spec = GridCandidates{an_grid > 0 ? an_grid : 12};
                    if (an_samples > 0) spec = RandomCandidates{an_samples, an_seed};
                    auto s = enumerate_signatures(f.segments, spec, an_workers);
                    out << "objects " << f.segments.size() << '\n';
                    out << "signatures " << s.signatures.size() << '\n';
                    out << "bound " << s.bound.str() << '\n';
                }
            } catch (const std::invalid_argument& e) {
                throw Failure{2, "usage", e.what()};
            }
            return 0;
        }
        if (ex->parsed()) {
            ModelBundle b = read_model(ex_file, in, true);
            std::ofstream f(ex_svg);
            if (!f) throw Failure{2, "io", "cannot write '" + ex_svg + "'"};
            write_svg(f, b.family, ex_scale);
            return 0;
        }
    } catch (const Failure& f) {
        err << "error: " << f.category << ": " << f.message << '\n';
        return f.code;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace xsect::cli
