#include "nashblow/render.hpp"

#include "nashblow/nash.hpp"

#include <json.hpp>

#include <sstream>

namespace nashblow {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json json_vec(Vec2 v) { return ordered_json::array({v.x, v.y}); }

ordered_json json_vecs(const std::vector<Vec2>& vs) {
    ordered_json a = ordered_json::array();
    for (Vec2 v : vs) a.push_back(json_vec(v));
    return a;
}

std::string quote_dot(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string format_vec(Vec2 v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

std::string format_vec_list(const std::vector<Vec2>& vs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += sep;
        out += format_vec(vs[i]);
    }
    return out;
}

std::string format_fraction(const HJFraction& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(f.entries[i]);
    }
    return out + "]";
}

std::string format_shape(const FractionShape& s) {
    std::string len = "length=" + std::to_string(s.length);
    switch (s.kind) {
        case FractionShape::Kind::OneSegment:
            return "one-segment(" + len + ")";
        case FractionShape::Kind::TwoSegments:
            return "two-segments(position=" + std::to_string(s.position) +
                   ",value=" + std::to_string(s.value) + "," + len + ")";
        case FractionShape::Kind::Fibonacci:
            return "fibonacci(" + len + ")";
        case FractionShape::Kind::Other:
            return "other(" + len + ")";
    }
    throw std::logic_error("unknown fraction shape");
}

std::string hilbert_report(const Cone2& c) {
    NormalForm nf = normal_form(c);
    ThetaProfile profile = theta_profile(c);
    HJFraction f = hj_expand(nf.p, nf.q);
    std::vector<Int> si = self_intersections(c);

    std::ostringstream out;
    out << "cone: " << format_vec(c.r1) << " " << format_vec(c.r2) << "\n";
    out << "normal form: " << nf.p << "/" << nf.q << "\n";
    out << "hilbert basis: " << format_vec_list(profile.hilbert_basis) << "\n";
    out << "fraction: " << format_fraction(f) << "\n";
    out << "shape: " << format_shape(fraction_shape(f)) << "\n";
    out << "boundary vertices: " << format_vec_list(profile.vertices) << "\n";
    out << "compact edges: " << profile.compact_edge_count << "\n";
    out << "self-intersections:";
    if (si.empty()) {
        out << " none";
    } else {
        for (Int v : si) out << " " << v;
    }
    out << "\n";
    return out.str();
}

std::string blowup_report(const GeneratorSet& g) {
    GeneratorSet minimal = minimal_generators(g);
    std::ostringstream out;
    out << "input: " << format_vec_list(g.gens()) << "\n";
    out << "minimal: " << format_vec_list(minimal.gens()) << "\n";
    std::vector<NashChart> charts = nash_blowup(g);
    out << "charts: " << charts.size() << "\n";
    for (const NashChart& c : charts) {
        GeneratorSet min_chart = minimal_generators(c.chart_gens);
        ChartClass cls = classify(min_chart);
        out << "chart at " << format_vec(c.vertex) << " pair (" << c.pair.first << ","
            << c.pair.second << ")" << (c.ambiguous_vertex ? " ambiguous" : "") << "\n";
        out << "  raw: " << format_vec_list(c.chart_gens.gens()) << "\n";
        out << "  minimal: " << format_vec_list(min_chart.gens()) << "\n";
        out << "  class: " << to_string(cls.kind) << " (" << cls.min_gen_count
            << " minimal generators)" << "\n";
    }
    return out.str();
}

std::string tree_text(const ResolutionTree& t) {
    std::ostringstream out;
    out << "status: "
        << (t.status == ResolutionTree::Status::Resolved ? "resolved" : "depth_cap_reached")
        << "\n";
    out << "depth: ";
    if (t.depth())
        out << *t.depth();
    else
        out << "-";
    out << "\n";
    out << "input: " << format_vec_list(t.root_input) << "\n";
    out << "minimal: " << format_vec_list(t.root_minimal) << "\n";
    out << "nodes: " << t.nodes.size() << "\n";
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const ResolutionNode& n = t.nodes[i];
        out << "node " << i << " level " << n.level << " " << to_string(n.cls.kind);
        if (n.depth_to_smooth) out << " depth " << *n.depth_to_smooth;
        out << ": " << format_vec_list(n.gens.gens()) << "\n";
        for (const auto& e : n.children) {
            out << "  vertex " << format_vec(e.vertex) << " pair (" << e.pair.first << ","
                << e.pair.second << ")" << (e.ambiguous ? " ambiguous" : "") << " -> node "
                << e.node << "\n";
        }
    }
    return out.str();
}

std::string tree_json(const ResolutionTree& t) {
    ordered_json j;
    j["status"] = t.status == ResolutionTree::Status::Resolved ? "resolved" : "depth_cap_reached";
    if (t.depth())
        j["depth"] = *t.depth();
    else
        j["depth"] = nullptr;
    j["max_depth"] = t.max_depth;
    j["max_depth_used"] = t.max_depth_used;
    j["dedupe"] = t.dedupe;
    j["input"] = json_vecs(t.root_input);
    j["minimal"] = json_vecs(t.root_minimal);
    j["nodes"] = ordered_json::array();
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const ResolutionNode& n = t.nodes[i];
        ordered_json node;
        node["id"] = i;
        node["level"] = n.level;
        node["class"] = to_string(n.cls.kind);
        node["min_gen_count"] = n.cls.min_gen_count;
        node["generators"] = json_vecs(n.gens.gens());
        node["expanded"] = n.expanded;
        if (n.depth_to_smooth)
            node["depth_to_smooth"] = *n.depth_to_smooth;
        else
            node["depth_to_smooth"] = nullptr;
        node["children"] = ordered_json::array();
        for (const auto& e : n.children) {
            ordered_json edge;
            edge["vertex"] = json_vec(e.vertex);
            edge["pair"] = ordered_json::array({e.pair.first, e.pair.second});
            edge["ambiguous"] = e.ambiguous;
            edge["node"] = e.node;
            edge["raw"] = json_vecs(e.raw_gens);
            edge["minimal"] = json_vecs(e.minimal_gens);
            node["children"].push_back(std::move(edge));
        }
        j["nodes"].push_back(std::move(node));
    }
    return j.dump(2) + "\n";
}

std::string tree_dot(const ResolutionTree& t) {
    std::ostringstream out;
    out << "digraph blowup {\n";
    out << "  node [shape=box];\n";
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const ResolutionNode& n = t.nodes[i];
        std::string label = std::to_string(i) + ": " + to_string(n.cls.kind) + "\\n" +
                            quote_dot(format_vec_list(n.gens.gens()));
        out << "  n" << i << " [label=\"" << label << "\"";
        if (n.cls.kind == ChartKind::Smooth) out << " peripheries=2";
        out << "];\n";
    }
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        for (const auto& e : t.nodes[i].children)
            out << "  n" << i << " -> n" << e.node << " [label=\""
                << quote_dot(format_vec(e.vertex)) << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::string out = "p,q,theta_edges,depth,status\n";
    for (const ScanRow& r : rows) {
        out += std::to_string(r.p);
        out += ',';
        out += std::to_string(r.q);
        out += ',';
        out += std::to_string(r.theta_edges);
        out += ',';
        if (r.depth) out += std::to_string(*r.depth);
        out += ',';
        out += to_string(r.status);
        out += '\n';
    }
    return out;
}

}  // namespace nashblow
