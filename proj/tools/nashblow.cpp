// Command-line front end for the blowup engine: parse a generator-set
// specification, run the requested computation, print text/JSON/DOT/CSV.
//
// Exit codes: 0 success, 2 malformed input, 3 lattice index != 1,
// 4 depth cap reached, 5 output IO failure.

#include "nashblow/contfrac.hpp"
#include "nashblow/families.hpp"
#include "nashblow/nash.hpp"
#include "nashblow/render.hpp"
#include "nashblow/resolution.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace nashblow;

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 2;
constexpr int kExitIndex = 3;
constexpr int kExitDepthCap = 4;
constexpr int kExitIo = 5;

Int parse_int(const std::string& s) {
    std::size_t used = 0;
    Int value = 0;
    try {
        value = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

Vec2 parse_vec(const std::string& s) {
    std::vector<std::string> parts = split(s, ',');
    if (parts.size() != 2)
        throw std::invalid_argument("expected 'x,y', got '" + s + "'");
    return Vec2{parse_int(parts[0]), parse_int(parts[1])};
}

// Exactly one of the three variants is non-empty.
struct GammaSpec {
    std::string cone;    // "p/q", the cone spanned by (1,0) and (p,q)
    std::string gens;    // "x,y;x,y;..."
    std::string family;  // "fib:L" | "oneseg:K" | "twoseg:K,A,B,M"
};

void add_spec_options(CLI::App* cmd, GammaSpec& spec) {
    cmd->add_option("--cone", spec.cone, "cone spanned by (1,0) and (p,q), as p/q");
    cmd->add_option("--gens", spec.gens, "generators as 'x,y;x,y;...'");
    cmd->add_option("--family", spec.family,
                    "named family: fib:L | oneseg:K | twoseg:K,A,B,M");
}

void check_one_variant(const GammaSpec& spec) {
    int n = !spec.cone.empty() + !spec.gens.empty() + !spec.family.empty();
    if (n != 1)
        throw std::invalid_argument("exactly one of --cone, --gens, --family is required");
}

Cone2 parse_cone(const std::string& s) {
    std::vector<std::string> parts = split(s, '/');
    if (parts.size() != 2)
        throw std::invalid_argument("expected 'p/q', got '" + s + "'");
    return Cone2(Vec2{1, 0}, Vec2{parse_int(parts[0]), parse_int(parts[1])});
}

GeneratorSet parse_family(const std::string& s) {
    std::size_t colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("expected 'name:params', got '" + s + "'");
    std::string name = s.substr(0, colon);
    std::vector<std::string> params = split(s.substr(colon + 1), ',');
    if (name == "fib") {
        if (params.size() != 1) throw std::invalid_argument("fib takes one parameter: fib:L");
        return fibonacci_gamma(parse_int(params[0]));
    }
    if (name == "oneseg") {
        if (params.size() != 1)
            throw std::invalid_argument("oneseg takes one parameter: oneseg:K");
        return one_segment_gamma(parse_int(params[0]));
    }
    if (name == "twoseg") {
        if (params.size() != 4)
            throw std::invalid_argument("twoseg takes four parameters: twoseg:K,A,B,M");
        return two_segment_gamma(TwoSegmentParams{parse_int(params[0]), parse_int(params[1]),
                                                  parse_int(params[2]), parse_int(params[3])});
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

GeneratorSet build_gamma(const GammaSpec& spec) {
    check_one_variant(spec);
    if (!spec.cone.empty()) return hilbert_basis(parse_cone(spec.cone));
    if (!spec.family.empty()) return parse_family(spec.family);
    std::vector<Vec2> vs;
    for (const std::string& part : split(spec.gens, ';')) vs.push_back(parse_vec(part));
    return GeneratorSet(std::move(vs));
}

Cone2 build_cone(const GammaSpec& spec) {
    check_one_variant(spec);
    if (!spec.cone.empty()) return parse_cone(spec.cone);
    return build_gamma(spec).spanned_cone();
}

int cmd_hilbert(const GammaSpec& spec) {
    std::cout << hilbert_report(build_cone(spec));
    return kExitOk;
}

int cmd_nash(const GammaSpec& spec) {
    GeneratorSet g = build_gamma(spec);
    if (!g.strictly_convex())
        throw std::invalid_argument("generator set is not strictly convex");
    if (lattice_index(g) != 1) {
        std::cerr << "error: generator set has lattice index " << lattice_index(g)
                  << ", expected 1\n";
        return kExitIndex;
    }
    std::cout << blowup_report(g);
    return kExitOk;
}

int cmd_resolve(const GammaSpec& spec, int max_depth, bool dedupe, const std::string& format) {
    GeneratorSet g = build_gamma(spec);
    if (!g.strictly_convex())
        throw std::invalid_argument("generator set is not strictly convex");
    if (lattice_index(g) != 1) {
        std::cerr << "error: generator set has lattice index " << lattice_index(g)
                  << ", expected 1\n";
        return kExitIndex;
    }
    ResolutionTree t = resolve(g, max_depth, dedupe);
    if (format == "text")
        std::cout << tree_text(t);
    else if (format == "json")
        std::cout << tree_json(t);
    else if (format == "dot")
        std::cout << tree_dot(t);
    else
        throw std::invalid_argument("unknown format '" + format + "'");
    if (t.status != ResolutionTree::Status::Resolved) {
        std::cerr << "error: depth cap " << max_depth << " reached before resolution\n";
        return kExitDepthCap;
    }
    return kExitOk;
}

int cmd_scan(Int q_max, int max_depth, const std::string& out_path) {
    if (q_max < 2) throw std::invalid_argument("scan requires --qmax >= 2");
    std::string csv = scan_csv(scan(q_max, max_depth));
    if (out_path.empty()) {
        std::cout << csv;
        return kExitOk;
    }
    std::string path = out_path;
    const char* out_dir = std::getenv("NASHBLOW_OUT_DIR");
    if (out_dir && *out_dir && path.front() != '/') path = std::string(out_dir) + "/" + path;
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return kExitIo;
    }
    out << csv;
    out.flush();
    if (!out) {
        std::cerr << "error: failed writing '" << path << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Iterated Nash blowups of affine toric surfaces, exactly"};
    app.require_subcommand(1);

    GammaSpec hilbert_spec;
    CLI::App* hilbert = app.add_subcommand(
        "hilbert", "Hilbert basis, continued fraction and boundary data of a cone");
    add_spec_options(hilbert, hilbert_spec);

    GammaSpec nash_spec;
    CLI::App* nash = app.add_subcommand("nash", "one blowup step: charts of the Newton polyhedron");
    add_spec_options(nash, nash_spec);

    GammaSpec resolve_spec;
    int resolve_depth = 20;
    bool no_dedupe = false;
    std::string format = "text";
    CLI::App* resolve = app.add_subcommand("resolve", "iterate blowups until every chart is smooth");
    add_spec_options(resolve, resolve_spec);
    resolve->add_option("--max-depth", resolve_depth, "iteration cap")
        ->envname("NASHBLOW_MAX_DEPTH");
    resolve->add_flag("--no-dedupe", no_dedupe, "expand repeated charts instead of sharing them");
    resolve->add_option("--format", format, "text | json | dot");

    Int q_max = 0;
    int scan_depth = 20;
    std::string out_path;
    CLI::App* scan_cmd =
        app.add_subcommand("scan", "resolve every coprime (p,q) with q <= qmax; emit CSV");
    scan_cmd->add_option("--qmax", q_max, "largest q to scan")->required();
    scan_cmd->add_option("--max-depth", scan_depth, "iteration cap")
        ->envname("NASHBLOW_MAX_DEPTH");
    scan_cmd->add_option("--out", out_path,
                         "CSV output path (default stdout); relative paths join NASHBLOW_OUT_DIR");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitMalformed;
    }

    try {
        if (hilbert->parsed()) return cmd_hilbert(hilbert_spec);
        if (nash->parsed()) return cmd_nash(nash_spec);
        if (resolve->parsed()) return cmd_resolve(resolve_spec, resolve_depth, !no_dedupe, format);
        if (scan_cmd->parsed()) return cmd_scan(q_max, scan_depth, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitMalformed;
}
