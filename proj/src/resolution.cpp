#include "nashblow/resolution.hpp"

#include "nashblow/contfrac.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace nashblow {

std::string to_string(ChartKind k) {
    switch (k) {
        case ChartKind::Smooth: return "Smooth";
        case ChartKind::ThreeGen: return "ThreeGen";
        case ChartKind::TwoSegments: return "TwoSegments";
        case ChartKind::OneSegment: return "OneSegment";
        case ChartKind::Other: return "Other";
    }
    throw std::logic_error("unknown chart kind");
}

namespace {

// Classification rules applied to a set that is already its own minimal
// generating set.  Saturation is decided by comparing against the Hilbert
// basis of the spanned cone: the semigroup is saturated exactly when its
// minimal generating set is that basis (both are canonically ordered, so
// vector equality is set equality).
ChartClass classify_minimal(const GeneratorSet& m) {
    int count = static_cast<int>(m.size());
    if (count == 2) {
        Int d = det2(m[0], m[1]);
        if (d != 1 && d != -1)
            throw std::logic_error("index-1 semigroup with two minimal generators must be unimodular");
        return {ChartKind::Smooth, count};
    }
    if (count == 3) return {ChartKind::ThreeGen, count};
    GeneratorSet hb = hilbert_basis(m.spanned_cone());
    if (hb.gens() == m.gens()) {
        const auto& pts = hb.gens();
        int edges = 1;
        for (std::size_t i = 1; i + 1 < pts.size(); ++i)
            if (det2(pts[i] - pts[i - 1], pts[i + 1] - pts[i]) != 0) ++edges;
        if (edges == 1) return {ChartKind::OneSegment, count};
        if (edges == 2) return {ChartKind::TwoSegments, count};
    }
    return {ChartKind::Other, count};
}

}  // namespace

ChartClass classify(const GeneratorSet& g) {
    if (lattice_index(g) != 1) throw std::invalid_argument("classify requires lattice index 1");
    return classify_minimal(minimal_generators(g));
}

ResolutionTree resolve(const GeneratorSet& g, int max_depth, bool dedupe) {
    if (max_depth < 0) throw std::invalid_argument("max_depth must be nonnegative");
    if (lattice_index(g) != 1) throw std::invalid_argument("resolve requires lattice index 1");

    ResolutionTree t;
    t.max_depth = max_depth;
    t.dedupe = dedupe;
    t.root_input = g.gens();

    GeneratorSet root_min = minimal_generators(g);
    t.root_minimal = root_min.gens();

    // Returns the node index and whether the node is new (needs expanding).
    auto intern = [&](const GeneratorSet& min_set, int level) -> std::pair<int, bool> {
        CanonicalForm cf = canonical_form(min_set);
        std::string key = canonical_key(cf.gens);
        if (dedupe)
            if (auto it = t.node_store.find(key); it != t.node_store.end())
                return {it->second, false};
        int idx = static_cast<int>(t.nodes.size());
        // min_set is minimal and canonical_form applies a lattice symmetry,
        // so cf.gens is its own minimal generating set.
        t.nodes.push_back(ResolutionNode{cf.gens, classify_minimal(cf.gens), level, false, {}, {}});
        t.node_store.emplace(std::move(key), idx);
        return {idx, true};
    };

    std::deque<int> queue{intern(root_min, 0).first};
    while (!queue.empty()) {
        int idx = queue.front();
        queue.pop_front();
        if (t.nodes[idx].cls.kind == ChartKind::Smooth) continue;
        if (t.nodes[idx].level >= max_depth) continue;
        t.nodes[idx].expanded = true;
        GeneratorSet gens = t.nodes[idx].gens;  // nodes may reallocate below
        int level = t.nodes[idx].level;
        for (const NashChart& c : nash_blowup(gens)) {
            GeneratorSet min_child = minimal_generators(c.chart_gens);
            auto [child, fresh] = intern(min_child, level + 1);
            if (fresh) queue.push_back(child);
            ResolutionNode::ChildEdge e;
            e.vertex = c.vertex;
            e.pair = c.pair;
            e.ambiguous = c.ambiguous_vertex;
            e.node = child;
            e.raw_gens = c.chart_gens.gens();
            e.minimal_gens = min_child.gens();
            t.nodes[idx].children.push_back(std::move(e));
        }
    }

    for (const ResolutionNode& n : t.nodes)
        t.max_depth_used = std::max(t.max_depth_used, n.level);

    // Longest-path-to-smooth propagation; nodes on unresolved or capped
    // branches keep an unset depth.
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = t.nodes.rbegin(); it != t.nodes.rend(); ++it) {
            ResolutionNode& n = *it;
            if (n.depth_to_smooth) continue;
            if (n.cls.kind == ChartKind::Smooth) {
                n.depth_to_smooth = 0;
                changed = true;
                continue;
            }
            if (!n.expanded || n.children.empty()) continue;
            int worst = 0;
            bool complete = true;
            for (const auto& e : n.children) {
                const auto& d = t.nodes[e.node].depth_to_smooth;
                if (!d) {
                    complete = false;
                    break;
                }
                worst = std::max(worst, *d);
            }
            if (complete) {
                n.depth_to_smooth = 1 + worst;
                changed = true;
            }
        }
    }

    t.status = t.nodes.front().depth_to_smooth ? ResolutionTree::Status::Resolved
                                               : ResolutionTree::Status::DepthCapReached;
    return t;
}

std::string to_string(ScanRow::Status s) {
    switch (s) {
        case ScanRow::Status::Resolved: return "resolved";
        case ScanRow::Status::DepthCap: return "depth_cap";
        case ScanRow::Status::Error: return "error";
    }
    throw std::logic_error("unknown scan status");
}

std::vector<ScanRow> scan(Int q_max, int max_depth) {
    if (q_max < 1) throw std::invalid_argument("scan requires q_max >= 1");
    std::vector<ScanRow> rows;
    for (Int q = 1; q <= q_max; ++q)
        for (Int p = 0; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            ScanRow row;
            row.p = p;
            row.q = q;
            try {
                Cone2 c(Vec2{1, 0}, Vec2{p, q});
                row.theta_edges = theta_profile(c).compact_edge_count;
                ResolutionTree t = resolve(hilbert_basis(c), max_depth);
                if (t.status == ResolutionTree::Status::Resolved) {
                    row.status = ScanRow::Status::Resolved;
                    row.depth = t.depth();
                } else {
                    row.status = ScanRow::Status::DepthCap;
                }
            } catch (const std::exception& e) {
                row.status = ScanRow::Status::Error;
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
    return rows;
}

}  // namespace nashblow
