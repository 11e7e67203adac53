#pragma once

// Iterated Nash blowups: chart classification, breadth-first resolution
// trees deduplicated by canonical form, and coprime-parameter scans.

#include "nashblow/lattice.hpp"
#include "nashblow/nash.hpp"
#include "nashblow/semigroup.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace nashblow {

enum class ChartKind { Smooth, ThreeGen, TwoSegments, OneSegment, Other };

std::string to_string(ChartKind k);

struct ChartClass {
    ChartKind kind = ChartKind::Other;
    int min_gen_count = 0;

    friend bool operator==(const ChartClass&, const ChartClass&) = default;
};

// Classification of the semigroup (requires lattice_index == 1), computed on
// the minimal generating set.  Precedence: two minimal generators -> Smooth;
// three -> ThreeGen; otherwise a saturated semigroup whose boundary has one
// or two compact edges -> OneSegment / TwoSegments; anything else -> Other.
ChartClass classify(const GeneratorSet& g);

struct ResolutionNode {
    GeneratorSet gens;  // canonical form of the minimalized generator set
    ChartClass cls;
    int level = 0;          // breadth-first level at first encounter
    bool expanded = false;  // blowup charts were computed

    struct ChildEdge {
        Vec2 vertex;                    // in this node's coordinates
        std::pair<int, int> pair;       // indices into this node's gens
        bool ambiguous = false;
        int node = -1;                  // index into ResolutionTree::nodes
        std::vector<Vec2> raw_gens;     // chart generators before minimalizing
        std::vector<Vec2> minimal_gens; // their minimal generators
    };
    std::vector<ChildEdge> children;

    std::optional<int> depth_to_smooth;  // unset while any path is unresolved
};

struct ResolutionTree {
    enum class Status { Resolved, DepthCapReached };

    std::vector<ResolutionNode> nodes;  // nodes[0] is the root
    std::unordered_map<std::string, int> node_store;  // canonical key -> node
    Status status = Status::DepthCapReached;
    int max_depth = 0;       // requested cap
    int max_depth_used = 0;  // deepest level actually created
    bool dedupe = true;

    std::vector<Vec2> root_input;    // generators as supplied
    std::vector<Vec2> root_minimal;  // their minimal generators

    std::optional<int> depth() const { return nodes.front().depth_to_smooth; }
};

// Breadth-first iterated blowup.  Every chart is minimalized, canonicalized
// and (with dedupe) shared through node_store; smooth nodes are leaves.
ResolutionTree resolve(const GeneratorSet& g, int max_depth = 20, bool dedupe = true);

struct ScanRow {
    enum class Status { Resolved, DepthCap, Error };

    Int p = 0;
    Int q = 1;
    int theta_edges = 0;
    std::optional<int> depth;
    Status status = Status::Error;
    std::string error;
};

std::string to_string(ScanRow::Status s);

// One resolution per coprime pair 0 <= p < q <= q_max, ordered by q then p.
// Per-row failures are recorded in the row, never propagated.
std::vector<ScanRow> scan(Int q_max, int max_depth = 20);

}  // namespace nashblow
