#pragma once

// One combinatorial Nash blowup step for an affine toric surface given by a
// generator set Γ: pairwise sums Γ0, the vertices of the Newton polyhedron
// N = Conv(Γ0 + C), and the chart semigroup attached to each vertex.

#include "nashblow/lattice.hpp"
#include "nashblow/semigroup.hpp"

#include <utility>
#include <vector>

namespace nashblow {

// A pairwise-sum point together with every index pair producing it.
struct SumPoint {
    Vec2 point;
    std::vector<std::pair<int, int>> pairs;  // i < j, indices into Γ

    friend bool operator==(const SumPoint&, const SumPoint&) = default;
};

// All sums γi + γj (i < j) with det(γi,γj) != 0, grouped by point and sorted
// lexicographically.  Empty iff all generator pairs are collinear.
std::vector<SumPoint> gamma0(const GeneratorSet& g);

// Vertices of Conv(Γ0 + C), C the cone spanned by Γ: dominance filter
// (drop s when s - s' lies in C for another sum point s'), sort by the
// functional vanishing on the first extreme ray, keep strict convex turns.
std::vector<SumPoint> newton_vertices(const GeneratorSet& g);

// Independent oracle: convex hull of the truncated point cloud
// {s + i*r1 + j*r2 : s in Γ0, 0 <= i,j <= K}, K = 4*max|coordinate| + 4,
// intersected with Γ0.  Returns points only, in the same order.
std::vector<Vec2> newton_vertices_oracle(const GeneratorSet& g);

// Closed-form vertex list for a saturated minimal generator set ordered
// counterclockwise: both end pairs plus the two pairs flanking every
// interior boundary vertex.  Throws when the precondition fails; callers
// fall back to newton_vertices.
std::vector<SumPoint> newton_vertices_fastpath(const GeneratorSet& g);

struct NashChart {
    Vec2 vertex;                     // γi + γj
    std::pair<int, int> pair;        // (i, j), indices into Γ
    GeneratorSet chart_gens;         // {γi, γj} ∪ A(γi) ∪ A(γj)
    bool ambiguous_vertex = false;   // vertex admits several decompositions
};

// Chart at the sum γi + γj (requires det(γi,γj) != 0):
//   A(γi) = { γk - γi : k ∉ {i,j}, det(γk, γj) != 0 }
//   A(γj) = { γk - γj : k ∉ {i,j}, det(γk, γi) != 0 }.
NashChart chart(const GeneratorSet& g, int i, int j);

// One blowup step: a chart for every (vertex, decomposition) pair of the
// Newton polyhedron.  Requires lattice_index == 1 and strict convexity.
std::vector<NashChart> nash_blowup(const GeneratorSet& g);

}  // namespace nashblow
