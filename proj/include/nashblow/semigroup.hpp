#pragma once

// Finitely generated subsemigroups of Z^2: membership, minimal generators,
// Hilbert bases of rational cones, saturation, boundary profiles and a
// GL(2,Z)-canonical form used to identify semigroups up to lattice symmetry.

#include "nashblow/lattice.hpp"

#include <vector>

namespace nashblow {

// Ordered set of nonzero lattice vectors (duplicates and (0,0) removed).
// When the set lies in an open halfplane (strictly convex span) the
// generators are stored in counterclockwise angular order, collinear ties
// sorted short-to-long; otherwise storage order is lexicographic and the
// convexity flag is false.  Most semigroup operations require convexity.
class GeneratorSet {
public:
    explicit GeneratorSet(std::vector<Vec2> vs);

    const std::vector<Vec2>& gens() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    const Vec2& operator[](std::size_t i) const { return gens_[i]; }
    auto begin() const { return gens_.begin(); }
    auto end() const { return gens_.end(); }

    bool strictly_convex() const { return convex_; }

    // Primitive extreme directions of the spanned cone (first/last in the
    // counterclockwise order).  Equal when all generators are collinear.
    Vec2 ray_first() const;
    Vec2 ray_last() const;

    // Cone spanned by the generators; throws when the span is a single ray.
    Cone2 spanned_cone() const;

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
    std::vector<Vec2> gens_;
    bool convex_ = false;
    Vec2 first_dir_{};
    Vec2 last_dir_{};
};

Int lattice_index(const GeneratorSet& g);

// Integer functional w with w·g >= 1 for every generator.
Vec2 positive_functional(const GeneratorSet& g);

// Membership of v in the semigroup generated by g (graded descent, memoized).
bool contains(const GeneratorSet& g, Vec2 v);

// The unique minimal generating set (indecomposable elements).
GeneratorSet minimal_generators(const GeneratorSet& g);

// Requires lattice_index == 1.  True iff the minimal generating set has two
// elements; their determinant is then forced to be +-1.
bool is_smooth(const GeneratorSet& g);

// Hilbert basis of C ∩ Z^2, counterclockwise, via the normal form and the
// continued-fraction recurrence mapped back through the inverse map.
GeneratorSet hilbert_basis(const Cone2& c);

// Independent oracle: graded enumeration of cone points up to twice the
// largest predicted generator grade, then elimination of decomposables.
GeneratorSet hilbert_basis_bruteforce(const Cone2& c);

// True iff the semigroup equals C ∩ Z^2 for its spanned cone C.
bool is_saturated(const GeneratorSet& g);

// Boundary of the convex hull of the nonzero lattice points of a cone:
// the Hilbert basis with its strict turning points marked.
struct ThetaProfile {
    std::vector<Vec2> vertices;      // subsequence of hilbert_basis
    int compact_edge_count = 0;      // |vertices| - 1
    std::vector<Vec2> hilbert_basis; // counterclockwise
};

ThetaProfile theta_profile(const Cone2& c);

// GL(2,Z)-canonical presentation: map an extreme ray to (1,0), shear the
// other extreme into 0 <= a < b, sort images lexicographically; done for
// both rays, the lexicographically smaller image list wins.
struct CanonicalForm {
    GeneratorSet gens;
    UnimodularMap map;  // sends the input set onto the canonical one
};

CanonicalForm canonical_form(const GeneratorSet& g);

GeneratorSet apply_map(const UnimodularMap& t, const GeneratorSet& g);

// Deterministic serialization of a generator set, used as a dictionary key.
std::string canonical_key(const GeneratorSet& g);

}  // namespace nashblow
