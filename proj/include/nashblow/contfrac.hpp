#pragma once

// Hirzebruch-Jung continued fractions:  p/q = a1 - 1/(a2 - 1/(... - 1/an)).
// They encode Hilbert bases of normal-form cones and the self-intersection
// data of the minimal resolution.

#include "nashblow/lattice.hpp"
#include "nashblow/semigroup.hpp"

#include <vector>

namespace nashblow {

struct HJFraction {
    std::vector<Int> entries;

    friend bool operator==(const HJFraction&, const HJFraction&) = default;
};

// Reduced fraction, den > 0.
struct Rational {
    Int num = 0;
    Int den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

// Expansion of num/den (num >= 0, den >= 1, coprime) by repeated
// ceil-and-reciprocate; every entry is >= 2 except possibly a leading 1.
HJFraction hj_expand(Int num, Int den);

// Exact evaluation; throws on a vanishing intermediate denominator.
Rational hj_eval(const HJFraction& f);

// The points (p_i, q_i), 0 <= i <= n, of the convergent recurrences
//   p_{-1} = 0, p_0 = 1, p_i = a_i p_{i-1} - p_{i-2}
//   q_0 = 0,  q_1 = 1,  q_i = a_i q_{i-1} - q_{i-2}.
// For the empty fraction returns {(1,0),(0,1)}.
GeneratorSet generators_from_fraction(const HJFraction& f);

// Expansion of the reciprocal value.  Rejects fractions evaluating to a
// non-positive number (no inverse).
HJFraction invert_fraction(const HJFraction& f);

// Syntactic classification of an expansion.
struct FractionShape {
    enum class Kind { OneSegment, TwoSegments, Fibonacci, Other };

    Kind kind = Kind::Other;
    int position = 0;  // 1-based index of the single entry > 2 (TwoSegments)
    Int value = 0;     // that entry's value (TwoSegments)
    int length = 0;    // total number of entries

    friend bool operator==(const FractionShape&, const FractionShape&) = default;
};

FractionShape fraction_shape(const HJFraction& f);

// Negated entries of the reciprocal expansion of the cone's normal form:
// the self-intersection numbers of the exceptional curves of the minimal
// resolution.  Empty for a smooth cone.
std::vector<Int> self_intersections(const Cone2& c);

}  // namespace nashblow
