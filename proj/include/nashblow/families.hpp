#pragma once

// Named generator-set families with known resolution behaviour: single
// lattice segments, two-segment boundaries, and the Fibonacci family
// together with its symmetry and identities.

#include "nashblow/lattice.hpp"
#include "nashblow/semigroup.hpp"

#include <array>
#include <utility>

namespace nashblow {

// {(1,j) : 0 <= j <= k}, k >= 2 (k < 2 would already be smooth).
GeneratorSet one_segment_gamma(Int k);

// Vertical segment of k+1 points followed by m steps of (a,b); saturation
// forces b = a*k + 1 (hence gcd(a,b) = 1).
struct TwoSegmentParams {
    Int k = 1, a = 1, b = 2, m = 1;
};

GeneratorSet two_segment_gamma(const TwoSegmentParams& p);

// f(1) = f(2) = 1, f(j) = f(j-1) + f(j-2), extended by f(-1) = 1, f(0) = 0.
Int fibonacci(Int j);

// Both sides of f(n)f(n+r+s) - f(n+r)f(n+s) = (-1)^(n+1) f(r)f(s).
std::pair<Int, Int> vajda(Int n, Int r, Int s);

// {(1,0)} ∪ {(f(2i-1), f(2i)) : 1 <= i <= l/2}, l >= 4 even.
GeneratorSet fibonacci_gamma(Int l);

// The six collinear minimal generators of the interior blowup chart of the
// Fibonacci family at even index i >= 2; consecutive determinants are 1 and
// f(i+1)x - f(i)y takes the value 1 on all six.
std::array<Vec2, 6> fibonacci_chart_vectors(Int i);

// Involution [[f(l-1), -f(l-2)], [f(l), -f(l-1)]] of determinant -1 that
// reverses fibonacci_gamma(l).
UnimodularMap fibonacci_symmetry(Int l);

}  // namespace nashblow
