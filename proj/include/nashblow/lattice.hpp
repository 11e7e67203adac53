#pragma once

// Exact integer planar lattice primitives: vectors, 2x2 unimodular maps,
// rational cones and their normal form.  All arithmetic is 64-bit and
// overflow-checked; overflow throws, it is never wrapped silently.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace nashblow {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

struct Vec2 {
    Int x = 0;
    Int y = 0;

    bool is_zero() const { return x == 0 && y == 0; }

    friend bool operator==(const Vec2&, const Vec2&) = default;
    friend Vec2 operator+(Vec2 a, Vec2 b) { return {checked_add(a.x, b.x), checked_add(a.y, b.y)}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)}; }
    friend Vec2 operator*(Int s, Vec2 v) { return {checked_mul(s, v.x), checked_mul(s, v.y)}; }
    Vec2 operator-() const { return {checked_sub(0, x), checked_sub(0, y)}; }
};

inline bool lex_less(Vec2 a, Vec2 b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }

struct Vec2Lex {
    bool operator()(Vec2 a, Vec2 b) const { return lex_less(a, b); }
};

struct Vec2Hash {
    std::size_t operator()(Vec2 v) const noexcept {
        std::uint64_t h = static_cast<std::uint64_t>(v.x) * 0x9e3779b97f4a7c15ull;
        h ^= static_cast<std::uint64_t>(v.y) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

inline Int det2(Vec2 u, Vec2 v) {
    return checked_sub(checked_mul(u.x, v.y), checked_mul(u.y, v.x));
}

inline Int dot2(Vec2 u, Vec2 v) {
    return checked_add(checked_mul(u.x, v.x), checked_mul(u.y, v.y));
}

// v divided by gcd(|x|,|y|); rejects the zero vector.
inline Vec2 primitive(Vec2 v) {
    if (v.is_zero()) throw std::invalid_argument("primitive: zero vector");
    Int g = std::gcd(v.x, v.y);
    return {v.x / g, v.y / g};
}

// Integer matrix [[m11,m12],[m21,m22]] acting on column vectors, det = +-1.
struct UnimodularMap {
    Int m11 = 1, m12 = 0, m21 = 0, m22 = 1;

    static UnimodularMap identity() { return {}; }
    Int det() const;
    UnimodularMap inverse() const;

    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

// Composition a∘b: apply b first, then a.
UnimodularMap compose(const UnimodularMap& a, const UnimodularMap& b);

inline Vec2 apply_map(const UnimodularMap& t, Vec2 v) {
    return {checked_add(checked_mul(t.m11, v.x), checked_mul(t.m12, v.y)),
            checked_add(checked_mul(t.m21, v.x), checked_mul(t.m22, v.y))};
}

// Two-dimensional rational cone spanned by two rays.  The constructor
// primitivizes the rays, orients them counterclockwise (det(r1,r2) > 0) and
// rejects degenerate input (parallel or opposite rays).
struct Cone2 {
    Vec2 r1, r2;
    Cone2(Vec2 u, Vec2 v);
};

bool cone_contains(const Cone2& c, Vec2 v);

// gcd of all 2x2 minors of the generator list; 0 when the span has rank < 2.
Int lattice_index(const std::vector<Vec2>& gens);

// Unimodular image cone((1,0),(p,q)) with 0 <= p < q, gcd(p,q) = 1.  Of the
// two ray orderings (giving p and p' with p*p' = 1 mod q) the smaller p wins.
struct NormalForm {
    Int p = 0;
    Int q = 1;
    UnimodularMap map;  // sends the input cone onto cone((1,0),(p,q))
};

NormalForm normal_form(const Cone2& c);

// Extended gcd: g = gcd(a,b) >= 0 with a*x + b*y = g.
struct ExtGcd {
    Int g, x, y;
};
ExtGcd ext_gcd(Int a, Int b);

// Unimodular map sending the primitive ray e to (1,0); the sign of the
// determinant is chosen by the caller.
UnimodularMap ray_to_first_axis(Vec2 e, bool positive_det);

// Exact floor/ceil division, b > 0.
inline Int floor_div(Int a, Int b) {
    Int q = a / b, r = a % b;
    return (r != 0 && r < 0) ? q - 1 : q;
}

inline Int ceil_div(Int a, Int b) {
    Int q = a / b, r = a % b;
    return (r != 0 && r > 0) ? q + 1 : q;
}

std::string to_string(Vec2 v);

}  // namespace nashblow
