#include "nashblow/contfrac.hpp"

#include <numeric>
#include <stdexcept>

namespace nashblow {

HJFraction hj_expand(Int num, Int den) {
    if (num < 0 || den < 1) throw std::invalid_argument("hj_expand requires num >= 0 and den >= 1");
    if (std::gcd(num, den) != 1) throw std::invalid_argument("hj_expand requires a reduced fraction");
    HJFraction out;
    while (num != 0) {
        Int a = ceil_div(num, den);
        out.entries.push_back(a);
        Int next = checked_sub(checked_mul(a, den), num);
        num = den;
        den = next;
        if (den == 0) break;
    }
    return out;
}

Rational hj_eval(const HJFraction& f) {
    if (f.entries.empty()) return Rational{0, 1};
    Int num = f.entries.back(), den = 1;
    for (auto it = std::next(f.entries.rbegin()); it != f.entries.rend(); ++it) {
        if (num == 0) throw std::domain_error("continued fraction hits a zero denominator");
        Int new_num = checked_sub(checked_mul(*it, num), den);
        den = num;
        num = new_num;
    }
    if (den < 0) {
        num = checked_sub(0, num);
        den = checked_sub(0, den);
    }
    return Rational{num, den};
}

GeneratorSet generators_from_fraction(const HJFraction& f) {
    if (f.entries.empty()) return GeneratorSet({Vec2{1, 0}, Vec2{0, 1}});
    for (Int a : f.entries)
        if (a < 1) throw std::invalid_argument("fraction entries must be positive");
    std::vector<Vec2> pts;
    pts.reserve(f.entries.size() + 1);
    Vec2 prev{0, -1}, cur{1, 0};
    pts.push_back(cur);
    for (Int a : f.entries) {
        Vec2 next{checked_sub(checked_mul(a, cur.x), prev.x),
                  checked_sub(checked_mul(a, cur.y), prev.y)};
        pts.push_back(next);
        prev = cur;
        cur = next;
    }
    return GeneratorSet(std::move(pts));
}

HJFraction invert_fraction(const HJFraction& f) {
    Rational r = hj_eval(f);
    if (r.num < 1) throw std::domain_error("only positive fractions can be inverted");
    return hj_expand(r.den, r.num);
}

FractionShape fraction_shape(const HJFraction& f) {
    const auto& e = f.entries;
    FractionShape shape;
    shape.length = static_cast<int>(e.size());
    if (e.size() < 2 || e.front() != 1) return shape;

    bool all_two = true, all_three = true;
    int off_count = 0;
    int off_pos = 0;
    for (std::size_t i = 1; i < e.size(); ++i) {
        if (e[i] != 2) all_two = false;
        if (e[i] != 3) all_three = false;
        if (e[i] != 2) {
            ++off_count;
            off_pos = static_cast<int>(i);
        }
    }
    if (all_three) {
        shape.kind = FractionShape::Kind::Fibonacci;
    } else if (all_two) {
        shape.kind = FractionShape::Kind::OneSegment;
    } else if (off_count == 1 && e[off_pos] >= 3) {
        shape.kind = FractionShape::Kind::TwoSegments;
        shape.position = off_pos + 1;
        shape.value = e[off_pos];
    }
    return shape;
}

std::vector<Int> self_intersections(const Cone2& c) {
    NormalForm nf = normal_form(c);
    if (nf.p == 0) return {};
    HJFraction f = hj_expand(nf.q, nf.p);
    std::vector<Int> out;
    out.reserve(f.entries.size());
    for (Int a : f.entries) out.push_back(checked_sub(0, a));
    return out;
}

}  // namespace nashblow
