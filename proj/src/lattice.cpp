#include "nashblow/lattice.hpp"

#include <numeric>

namespace nashblow {

Int UnimodularMap::det() const {
    return checked_sub(checked_mul(m11, m22), checked_mul(m12, m21));
}

UnimodularMap UnimodularMap::inverse() const {
    Int d = det();
    if (d != 1 && d != -1) throw std::invalid_argument("inverse: map is not unimodular");
    // adj / det, and 1/det == det for det = +-1
    return {checked_mul(d, m22), checked_mul(d, checked_sub(0, m12)),
            checked_mul(d, checked_sub(0, m21)), checked_mul(d, m11)};
}

UnimodularMap compose(const UnimodularMap& a, const UnimodularMap& b) {
    return {checked_add(checked_mul(a.m11, b.m11), checked_mul(a.m12, b.m21)),
            checked_add(checked_mul(a.m11, b.m12), checked_mul(a.m12, b.m22)),
            checked_add(checked_mul(a.m21, b.m11), checked_mul(a.m22, b.m21)),
            checked_add(checked_mul(a.m21, b.m12), checked_mul(a.m22, b.m22))};
}

Cone2::Cone2(Vec2 u, Vec2 v) {
    r1 = primitive(u);
    r2 = primitive(v);
    Int d = det2(r1, r2);
    if (d == 0) throw std::invalid_argument("cone rays are collinear");
    if (d < 0) std::swap(r1, r2);
}

bool cone_contains(const Cone2& c, Vec2 v) {
    return det2(c.r1, v) >= 0 && det2(v, c.r2) >= 0;
}

Int lattice_index(const std::vector<Vec2>& gens) {
    if (gens.empty()) throw std::invalid_argument("lattice_index: empty generator list");
    Int g = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            g = std::gcd(g, det2(gens[i], gens[j]));
    return g < 0 ? -g : g;
}

ExtGcd ext_gcd(Int a, Int b) {
    if (b == 0) return a >= 0 ? ExtGcd{a, 1, 0} : ExtGcd{-a, -1, 0};
    ExtGcd r = ext_gcd(b, a % b);
    return {r.g, r.y, checked_sub(r.x, checked_mul(a / b, r.y))};
}

UnimodularMap ray_to_first_axis(Vec2 e, bool positive_det) {
    auto [g, s, t] = ext_gcd(e.x, e.y);
    if (g != 1) throw std::invalid_argument("ray_to_first_axis: ray is not primitive");
    if (positive_det) return {s, t, checked_sub(0, e.y), e.x};
    return {s, t, e.y, checked_sub(0, e.x)};
}

NormalForm normal_form(const Cone2& c) {
    // Map one ray to (1,0) keeping the image counterclockwise, then shear the
    // other ray's image (p', q) into 0 <= p < q.
    auto candidate = [](Vec2 axis, Vec2 other, bool positive_det) {
        UnimodularMap t0 = ray_to_first_axis(axis, positive_det);
        Vec2 o = apply_map(t0, other);
        Int m = -floor_div(o.x, o.y);  // o.y = |det| of the primitive rays > 0
        UnimodularMap t = compose(UnimodularMap{1, m, 0, 1}, t0);
        return NormalForm{checked_add(o.x, checked_mul(m, o.y)), o.y, t};
    };
    NormalForm a = candidate(c.r1, c.r2, true);
    NormalForm b = candidate(c.r2, c.r1, false);
    return a.p <= b.p ? a : b;
}

std::string to_string(Vec2 v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

}  // namespace nashblow
