#include "nashblow/nash.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace nashblow {

std::vector<SumPoint> gamma0(const GeneratorSet& g) {
    std::map<Vec2, std::vector<std::pair<int, int>>, Vec2Lex> grouped;
    int n = static_cast<int>(g.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (det2(g[i], g[j]) == 0) continue;
            grouped[g[i] + g[j]].emplace_back(i, j);
        }
    std::vector<SumPoint> out;
    out.reserve(grouped.size());
    for (auto& [pt, pairs] : grouped) out.push_back(SumPoint{pt, std::move(pairs)});
    return out;
}

std::vector<SumPoint> newton_vertices(const GeneratorSet& g) {
    std::vector<SumPoint> sums = gamma0(g);
    if (sums.empty()) return {};
    Cone2 c = g.spanned_cone();

    // Dominance: s is not a vertex when it lies in some other sum's
    // translated cone s' + C.  In the coordinates f1 = det(r1, .) and
    // f2 = det(., r2) the translated-cone test s - s' ∈ C reads
    // f1(s') <= f1(s) and f2(s') <= f2(s), and (f1, f2) separates points,
    // so the survivors are exactly the staircase minima: sweep in
    // (f1, f2)-ascending order and keep a point iff its f2 beats every
    // earlier one strictly.
    auto f1 = [&](const SumPoint& s) { return det2(c.r1, s.point); };
    auto f2 = [&](const SumPoint& s) { return det2(s.point, c.r2); };
    std::sort(sums.begin(), sums.end(), [&](const SumPoint& a, const SumPoint& b) {
        Int fa = f1(a), fb = f1(b);
        return fa != fb ? fa < fb : f2(a) < f2(b);
    });
    std::vector<SumPoint> alive;
    Int best = 0;
    for (SumPoint& s : sums) {
        Int v = f2(s);
        if (alive.empty() || v < best) {
            best = v;
            alive.push_back(std::move(s));
        }
    }

    // Walk the compact boundary from the r1 side; survivors have pairwise
    // distinct values of f1 = det(r1, .), so the order is strict and the
    // sweep order above is already the boundary order.

    // Keep strict convex turns only (the polyhedron lies above the chain).
    std::vector<SumPoint> hull;
    for (SumPoint& s : alive) {
        while (hull.size() >= 2) {
            Vec2 top = hull[hull.size() - 1].point;
            Vec2 below = hull[hull.size() - 2].point;
            if (det2(top - below, s.point - top) >= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(std::move(s));
    }
    return hull;
}

std::vector<Vec2> newton_vertices_oracle(const GeneratorSet& g) {
    std::vector<SumPoint> sums = gamma0(g);
    if (sums.empty()) return {};
    Cone2 c = g.spanned_cone();

    Int max_coord = 0;
    for (const SumPoint& s : sums) {
        max_coord = std::max<Int>(max_coord, std::llabs(s.point.x));
        max_coord = std::max<Int>(max_coord, std::llabs(s.point.y));
    }
    Int k = checked_add(checked_mul(4, max_coord), 4);

    std::unordered_set<Vec2, Vec2Hash> seen;
    std::vector<Vec2> cloud;
    for (const SumPoint& s : sums)
        for (Int i = 0; i <= k; ++i)
            for (Int j = 0; j <= k; ++j) {
                Vec2 p = s.point + i * c.r1 + j * c.r2;
                if (seen.insert(p).second) cloud.push_back(p);
            }

    // Full convex hull, strict turns only (Andrew's monotone chain).
    std::sort(cloud.begin(), cloud.end(), lex_less);
    auto build = [&](auto begin, auto end) {
        std::vector<Vec2> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   det2(chain[chain.size() - 1] - chain[chain.size() - 2],
                        *it - chain[chain.size() - 1]) <= 0)
                chain.pop_back();
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<Vec2> lower = build(cloud.begin(), cloud.end());
    std::vector<Vec2> upper = build(cloud.rbegin(), cloud.rend());

    std::unordered_set<Vec2, Vec2Hash> hull;
    hull.insert(lower.begin(), lower.end());
    hull.insert(upper.begin(), upper.end());

    std::unordered_set<Vec2, Vec2Hash> base;
    for (const SumPoint& s : sums) base.insert(s.point);

    std::vector<Vec2> out;
    for (Vec2 v : hull)
        if (base.count(v)) out.push_back(v);
    std::sort(out.begin(), out.end(),
              [&](Vec2 a, Vec2 b) { return det2(c.r1, a) < det2(c.r1, b); });
    return out;
}

std::vector<SumPoint> newton_vertices_fastpath(const GeneratorSet& g) {
    if (lattice_index(g) != 1)
        throw std::invalid_argument("fast path requires lattice index 1");
    if (minimal_generators(g).gens() != g.gens())
        throw std::invalid_argument("fast path requires a minimal generator set");
    if (!is_saturated(g))
        throw std::invalid_argument("fast path requires a saturated semigroup");

    int n = static_cast<int>(g.size());
    if (n < 2) throw std::invalid_argument("fast path requires at least two generators");
    std::vector<std::pair<int, int>> pairs;
    auto add = [&](int i, int j) {
        if (det2(g[i], g[j]) == 0)
            throw std::invalid_argument("fast path hit a collinear boundary pair");
        std::pair<int, int> p{i, j};
        if (std::find(pairs.begin(), pairs.end(), p) == pairs.end()) pairs.push_back(p);
    };
    add(0, 1);
    add(n - 2, n - 1);
    for (int i = 1; i + 1 < n; ++i) {
        if (det2(g[i] - g[i - 1], g[i + 1] - g[i]) == 0) continue;
        add(i - 1, i);
        add(i, i + 1);
    }

    std::map<Vec2, std::vector<std::pair<int, int>>, Vec2Lex> grouped;
    for (auto [i, j] : pairs) grouped[g[i] + g[j]].emplace_back(i, j);
    std::vector<SumPoint> out;
    out.reserve(grouped.size());
    for (auto& [pt, ps] : grouped) {
        std::sort(ps.begin(), ps.end());
        out.push_back(SumPoint{pt, std::move(ps)});
    }
    Vec2 r1 = g.spanned_cone().r1;
    std::sort(out.begin(), out.end(), [&](const SumPoint& a, const SumPoint& b) {
        return det2(r1, a.point) < det2(r1, b.point);
    });
    return out;
}

NashChart chart(const GeneratorSet& g, int i, int j) {
    int n = static_cast<int>(g.size());
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw std::invalid_argument("chart needs two distinct generator indices");
    if (det2(g[i], g[j]) == 0)
        throw std::invalid_argument("chart needs a linearly independent generator pair");

    std::vector<Vec2> gens{g[i], g[j]};
    for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (det2(g[k], g[j]) != 0) gens.push_back(g[k] - g[i]);
        if (det2(g[k], g[i]) != 0) gens.push_back(g[k] - g[j]);
    }
    return NashChart{g[i] + g[j], {i, j}, GeneratorSet(std::move(gens)), false};
}

std::vector<NashChart> nash_blowup(const GeneratorSet& g) {
    if (lattice_index(g) != 1)
        throw std::invalid_argument("nash_blowup requires lattice index 1");
    if (!g.strictly_convex())
        throw std::invalid_argument("nash_blowup requires a strictly convex generator set");

    std::vector<NashChart> charts;
    for (const SumPoint& v : newton_vertices(g))
        for (auto [i, j] : v.pairs) {
            NashChart c = chart(g, i, j);
            c.ambiguous_vertex = v.pairs.size() > 1;
            charts.push_back(std::move(c));
        }
    return charts;
}

}  // namespace nashblow
