#include "nashblow/semigroup.hpp"

#include "nashblow/contfrac.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <ranges>
#include <unordered_set>

namespace nashblow {

namespace {

Int l1(Vec2 v) { return std::llabs(v.x) + std::llabs(v.y); }

// Half-plane split used to order directions over the full circle:
// 0 for angles in [0, pi), 1 for the rest.
int half_id(Vec2 v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

bool polar_less(Vec2 a, Vec2 b) {
    int ha = half_id(a), hb = half_id(b);
    if (ha != hb) return ha < hb;
    Int d = det2(a, b);
    if (d != 0) return d > 0;
    return l1(a) < l1(b);
}

// Membership oracle for one generator set: graded descent with a memo table
// shared across queries.  Grades are strictly positive, so every recursive
// step decreases the grade and the descent terminates.
class Membership {
public:
    explicit Membership(const GeneratorSet& g)
        : gens_(g.gens()),
          w_(positive_functional(g)),
          e1_(g.ray_first()),
          e2_(g.ray_last()),
          ray_only_(det2(g.ray_first(), g.ray_last()) == 0) {
        std::sort(gens_.begin(), gens_.end(), [&](Vec2 a, Vec2 b) {
            Int ga = dot2(w_, a), gb = dot2(w_, b);
            return ga != gb ? ga < gb : lex_less(a, b);
        });
        grades_.reserve(gens_.size());
        for (Vec2 g : gens_) grades_.push_back(dot2(w_, g));
        memo_.assign(64, MemoSlot{});
    }

    bool contains(Vec2 v) {
        if (v.is_zero()) return true;
        return member(v);
    }

private:
    bool in_cone(Vec2 v) const {
        if (ray_only_) return det2(e1_, v) == 0 && dot2(e1_, v) >= 0;
        return det2(e1_, v) >= 0 && det2(v, e2_) >= 0;
    }

    bool member(Vec2 v) {
        if (!in_cone(v)) return false;
        if (signed char s = memo_lookup(v); s != 0) return s == 1;
        Int gv = dot2(w_, v);
        bool ok = false;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (grades_[i] > gv) break;
            Vec2 r = v - gens_[i];
            if (r.is_zero() || member(r)) {
                ok = true;
                break;
            }
        }
        memo_store(v, ok);
        return ok;
    }

    // Insert-only open-addressing memo (linear probing, power-of-two size).
    // state: 0 empty, 1 member, 2 not a member.
    struct MemoSlot {
        Vec2 key{};
        signed char state = 0;
    };

    static std::size_t memo_hash(Vec2 v) {
        std::uint64_t h = static_cast<std::uint64_t>(v.x) * 0x9e3779b97f4a7c15ull +
                          static_cast<std::uint64_t>(v.y) * 0xc2b2ae3d27d4eb4full;
        return static_cast<std::size_t>(h ^ (h >> 32));
    }

    signed char memo_lookup(Vec2 v) const {
        std::size_t mask = memo_.size() - 1;
        for (std::size_t i = memo_hash(v) & mask;; i = (i + 1) & mask) {
            const MemoSlot& s = memo_[i];
            if (s.state == 0 || s.key == v) return s.state;
        }
    }

    void memo_store(Vec2 v, bool val) {
        // Grades strictly decrease along the recursion, so a key is never
        // stored twice: probing only needs to find an empty slot.
        if (4 * (memo_used_ + 1) >= 3 * memo_.size()) memo_grow();
        std::size_t mask = memo_.size() - 1;
        std::size_t i = memo_hash(v) & mask;
        while (memo_[i].state != 0) i = (i + 1) & mask;
        memo_[i] = MemoSlot{v, val ? static_cast<signed char>(1) : static_cast<signed char>(2)};
        ++memo_used_;
    }

    void memo_grow() {
        std::vector<MemoSlot> old = std::move(memo_);
        memo_.assign(2 * old.size(), MemoSlot{});
        std::size_t mask = memo_.size() - 1;
        for (const MemoSlot& s : old) {
            if (s.state == 0) continue;
            std::size_t i = memo_hash(s.key) & mask;
            while (memo_[i].state != 0) i = (i + 1) & mask;
            memo_[i] = s;
        }
    }

    std::vector<Vec2> gens_;
    Vec2 w_;
    Vec2 e1_, e2_;
    bool ray_only_;
    std::vector<Int> grades_;
    std::vector<MemoSlot> memo_;
    std::size_t memo_used_ = 0;
};

}  // namespace

GeneratorSet::GeneratorSet(std::vector<Vec2> vs) {
    std::erase_if(vs, [](Vec2 v) { return v.is_zero(); });
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.empty()) throw std::invalid_argument("generator set has no nonzero generators");
    gens_ = std::move(vs);

    // Each generator's primitive direction, computed once up front.
    std::vector<Vec2> prim(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) prim[i] = primitive(gens_[i]);

    // Distinct primitive directions in full polar order.
    std::vector<Vec2> dirs = prim;
    std::sort(dirs.begin(), dirs.end(), polar_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

    // Strict convexity: some cyclic gap between consecutive directions
    // exceeds pi, equivalently det < 0 at the wrap-around.
    std::size_t start = dirs.size();
    if (dirs.size() == 1) {
        convex_ = true;
        start = 0;
    } else {
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            std::size_t j = (i + 1) % dirs.size();
            if (det2(dirs[i], dirs[j]) < 0) {
                convex_ = true;
                start = j;
                break;
            }
        }
    }
    if (!convex_) return;  // keep lexicographic storage for degenerate sets

    std::map<Vec2, std::size_t, Vec2Lex> rank;
    for (std::size_t i = 0; i < dirs.size(); ++i)
        rank[dirs[(start + i) % dirs.size()]] = i;

    // Decorate-sort-undecorate: collinear generators share a rank and are
    // ordered short-to-long, so (rank, length) never ties between distinct
    // vectors and the order is deterministic.
    struct Key {
        std::size_t rank;
        Int len;
        Vec2 v;
    };
    std::vector<Key> keys;
    keys.reserve(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i)
        keys.push_back({rank.at(prim[i]), l1(gens_[i]), gens_[i]});
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        return a.rank != b.rank ? a.rank < b.rank : a.len < b.len;
    });
    for (std::size_t i = 0; i < gens_.size(); ++i) gens_[i] = keys[i].v;
    first_dir_ = primitive(gens_.front());
    last_dir_ = primitive(gens_.back());
}

Vec2 GeneratorSet::ray_first() const {
    if (!convex_) throw std::domain_error("generator set is not strictly convex");
    return first_dir_;
}

Vec2 GeneratorSet::ray_last() const {
    if (!convex_) throw std::domain_error("generator set is not strictly convex");
    return last_dir_;
}

Cone2 GeneratorSet::spanned_cone() const {
    Vec2 a = ray_first(), b = ray_last();
    if (det2(a, b) == 0) throw std::domain_error("generators span a ray, not a two-dimensional cone");
    return Cone2(a, b);
}

Int lattice_index(const GeneratorSet& g) { return lattice_index(g.gens()); }

Vec2 positive_functional(const GeneratorSet& g) {
    if (!g.strictly_convex()) throw std::domain_error("generator set is not strictly convex");
    Vec2 e1 = g.ray_first(), e2 = g.ray_last();
    Vec2 w;
    if (det2(e1, e2) == 0) {
        w = e1;  // single direction: the direction itself grades positively
    } else {
        w = Vec2{checked_sub(0, e1.y), e1.x} + Vec2{e2.y, checked_sub(0, e2.x)};
    }
    w = primitive(w);
    for (Vec2 v : g)
        if (dot2(w, v) < 1) throw std::logic_error("positive functional does not grade all generators");
    return w;
}

bool contains(const GeneratorSet& g, Vec2 v) { return Membership(g).contains(v); }

GeneratorSet minimal_generators(const GeneratorSet& g) {
    Vec2 w = positive_functional(g);
    Membership m(g);
    std::vector<Vec2> keep;
    for (Vec2 v : g) {
        Int gv = dot2(w, v);
        bool redundant = false;
        for (Vec2 h : g) {
            if (dot2(w, h) >= gv) continue;  // need 0 < w·h < w·v
            if (m.contains(v - h)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) keep.push_back(v);
    }
    return GeneratorSet(keep);
}

bool is_smooth(const GeneratorSet& g) {
    if (lattice_index(g) != 1) throw std::invalid_argument("is_smooth requires lattice index 1");
    GeneratorSet m = minimal_generators(g);
    if (m.size() != 2) return false;
    Int d = det2(m[0], m[1]);
    if (d != 1 && d != -1)
        throw std::logic_error("index-1 semigroup with two minimal generators must be unimodular");
    return true;
}

GeneratorSet hilbert_basis(const Cone2& c) {
    NormalForm nf = normal_form(c);
    HJFraction f = hj_expand(nf.p, nf.q);
    UnimodularMap back = nf.map.inverse();
    // Run the convergent recurrence behind generators_from_fraction directly,
    // mapping each point back through the inverse symmetry as it is produced.
    std::vector<Vec2> out;
    out.reserve(f.entries.size() + 2);
    if (f.entries.empty()) {
        out.push_back(apply_map(back, Vec2{1, 0}));
        out.push_back(apply_map(back, Vec2{0, 1}));
    } else {
        Vec2 prev{0, -1}, cur{1, 0};
        out.push_back(apply_map(back, cur));
        for (Int a : f.entries) {
            Vec2 next{checked_sub(checked_mul(a, cur.x), prev.x),
                      checked_sub(checked_mul(a, cur.y), prev.y)};
            out.push_back(apply_map(back, next));
            prev = cur;
            cur = next;
        }
    }
    return GeneratorSet(std::move(out));
}

GeneratorSet hilbert_basis_bruteforce(const Cone2& c) {
    GeneratorSet predicted = hilbert_basis(c);
    Vec2 w = primitive(Vec2{checked_sub(0, c.r1.y), c.r1.x} + Vec2{c.r2.y, checked_sub(0, c.r2.x)});
    Int bound = 0;
    for (Vec2 v : predicted) bound = std::max(bound, dot2(w, v));
    bound = checked_mul(2, bound);

    // Enumerate all cone points of grade 1..bound, slicing along the lines
    // w·v = t.  w is primitive, so every grade line carries lattice points.
    auto [g, x0, y0] = ext_gcd(w.x, w.y);
    Vec2 dir{-w.y, w.x};
    std::vector<Vec2> pts;
    for (Int t = 1; t <= bound; ++t) {
        Vec2 base{checked_mul(x0, t), checked_mul(y0, t)};
        // det(r1, base + s*dir) >= 0 and det(base + s*dir, r2) >= 0
        Int a1 = det2(c.r1, base), b1 = det2(c.r1, dir);
        Int a2 = det2(base, c.r2), b2 = det2(dir, c.r2);
        Int lo = std::numeric_limits<Int>::min(), hi = std::numeric_limits<Int>::max();
        bool empty = false;
        for (auto [a, b] : {std::pair{a1, b1}, std::pair{a2, b2}}) {
            if (b == 0) {
                if (a < 0) empty = true;
            } else if (b > 0) {
                lo = std::max(lo, ceil_div(-a, b));
            } else {
                hi = std::min(hi, floor_div(a, -b));
            }
        }
        if (empty || lo > hi) continue;
        for (Int s = lo; s <= hi; ++s) pts.push_back(base + s * dir);
    }

    std::sort(pts.begin(), pts.end(), [&](Vec2 a, Vec2 b) {
        Int ga = dot2(w, a), gb = dot2(w, b);
        return ga != gb ? ga < gb : lex_less(a, b);
    });
    std::unordered_set<Vec2, Vec2Hash> all(pts.begin(), pts.end());

    std::vector<Vec2> basis;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool decomposable = false;
        for (std::size_t j = 0; j < i && dot2(w, pts[j]) < dot2(w, pts[i]); ++j) {
            if (all.count(pts[i] - pts[j])) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) basis.push_back(pts[i]);
    }
    return GeneratorSet(std::move(basis));
}

bool is_saturated(const GeneratorSet& g) {
    // Well-defined for any set spanning a two-dimensional cone; a sublattice
    // of index > 1 simply misses some cone points and reports false.
    GeneratorSet hb = hilbert_basis(g.spanned_cone());
    Membership m(g);
    for (Vec2 v : hb)
        if (!m.contains(v)) return false;
    return true;
}

ThetaProfile theta_profile(const Cone2& c) {
    GeneratorSet hb = hilbert_basis(c);
    const auto& pts = hb.gens();
    ThetaProfile out;
    out.hilbert_basis = pts;
    out.vertices.push_back(pts.front());
    for (std::size_t i = 1; i + 1 < pts.size(); ++i)
        if (det2(pts[i] - pts[i - 1], pts[i + 1] - pts[i]) != 0) out.vertices.push_back(pts[i]);
    if (pts.size() >= 2) out.vertices.push_back(pts.back());
    out.compact_edge_count = static_cast<int>(out.vertices.size()) - 1;
    return out;
}

CanonicalForm canonical_form(const GeneratorSet& g) {
    if (!g.strictly_convex()) throw std::domain_error("canonical form needs a strictly convex set");

    auto build = [&](Vec2 axis, Vec2 other, bool positive_det) {
        UnimodularMap t = ray_to_first_axis(axis, positive_det);
        Vec2 o = apply_map(t, other);
        if (o.y != 0) {  // shear the other extreme into 0 <= x < y
            Int m = -floor_div(o.x, o.y);
            t = compose(UnimodularMap{1, m, 0, 1}, t);
        }
        std::vector<Vec2> img;
        img.reserve(g.size());
        for (Vec2 v : g) img.push_back(apply_map(t, v));
        std::sort(img.begin(), img.end(), lex_less);
        return std::pair{img, t};
    };

    Vec2 e1 = g.ray_first(), e2 = g.ray_last();
    auto [img_a, t_a] = build(e1, e2, true);
    if (det2(e1, e2) == 0) return {GeneratorSet(img_a), t_a};

    auto [img_b, t_b] = build(e2, e1, false);
    bool a_wins = !std::ranges::lexicographical_compare(img_b, img_a, lex_less);
    if (a_wins) return {GeneratorSet(img_a), t_a};
    return {GeneratorSet(img_b), t_b};
}

GeneratorSet apply_map(const UnimodularMap& t, const GeneratorSet& g) {
    std::vector<Vec2> out;
    out.reserve(g.size());
    for (Vec2 v : g) out.push_back(apply_map(t, v));
    return GeneratorSet(std::move(out));
}

std::string canonical_key(const GeneratorSet& g) {
    std::string key;
    for (Vec2 v : g) {
        if (!key.empty()) key += ';';
        key += std::to_string(v.x);
        key += ',';
        key += std::to_string(v.y);
    }
    return key;
}

}  // namespace nashblow
