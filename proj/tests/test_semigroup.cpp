#include "nashblow/semigroup.hpp"

#include "nashblow/contfrac.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace nashblow;
using testutil::same_set;

namespace {

const GeneratorSet kGolden({{1, 0}, {1, 1}, {1, 2}, {3, 7}});

std::vector<Cone2> normal_cones(Int q_max) {
    std::vector<Cone2> out;
    for (Int q = 1; q <= q_max; ++q)
        for (Int p = 0; p < q; ++p)
            if (std::gcd(p, q) == 1) out.push_back(Cone2({1, 0}, {p, q}));
    return out;
}

}  // namespace

TEST_SUITE("semigroup") {

TEST_CASE("generator sets normalize to counterclockwise order") {
    GeneratorSet g({{3, 7}, {1, 0}, {1, 2}, {1, 1}});
    CHECK(g.gens() == std::vector<Vec2>{{1, 0}, {1, 1}, {1, 2}, {3, 7}});
    CHECK(g.strictly_convex());

    // Collinear generators tie on direction and are ordered short-to-long.
    GeneratorSet ladder({{2, 2}, {1, 1}, {1, 0}});
    CHECK(ladder.gens() == std::vector<Vec2>{{1, 0}, {1, 1}, {2, 2}});

    // Zero vectors and duplicates are dropped.
    GeneratorSet dedup({{1, 1}, {1, 1}, {0, 0}, {1, 0}});
    CHECK(dedup.gens() == std::vector<Vec2>{{1, 0}, {1, 1}});

    CHECK_THROWS_AS(GeneratorSet({{0, 0}}), std::invalid_argument);
}

TEST_CASE("counterclockwise order starts after the widest angular gap") {
    GeneratorSet g({{1, 2}, {0, -1}, {3, 7}, {-2, -6}});
    CHECK(g.gens() == std::vector<Vec2>{{-2, -6}, {0, -1}, {1, 2}, {3, 7}});
    CHECK(g.ray_first() == Vec2{-1, -3});
    CHECK(g.ray_last() == Vec2{3, 7});
    CHECK(g.strictly_convex());
}

TEST_CASE("strict convexity detects halfplane violations") {
    CHECK(GeneratorSet({{1, 0}, {0, 1}}).strictly_convex());
    CHECK_FALSE(GeneratorSet({{1, 0}, {-1, 0}}).strictly_convex());
    CHECK_FALSE(GeneratorSet({{1, 0}, {-1, 2}, {0, -1}}).strictly_convex());
}

TEST_CASE("spanned_cone uses the extreme directions") {
    Cone2 c = kGolden.spanned_cone();
    CHECK(c.r1 == Vec2{1, 0});
    CHECK(c.r2 == Vec2{3, 7});
    CHECK_THROWS_AS(GeneratorSet({{1, 1}, {2, 2}}).spanned_cone(), std::domain_error);
}

TEST_CASE("positive_functional grades every generator positively") {
    CHECK(positive_functional(GeneratorSet({{1, 0}, {0, 1}})) == Vec2{1, 1});
    for (const GeneratorSet& g :
         {kGolden, GeneratorSet({{0, -1}, {1, 2}, {2, 6}}),
          GeneratorSet({{-2, -6}, {0, -1}, {1, 2}, {3, 7}}), GeneratorSet({{1, 2}, {2, 4}})}) {
        Vec2 w = positive_functional(g);
        for (Vec2 v : g) CHECK(dot2(w, v) >= 1);
    }
}

TEST_CASE("contains decides semigroup membership") {
    GeneratorSet g({{1, 0}, {1, 2}});
    CHECK(contains(g, {2, 2}));
    CHECK_FALSE(contains(g, {1, 1}));
    CHECK(contains(g, {0, 0}));
    CHECK(contains(g, {3, 2}));
    CHECK_FALSE(contains(g, {-1, 0}));

    CHECK(contains(GeneratorSet({{0, -1}, {1, 2}, {2, 6}}), {2, 5}));
}

TEST_CASE("minimal_generators drops exactly the decomposable generators") {
    CHECK(minimal_generators(GeneratorSet({{1, 0}, {0, 1}, {1, 1}})) ==
          GeneratorSet({{1, 0}, {0, 1}}));
    CHECK(minimal_generators(GeneratorSet({{1, 0}, {1, 1}, {0, 2}, {2, 7}, {0, 1}, {2, 6}})) ==
          GeneratorSet({{1, 0}, {0, 1}}));
    CHECK(minimal_generators(GeneratorSet({{1, 1}, {1, 2}, {0, -1}, {2, 6}, {0, -2}, {2, 5}})) ==
          GeneratorSet({{0, -1}, {1, 2}, {2, 6}}));
}

TEST_CASE("minimal_generators is idempotent and preserves the semigroup") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        GeneratorSet g = testutil::random_convex_set(rng);
        GeneratorSet m = minimal_generators(g);
        CHECK(minimal_generators(m) == m);
        for (Int x = -12; x <= 12; ++x)
            for (Int y = -12; y <= 12; ++y) CHECK(contains(g, {x, y}) == contains(m, {x, y}));
    }
}

TEST_CASE("is_smooth recognizes two-generator unimodular semigroups") {
    CHECK(is_smooth(GeneratorSet({{1, 0}, {0, 1}})));
    CHECK_FALSE(is_smooth(kGolden));
    CHECK(is_smooth(GeneratorSet({{1, 6}, {0, -1}})));
    CHECK_THROWS_AS(is_smooth(GeneratorSet({{1, 0}, {0, 2}})), std::invalid_argument);
}

TEST_CASE("hilbert_basis matches the expected boundary generators") {
    CHECK(hilbert_basis(Cone2({1, 0}, {3, 7})) == kGolden);
    CHECK(hilbert_basis(Cone2({1, 0}, {0, 1})) == GeneratorSet({{1, 0}, {0, 1}}));
    CHECK(hilbert_basis(Cone2({1, 0}, {5, 8})) == GeneratorSet({{1, 0}, {1, 1}, {2, 3}, {5, 8}}));
    CHECK(hilbert_basis_bruteforce(Cone2({1, 0}, {1, 2})) ==
          GeneratorSet({{1, 0}, {1, 1}, {1, 2}}));
}

TEST_CASE("hilbert_basis agrees with brute-force enumeration") {
    for (const Cone2& c : normal_cones(40)) CHECK(hilbert_basis(c) == hilbert_basis_bruteforce(c));
}

TEST_CASE("consecutive hilbert basis elements are unimodular") {
    for (const Cone2& c : normal_cones(40)) {
        GeneratorSet hb = hilbert_basis(c);
        const auto& pts = hb.gens();
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) CHECK(det2(pts[i], pts[i + 1]) == 1);
    }
}

TEST_CASE("hilbert_basis is smooth exactly for the zero residue") {
    for (const Cone2& c : normal_cones(40)) {
        NormalForm nf = normal_form(c);
        CHECK(is_smooth(hilbert_basis(c)) == (nf.p == 0));
    }
}

TEST_CASE("is_saturated compares the semigroup against its cone points") {
    CHECK(is_saturated(kGolden));
    CHECK_FALSE(is_saturated(GeneratorSet({{1, 0}, {1, 2}})));

    GeneratorSet gaps({{1, 0}, {1, 3}, {1, 4}, {1, 6}, {1, 7}, {1, 9}});
    CHECK(lattice_index(gaps) == 1);
    CHECK_FALSE(is_saturated(gaps));
    CHECK(minimal_generators(gaps).size() == 6);
}

TEST_CASE("theta_profile marks the strict turns of the boundary") {
    ThetaProfile a = theta_profile(Cone2({1, 0}, {1, 2}));
    CHECK(a.compact_edge_count == 1);
    CHECK(a.vertices == std::vector<Vec2>{{1, 0}, {1, 2}});

    ThetaProfile b = theta_profile(Cone2({1, 0}, {3, 7}));
    CHECK(b.compact_edge_count == 2);
    CHECK(b.vertices == std::vector<Vec2>{{1, 0}, {1, 2}, {3, 7}});

    ThetaProfile c = theta_profile(Cone2({1, 0}, {5, 8}));
    CHECK(c.compact_edge_count == 3);
    CHECK(c.vertices == std::vector<Vec2>{{1, 0}, {1, 1}, {2, 3}, {5, 8}});
    CHECK(c.hilbert_basis == c.vertices);
}

TEST_CASE("boundary edge slopes strictly decrease") {
    for (const Cone2& c : normal_cones(40)) {
        const auto& vs = theta_profile(c).vertices;
        for (std::size_t i = 0; i + 2 < vs.size(); ++i)
            CHECK(det2(vs[i + 1] - vs[i], vs[i + 2] - vs[i + 1]) < 0);
    }
}

TEST_CASE("canonical_form fixes canonical sets and undoes shears") {
    CanonicalForm unit = canonical_form(GeneratorSet({{1, 0}, {0, 1}}));
    CHECK(unit.gens == GeneratorSet({{1, 0}, {0, 1}}));

    GeneratorSet three({{0, -1}, {1, 2}, {2, 6}});
    GeneratorSet sheared = apply_map(UnimodularMap{1, 1, 0, 1}, three);
    CHECK(canonical_form(sheared).gens == canonical_form(three).gens);
}

TEST_CASE("canonical_form maps the input onto the canonical set") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        GeneratorSet g = testutil::random_convex_set(rng);
        CanonicalForm cf = canonical_form(g);
        CHECK(apply_map(cf.map, g) == cf.gens);
    }
}

TEST_CASE("canonical_form is invariant under lattice symmetries") {
    std::mt19937_64 rng(37);
    for (const GeneratorSet& g :
         {kGolden, GeneratorSet({{0, -1}, {1, 2}, {2, 6}}), GeneratorSet({{1, 0}, {1, 1}, {1, 2}}),
          GeneratorSet({{-2, -6}, {0, -1}, {1, 2}, {3, 7}}),
          GeneratorSet({{1, 0}, {1, 3}, {1, 4}, {1, 6}, {1, 7}, {1, 9}})}) {
        GeneratorSet canon = canonical_form(g).gens;
        for (int trial = 0; trial < 100; ++trial) {
            UnimodularMap t = testutil::random_unimodular(rng);
            CHECK(canonical_form(apply_map(t, g)).gens == canon);
        }
    }
}

TEST_CASE("canonical_key serializes coordinates with separators") {
    CHECK(canonical_key(GeneratorSet({{1, 0}, {0, 1}})) == "1,0;0,1");
    CHECK(canonical_key(GeneratorSet({{0, -1}, {1, 2}})) == "0,-1;1,2");
}

}  // TEST_SUITE
