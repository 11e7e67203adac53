#include "nashblow/nash.hpp"

#include "nashblow/semigroup.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace nashblow;
using testutil::same_set;

namespace {

const GeneratorSet kGolden({{1, 0}, {1, 1}, {1, 2}, {3, 7}});

std::vector<Vec2> points_of(const std::vector<SumPoint>& sums) {
    std::vector<Vec2> out;
    out.reserve(sums.size());
    for (const SumPoint& s : sums) out.push_back(s.point);
    return out;
}

}  // namespace

TEST_SUITE("nash") {

TEST_CASE("gamma0 groups pairwise sums of independent generators") {
    std::vector<SumPoint> unit = gamma0(GeneratorSet({{1, 0}, {0, 1}}));
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].point == Vec2{1, 1});
    CHECK(unit[0].pairs == std::vector<std::pair<int, int>>{{0, 1}});

    std::vector<SumPoint> golden = gamma0(kGolden);
    CHECK(points_of(golden) ==
          std::vector<Vec2>{{2, 1}, {2, 2}, {2, 3}, {4, 7}, {4, 8}, {4, 9}});
    for (const SumPoint& s : golden) CHECK(s.pairs.size() == 1);

    // Collinear pairs contribute nothing.
    std::vector<SumPoint> mixed = gamma0(GeneratorSet({{1, 0}, {2, 0}, {0, 1}}));
    REQUIRE(mixed.size() == 2);
    CHECK(mixed[0].point == Vec2{1, 1});
    CHECK(mixed[0].pairs == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK(mixed[1].point == Vec2{2, 1});
    CHECK(mixed[1].pairs == std::vector<std::pair<int, int>>{{1, 2}});

    // Distinct pairs with equal sums end up grouped under one point.
    std::vector<SumPoint> ladder = gamma0(GeneratorSet({{1, 0}, {1, 1}, {1, 2}, {1, 3}}));
    REQUIRE(ladder.size() == 5);
    CHECK(ladder[2].point == Vec2{2, 3});
    CHECK(ladder[2].pairs == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});
}

TEST_CASE("newton_vertices keeps exactly the polyhedron corners") {
    std::vector<SumPoint> golden = newton_vertices(kGolden);
    CHECK(points_of(golden) == std::vector<Vec2>{{2, 1}, {2, 3}, {4, 9}});
    CHECK(golden[0].pairs == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(golden[1].pairs == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(golden[2].pairs == std::vector<std::pair<int, int>>{{2, 3}});

    CHECK(points_of(newton_vertices(GeneratorSet({{1, 0}, {1, 1}, {1, 2}, {1, 3}}))) ==
          std::vector<Vec2>{{2, 1}, {2, 5}});

    CHECK(points_of(newton_vertices(GeneratorSet({{1, 0}, {0, 1}}))) ==
          std::vector<Vec2>{{1, 1}});
}

TEST_CASE("newton_vertices matches the convex hull oracle") {
    for (const GeneratorSet& g :
         {kGolden, GeneratorSet({{1, 0}, {0, 1}}), GeneratorSet({{1, 0}, {1, 1}, {1, 2}, {1, 3}}),
          GeneratorSet({{1, 0}, {1, 1}, {2, 3}, {5, 8}}),
          GeneratorSet({{1, 0}, {1, 3}, {1, 4}, {1, 6}, {1, 7}, {1, 9}})})
        CHECK(points_of(newton_vertices(g)) == newton_vertices_oracle(g));

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        GeneratorSet g = testutil::random_convex_set(rng);
        CHECK(points_of(newton_vertices(g)) == newton_vertices_oracle(g));
    }
}

TEST_CASE("fastpath vertices match the general computation on saturated input") {
    CHECK(newton_vertices_fastpath(kGolden) == newton_vertices(kGolden));

    CHECK(points_of(newton_vertices_fastpath(
              GeneratorSet({{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}}))) ==
          std::vector<Vec2>{{2, 1}, {2, 9}});

    GeneratorSet fib8 = hilbert_basis(Cone2({1, 0}, {13, 21}));
    CHECK(points_of(newton_vertices_fastpath(fib8)) ==
          std::vector<Vec2>{{2, 1}, {3, 4}, {7, 11}, {18, 29}});

    for (Int q = 1; q <= 40; ++q)
        for (Int p = 0; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            GeneratorSet g = hilbert_basis(Cone2({1, 0}, {p, q}));
            CHECK(newton_vertices_fastpath(g) == newton_vertices(g));
        }
}

TEST_CASE("fastpath rejects inputs outside its contract") {
    CHECK_THROWS_AS(newton_vertices_fastpath(GeneratorSet({{1, 0}, {1, 2}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(newton_vertices_fastpath(GeneratorSet({{1, 0}, {0, 1}, {1, 1}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(newton_vertices_fastpath(GeneratorSet({{1, 0}, {0, 2}})),
                    std::invalid_argument);
}

TEST_CASE("chart assembles the two difference fans") {
    NashChart first = chart(kGolden, 0, 1);
    CHECK(first.vertex == Vec2{2, 1});
    CHECK(first.pair == std::pair<int, int>{0, 1});
    CHECK(same_set(first.chart_gens.gens(),
                   {{1, 0}, {1, 1}, {0, 2}, {2, 7}, {0, 1}, {2, 6}}));

    NashChart last = chart(kGolden, 2, 3);
    CHECK(last.vertex == Vec2{4, 9});
    CHECK(same_set(last.chart_gens.gens(),
                   {{1, 2}, {3, 7}, {0, -2}, {0, -1}, {-2, -6}, {-2, -7}}));

    CHECK_THROWS_AS(chart(kGolden, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(chart(kGolden, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(chart(GeneratorSet({{1, 0}, {2, 0}, {0, 1}}), 0, 1), std::invalid_argument);
}

TEST_CASE("charts preserve the lattice") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        GeneratorSet g = testutil::random_convex_set(rng);
        if (lattice_index(g) != 1) continue;
        for (const NashChart& c : nash_blowup(g))
            CHECK(lattice_index(c.chart_gens) == 1);
    }
}

TEST_CASE("saturated minimal sets have one decomposition per vertex") {
    for (Int q = 1; q <= 40; ++q)
        for (Int p = 0; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            for (const SumPoint& v : newton_vertices(hilbert_basis(Cone2({1, 0}, {p, q}))))
                CHECK(v.pairs.size() == 1);
        }
}

TEST_CASE("a smooth semigroup is a blowup fixed point") {
    GeneratorSet smooth({{1, 0}, {0, 1}});
    std::vector<NashChart> charts = nash_blowup(smooth);
    REQUIRE(charts.size() == 1);
    CHECK(charts[0].chart_gens == smooth);
    CHECK_FALSE(charts[0].ambiguous_vertex);

    GeneratorSet tilted({{1, 6}, {0, -1}});
    std::vector<NashChart> tilted_charts = nash_blowup(tilted);
    REQUIRE(tilted_charts.size() == 1);
    CHECK(canonical_form(tilted_charts[0].chart_gens).gens == canonical_form(tilted).gens);
}

TEST_CASE("nash_blowup produces the golden example charts") {
    std::vector<NashChart> charts = nash_blowup(kGolden);
    REQUIRE(charts.size() == 3);

    CHECK(charts[0].vertex == Vec2{2, 1});
    CHECK(charts[0].pair == std::pair<int, int>{0, 1});
    CHECK(minimal_generators(charts[0].chart_gens) == GeneratorSet({{1, 0}, {0, 1}}));

    CHECK(charts[1].vertex == Vec2{2, 3});
    CHECK(charts[1].pair == std::pair<int, int>{1, 2});
    CHECK(minimal_generators(charts[1].chart_gens) == GeneratorSet({{0, -1}, {1, 2}, {2, 6}}));

    CHECK(charts[2].vertex == Vec2{4, 9});
    CHECK(charts[2].pair == std::pair<int, int>{2, 3});
    CHECK(minimal_generators(charts[2].chart_gens) ==
          GeneratorSet({{-2, -6}, {0, -1}, {1, 2}, {3, 7}}));

    for (const NashChart& c : charts) CHECK_FALSE(c.ambiguous_vertex);
}

TEST_CASE("nash_blowup rejects index or convexity violations") {
    CHECK_THROWS_AS(nash_blowup(GeneratorSet({{1, 0}, {0, 2}})), std::invalid_argument);
    CHECK_THROWS_AS(nash_blowup(GeneratorSet({{1, 0}, {-1, 2}, {0, -1}})), std::invalid_argument);
}

}  // TEST_SUITE
