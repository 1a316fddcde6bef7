#include "support.hpp"

#include <obstruct/errors.hpp>
#include <obstruct/family.hpp>
#include <obstruct/homomorphism.hpp>

#include <doctest.h>

using namespace obstruct;
using testing::named;

TEST_CASE("exists_hom examples")
{
    const Graph c5 = named("C5");
    for (Oracle o : {Oracle::Primary, Oracle::Independent}) {
        CHECK_FALSE(exists_hom(named("K3"), c5, {}, o));
        CHECK(exists_hom(named("C7"), c5, {}, o));
        CHECK(exists_hom(Graph(), c5, {}, o));
        PartialAssignment pre(5);
        pre.assign(0, 0).assign(2, 0);
        CHECK_FALSE(exists_hom(c5, c5, pre, o));
        CHECK(exists_hom(named("P8"), c5, {}, o));
        CHECK(exists_hom(named("C8"), c5, {}, o));
    }
    CHECK(testing::all_homs(c5, c5).size() == 10);
}

TEST_CASE("find_hom returns a witness that respects the precoloring")
{
    const Graph c5 = named("C5");
    PartialAssignment pre(7);
    pre.assign(3, 4);
    for (Oracle o : {Oracle::Primary, Oracle::Independent}) {
        auto c = find_hom(named("C7"), c5, pre, o);
        REQUIRE(c);
        CHECK(is_hom(named("C7"), c5, *c));
        CHECK((*c)[3] == 4);
    }
}

TEST_CASE("bipartite graphs map to C5")
{
    std::mt19937_64 rng(3);
    for (int round = 0; round < 200; ++round) {
        std::size_t a = rng() % 8 + 1, b = rng() % 8;
        GraphBuilder builder(a + b);
        for (Vertex u = 0; u < a; ++u)
            for (Vertex v = 0; v < b; ++v)
                if (rng() % 2)
                    builder.add_edge(u, static_cast<Vertex>(a + v));
        CHECK(exists_hom(std::move(builder).build(), named("C5")));
    }
}

TEST_CASE("oracles agree with each other and with exhaustive enumeration")
{
    std::mt19937_64 rng(4);
    for (int round = 0; round < 3000; ++round) {
        Graph g = testing::random_graph(rng, 0, 10);
        Graph h = testing::random_graph(rng, 1, 6);
        const bool a = exists_hom(g, h, {}, Oracle::Primary);
        REQUIRE(a == exists_hom(g, h, {}, Oracle::Independent));
        if (g.order() <= 6)
            REQUIRE(a == testing::brute_hom(g, h));
    }
}

TEST_CASE("k-colorability matches brute force")
{
    std::mt19937_64 rng(5);
    for (int round = 0; round < 1000; ++round) {
        Graph g = testing::random_graph(rng, 0, 8);
        for (unsigned k = 1; k <= 4; ++k) {
            Graph kk = build(GraphName::complete(k));
            REQUIRE(exists_hom(g, kk) == testing::brute_hom(g, kk));
        }
    }
}

TEST_CASE("hull examples")
{
    const Graph c5 = named("C5");
    CHECK(hull(c5, c5) == c5);
    CHECK(hull(named("K2"), c5) == named("K2"));
    CHECK(hull(named("P3"), c5) == named("P3"));
    CHECK(hull(named("P4"), c5) == named("P4"));
    CHECK_THROWS_AS(hull(named("K3"), c5), PreconditionError);
}

TEST_CASE("hull invariants")
{
    std::mt19937_64 rng(6);
    int checked = 0;
    while (checked < 500) {
        Graph g = testing::random_graph(rng, 1, 7);
        Graph h = testing::random_graph(rng, 2, 5);
        if (!exists_hom(g, h))
            continue;
        ++checked;
        Graph j = hull(g, h);
        REQUIRE(j == testing::brute_hull(g, h));
        for (auto [u, v] : g.edges())
            REQUIRE(j.adjacent(u, v));
        REQUIRE(exists_hom(j, h));

        VertexSet keep;
        for (Vertex v = 0; v < g.order(); ++v)
            if (rng() % 4)
                keep.insert(v);
        std::vector<Vertex> map(keep.begin(), keep.end());
        Graph js = hull(induced_subgraph(g, keep), h);
        for (auto [a, b] : js.edges())
            REQUIRE(j.adjacent(map[a], map[b]));
    }
}

TEST_CASE("lazy hull oracle matches hull")
{
    std::mt19937_64 rng(7);
    const Graph c5 = named("C5");
    HomSolver solver(c5);
    int checked = 0;
    while (checked < 300) {
        Graph g = testing::random_graph(rng, 2, 12);
        VertexSet active;
        for (Vertex v = 0; v < g.order(); ++v)
            if (rng() % 5)
                active.insert(v);
        Graph sub = induced_subgraph(g, active);
        HullOracle oracle(solver, g, active);
        REQUIRE(oracle.colorable() == exists_hom(sub, c5));
        if (!oracle.colorable())
            continue;
        ++checked;
        Graph j = hull(sub, c5);
        std::vector<Vertex> map(active.begin(), active.end());
        for (Vertex a = 0; a < map.size(); ++a)
            for (Vertex b = 0; b < map.size(); ++b)
                if (a != b)
                    REQUIRE(oracle.adjacent(map[a], map[b]) == j.adjacent(a, b));
    }
}

TEST_CASE("minimal obstructions")
{
    const Graph c5 = named("C5");
    for (Oracle o : {Oracle::Primary, Oracle::Independent}) {
        CHECK(is_minimal_obstruction(named("K3"), c5, o));
        CHECK_FALSE(is_minimal_obstruction(c5, c5, o));
        CHECK_FALSE(is_minimal_obstruction(named("K4"), c5, o));
        CHECK(is_minimal_obstruction(build_gqp(make_family_params(5, 3)), c5, o));
    }
}

TEST_CASE("odd girth")
{
    CHECK(odd_girth(named("C7")) == 7U);
    CHECK_FALSE(odd_girth(named("P8")));
    CHECK(odd_girth(build_gqp(make_family_params(5, 4))) == 5U);
    CHECK(odd_girth(named("K4")) == 3U);
    CHECK(has_c4_subgraph(named("C4")));
    CHECK_FALSE(has_c4_subgraph(named("C5")));
    CHECK(has_triangle(named("K3")));
    CHECK_FALSE(has_triangle(named("C5")));
}

TEST_CASE("colorable graphs have odd girth at least that of the target")
{
    std::mt19937_64 rng(8);
    for (int round = 0; round < 500; ++round) {
        Graph g = testing::random_graph(rng, 1, 10);
        Graph h = testing::random_graph(rng, 2, 6);
        auto gg = odd_girth(g);
        auto gh = odd_girth(h);
        if (gg && gh && exists_hom(g, h))
            REQUIRE(*gg >= *gh);
    }
}
