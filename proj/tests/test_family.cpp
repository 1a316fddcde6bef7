#include "support.hpp"

#include <obstruct/errors.hpp>
#include <obstruct/family.hpp>
#include <obstruct/homomorphism.hpp>
#include <obstruct/pattern.hpp>

#include <doctest.h>

#include <set>

using namespace obstruct;
using testing::named;

namespace {

Graph gqp(unsigned q, unsigned p) { return build_gqp(make_family_params(q, p)); }

Pattern claw(unsigned a, unsigned b, unsigned c) { return Pattern::from_name(GraphName::subdivided_claw(a, b, c)); }

std::set<std::size_t> degrees(const Graph& g)
{
    std::set<std::size_t> d;
    for (Vertex v = 0; v < g.order(); ++v)
        d.insert(g.degree(v));
    return d;
}

} // namespace

TEST_CASE("parameters")
{
    CHECK(make_family_params(5, 3).order() == 13);
    CHECK_THROWS_AS(make_family_params(4, 3), ParameterError);
    CHECK_THROWS_AS(make_family_params(1, 3), ParameterError);
    CHECK_THROWS_AS(make_family_params(5, 0), ParameterError);
    CHECK_THROWS_AS(make_family_params(7, 40), CapacityError);
    CHECK_NOTHROW(make_family_params(3, 1));
}

TEST_CASE("construction examples")
{
    Graph g = gqp(5, 3);
    REQUIRE(g.order() == 13);
    for (Vertex i = 0; i < 13; ++i)
        CHECK(g.neighbors(i) == VertexSet{(i + 12) % 13, (i + 1) % 13, (i + 4) % 13, (i + 9) % 13});
    CHECK(gqp(3, 2) == named("K4"));
    CHECK(gqp(3, 1) == Graph(1));
    CHECK(gqp(5, 1) == named("C3"));
    CHECK(build(parse_name("G5,3")) == g);
}

TEST_CASE("circulant structure")
{
    std::mt19937_64 rng(21);
    for (int round = 0; round < 60; ++round) {
        const unsigned q = 3 + 2 * static_cast<unsigned>(rng() % 3);
        const unsigned p = 1 + static_cast<unsigned>(rng() % 8);
        Graph g = gqp(q, p);
        const std::size_t n = g.order();
        CHECK(is_circulant(g));
        CHECK(is_well_formed(g));
        CHECK(degrees(g).size() == 1);

        std::set<std::size_t> offsets;
        for (long j = 0; j < static_cast<long>(p); ++j)
            for (long d : {1L, -1L, static_cast<long>(q) * j - 1, -(static_cast<long>(q) * j - 1)})
                if (j > 0 || d == 1 || d == -1) {
                    const long m = ((d % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
                    if (m != 0)
                        offsets.insert(static_cast<std::size_t>(m));
                }
        CHECK(*degrees(g).begin() == offsets.size());
    }
    CHECK_FALSE(is_circulant(named("P4")));
}

TEST_CASE("type classes")
{
    CHECK(type_of(0, 5) == 0);
    CHECK(type_of(12, 5) == 2);
    CHECK(type_of(5 * 7 - 3, 5) == (5 * 7 - 3) % 5);
}

TEST_CASE("every window of q consecutive vertices induces C_q")
{
    for (unsigned q : {3U, 5U, 7U})
        for (unsigned p = 2; p <= 6; ++p) {
            Graph g = gqp(q, p);
            const Graph cq = build(GraphName::cycle(q));
            const std::size_t n = g.order();
            for (Vertex s = 0; s < n; ++s) {
                std::vector<Vertex> window;
                for (Vertex k = 0; k < q; ++k)
                    window.push_back(static_cast<Vertex>((s + k) % n));
                GraphBuilder b(q);
                for (Vertex a = 0; a < q; ++a)
                    for (Vertex c = a + 1; c < q; ++c)
                        if (g.adjacent(window[a], window[c]))
                            b.add_edge(a, c);
                REQUIRE(std::move(b).build() == cq);
            }
        }
}

TEST_CASE("certification")
{
    for (unsigned p = 2; p <= 5; ++p)
        CHECK(certify_minimal_obstruction(make_family_params(5, p), named("C5")));
    for (unsigned p = 2; p <= 6; ++p)
        CHECK(certify_minimal_obstruction(make_family_params(3, p), named("K3")));
    CHECK_THROWS_AS(certify_minimal_obstruction(make_family_params(5, 3), named("C7")), ParameterError);
    CHECK_THROWS_AS(certify_minimal_obstruction(make_family_params(5, 3), named("K2")), ParameterError);
    // K1 is colorable, so the degenerate p = 1 member is no obstruction.
    CHECK_FALSE(certify_minimal_obstruction(make_family_params(3, 1), named("K3")));
    // The shortcut agrees with the full check.
    for (unsigned p = 2; p <= 4; ++p)
        CHECK(is_minimal_obstruction(gqp(5, p), named("C5"), Oracle::Independent));
}

TEST_CASE("induced matchings")
{
    for (unsigned q : {3U, 5U, 7U})
        for (unsigned p = 1; p <= 6; ++p)
            CHECK_FALSE(contains_induced(gqp(q, p), Pattern::matching(q)));
    for (unsigned q : {3U, 5U}) {
        const unsigned p = 2 * q + 1;
        auto seq = lowerpath_witness(q, p);
        Graph g = gqp(q, p);
        // Alternate edges of the witness path are pairwise far apart.
        VertexSet keep;
        for (std::size_t k = 0; k < seq.size(); ++k)
            if (k % 3 != 2)
                keep.insert(seq[k]);
        CHECK(contains_induced(induced_subgraph(g, keep), Pattern::matching(q - 1)));
        CHECK(contains_induced(g, Pattern::matching(q - 1)));
    }
}

TEST_CASE("freeness across the family")
{
    CHECK(family_is_f_free(5, Pattern::path(13)).free);
    CHECK(family_is_f_free(5, Pattern::from_name(parse_name("P10+P2"))).free);
    FreenessVerdict s222 = family_is_f_free(3, claw(2, 2, 2));
    CHECK(s222.free);
    CHECK(s222.checked_up_to == 8);
    FreenessVerdict p12 = family_is_f_free(5, Pattern::path(12));
    CHECK_FALSE(p12.free);
    REQUIRE(p12.violating_p);
    CHECK(*p12.violating_p <= 11);
    CHECK(gqp_contains(make_family_params(5, *p12.violating_p), Pattern::path(12)));
}

TEST_CASE("easy bounds for q = 3 and q = 5")
{
    for (unsigned q : {3U, 5U}) {
        const unsigned half = 3 * (q - 1) / 2;
        CHECK(family_is_f_free(q, Pattern::path(3 * q - 1)).free);
        CHECK(family_is_f_free(q, claw(2, 2, 2)).free);
        CHECK(family_is_f_free(q, claw(half, half, 1)).free);
    }
}

TEST_CASE("one step past the sweep never creates a copy")
{
    std::mt19937_64 rng(22);
    int checked = 0;
    while (checked < 40) {
        const unsigned q = rng() % 2 ? 3 : 5;
        Graph f = testing::random_graph(rng, 2, 8);
        if (!is_connected(f))
            continue;
        ++checked;
        Pattern pattern = Pattern::general(f);
        const auto p = static_cast<unsigned>(f.order() + 2);
        if (!gqp_contains(make_family_params(q, p - 1), pattern))
            REQUIRE_FALSE(gqp_contains(make_family_params(q, p), pattern));
    }
}

TEST_CASE("lowerpath witness")
{
    auto w = lowerpath_witness(5, 11);
    REQUIRE(w.size() == 12);
    CHECK(std::vector<Vertex>(w.begin(), w.begin() + 7) == std::vector<Vertex>{0, 24, 48, 47, 18, 42, 41});
    CHECK(is_induced_path(gqp(5, 11), w));
    auto w3 = lowerpath_witness(3, 7);
    CHECK(w3.size() == 6);
    CHECK(is_induced_path(gqp(3, 7), w3));
    CHECK(lowerpath_witness(7, 15).size() == 18);
    CHECK_THROWS_AS(lowerpath_witness(3, 6), PreconditionError);
}

TEST_CASE("induced path checker")
{
    Graph p = named("P5");
    CHECK(is_induced_path(p, std::vector<Vertex>{0, 1, 2, 3, 4}));
    CHECK_FALSE(is_induced_path(p, std::vector<Vertex>{0, 1, 3}));
    CHECK_FALSE(is_induced_path(named("C5"), std::vector<Vertex>{0, 1, 2, 3, 4}));
    CHECK_FALSE(is_induced_path(p, std::vector<Vertex>{0, 1, 0}));
}

TEST_CASE("longest induced path sweep")
{
    CHECK(gqp_longest_induced_path(make_family_params(5, 3)) == longest_induced_path(gqp(5, 3)));
    CHECK(gqp_longest_induced_path(make_family_params(3, 7)) >= 6);
}
