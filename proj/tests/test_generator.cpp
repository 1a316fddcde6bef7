#include "support.hpp"

#include <obstruct/canonical.hpp>
#include <obstruct/errors.hpp>
#include <obstruct/generator.hpp>
#include <obstruct/homomorphism.hpp>

#include <doctest.h>

#include <set>

using namespace obstruct;
using testing::named;

namespace {

const Graph c5 = named("C5");

std::set<Certificate> certificate_set(const std::vector<Graph>& gs, std::size_t max_order = SIZE_MAX)
{
    std::set<Certificate> out;
    for (const auto& g : gs)
        if (g.order() <= max_order)
            out.insert(canonical_form(g));
    return out;
}

std::multiset<std::size_t> orders(const std::vector<Graph>& gs)
{
    std::multiset<std::size_t> out;
    for (const auto& g : gs)
        out.insert(g.order());
    return out;
}

GenerationConfig config(const char* seed, std::vector<Pattern> f)
{
    GenerationConfig cfg;
    cfg.target = c5;
    cfg.seed = named(seed);
    cfg.forbidden = std::move(f);
    return cfg;
}

// Index of vertex x of g once `removed` has been deleted.
Vertex shifted(Vertex x, const VertexSet& removed)
{
    Vertex below = 0;
    for (Vertex r : removed)
        below += r < x;
    return x - below;
}

bool vertex_pair_holds(const Graph& i, const Graph& h, Vertex u, Vertex w)
{
    if (u == w)
        return false;
    const VertexSet removed{u};
    Graph j = testing::brute_hull(induced_subgraph(i, removed.complement(i.order())), h);
    for (Vertex a : i.neighbors(u))
        if (!j.adjacent(shifted(a, removed), shifted(w, removed)))
            return false;
    return true;
}

bool edge_pair_holds(const Graph& i, const Graph& h, Vertex u, Vertex v, Vertex ui, Vertex vi)
{
    const VertexSet removed{u, v};
    if (!i.adjacent(u, v) || removed.contains(ui) || removed.contains(vi) || ui == vi)
        return false;
    Graph j = testing::brute_hull(induced_subgraph(i, removed.complement(i.order())), h);
    auto in_j = [&](Vertex a, Vertex b) { return j.adjacent(shifted(a, removed), shifted(b, removed)); };
    if (!in_j(ui, vi))
        return false;
    for (Vertex a : i.neighbors(u) - removed)
        if (!in_j(a, ui))
            return false;
    for (Vertex a : i.neighbors(v) - removed)
        if (!in_j(a, vi))
            return false;
    return true;
}

} // namespace

TEST_CASE("rule schedules")
{
    RuleSchedule s = RuleSchedule::parse("vertices,10:edges");
    CHECK(s.at(9) == Rule::VerticesFirst);
    CHECK(s.at(10) == Rule::EdgesFirst);
    CHECK(s.to_string() == "vertices,10:edges");
    CHECK(RuleSchedule::parse(s.to_string()) == s);
    CHECK(RuleSchedule::parse("e").at(3) == Rule::EdgesFirst);
    CHECK(RuleSchedule::parse("EdgesFirst,4:v").at(4) == Rule::VerticesFirst);
    CHECK_THROWS_AS(RuleSchedule::parse("sideways"), ParseError);
    CHECK_THROWS_AS(RuleSchedule::parse("x:edges"), ParseError);
}

TEST_CASE("comparable vertices")
{
    CHECK(find_comparable_vertices(Graph(2), c5) == ComparablePair::vertices(0, 1));
    CHECK_FALSE(find_comparable_vertices(c5, c5));
    auto k2k1 = find_comparable_vertices(named("K2+K1"), c5);
    REQUIRE(k2k1);
    CHECK(k2k1->u == 2);
    CHECK((k2k1->u_image == 0 || k2k1->u_image == 1));
    CHECK_THROWS_AS(find_comparable_vertices(named("K3"), c5), PreconditionError);
}

TEST_CASE("comparable edges")
{
    CHECK(find_comparable_edges(named("2K2"), c5) == ComparablePair::edges(0, 1, 2, 3));
    CHECK_FALSE(find_comparable_edges(c5, c5));
    // End edge 01 of P4 maps onto 23: N(1) \ {0,1} = {2} is hull-adjacent to 3.
    CHECK(find_comparable_edges(named("P4"), c5) == ComparablePair::edges(0, 1, 2, 3));
    CHECK_THROWS_AS(find_comparable_edges(named("K3"), c5), PreconditionError);
}

TEST_CASE("comparable pairs agree with brute-force hulls")
{
    std::mt19937_64 rng(20);
    int checked = 0;
    while (checked < 300) {
        Graph i = testing::random_graph(rng, 2, 7);
        if (!exists_hom(i, c5))
            continue;
        ++checked;
        bool any_vertex = false;
        for (Vertex u = 0; u < i.order() && !any_vertex; ++u)
            for (Vertex w = 0; w < i.order() && !any_vertex; ++w)
                any_vertex = vertex_pair_holds(i, c5, u, w);
        auto vp = find_comparable_vertices(i, c5);
        REQUIRE(vp.has_value() == any_vertex);
        if (vp)
            REQUIRE(vertex_pair_holds(i, c5, vp->u, vp->u_image));

        bool any_edge = false;
        for (auto [u, v] : i.edges())
            for (Vertex a = 0; a < i.order() && !any_edge; ++a)
                for (Vertex b = 0; b < i.order() && !any_edge; ++b)
                    any_edge = edge_pair_holds(i, c5, u, v, a, b) || edge_pair_holds(i, c5, v, u, a, b);
        auto ep = find_comparable_edges(i, c5);
        REQUIRE(ep.has_value() == any_edge);
        if (ep)
            REQUIRE(edge_pair_holds(i, c5, ep->u, ep->v, ep->u_image, ep->v_image));
    }
}

TEST_CASE("low-degree pair choice")
{
    // 2K2 has no comparable vertices; both edges have degree 1.
    CHECK(find_low_degree_pair(named("2K2"), c5) == ComparablePair::edges(0, 1, 2, 3));
    CHECK_FALSE(find_low_degree_pair(c5, c5));
    CHECK_THROWS_AS(find_low_degree_pair(named("K3"), c5), PreconditionError);

    std::mt19937_64 rng(21);
    int checked = 0;
    while (checked < 300) {
        Graph i = testing::random_graph(rng, 2, 7);
        if (!exists_hom(i, c5))
            continue;
        ++checked;
        // Smallest maximum degree over domains that have some pair.
        std::size_t lightest = SIZE_MAX;
        for (Vertex u = 0; u < i.order(); ++u)
            for (Vertex w = 0; w < i.order(); ++w)
                if (vertex_pair_holds(i, c5, u, w))
                    lightest = std::min(lightest, i.neighbors(u).count());
        for (auto [u, v] : i.edges())
            for (Vertex a = 0; a < i.order(); ++a)
                for (Vertex b = 0; b < i.order(); ++b)
                    if (edge_pair_holds(i, c5, u, v, a, b) || edge_pair_holds(i, c5, v, u, a, b))
                        lightest = std::min(lightest, std::max(i.neighbors(u).count(), i.neighbors(v).count()));

        auto p = find_low_degree_pair(i, c5);
        REQUIRE(p.has_value() == (lightest != SIZE_MAX));
        if (!p)
            continue;
        std::size_t weight = 0;
        for (Vertex r : p->domain())
            weight = std::max(weight, i.neighbors(r).count());
        CHECK(weight == lightest);
        if (p->kind == ComparablePair::Kind::Vertex)
            CHECK(vertex_pair_holds(i, c5, p->u, p->u_image));
        else
            CHECK(edge_pair_holds(i, c5, p->u, p->v, p->u_image, p->v_image));
    }
}

TEST_CASE("retraction of a petal")
{
    // Q1 is two 5-cycles sharing vertex 0; it has no comparable vertices or
    // edges, but either petal folds onto the other.
    const Graph q1 = named("Q1");
    CHECK_FALSE(find_comparable_vertices(q1, c5));
    CHECK_FALSE(find_comparable_edges(q1, c5));
    auto rule = find_comparable_retraction(q1, c5);
    REQUIRE(rule);
    REQUIRE(rule->kind == ComparablePair::Kind::Retraction);
    const VertexSet u = rule->domain();
    CHECK(u.count() == 4);
    CHECK_FALSE(u.contains(0));

    // psi plus the identity maps every edge of Q1 to a hull edge of Q1 - U.
    const Graph j = testing::brute_hull(induced_subgraph(q1, u.complement(q1.order())), c5);
    auto image = [&](Vertex x) { return u.contains(x) ? rule->image(x) : x; };
    for (auto [a, b] : q1.edges()) {
        REQUIRE_FALSE(u.contains(image(a)));
        REQUIRE_FALSE(u.contains(image(b)));
        CHECK(j.adjacent(shifted(image(a), u), shifted(image(b), u)));
    }

    // A graph with a comparable vertex still has a retraction available,
    // but the generator only falls back to it.
    CHECK_FALSE(find_comparable_retraction(c5, c5));
}

TEST_CASE("candidate pruning cuts off supersets")
{
    const Graph i = Graph(4);
    std::set<std::vector<Vertex>> seen;
    const CandidatePrune prune = [](const VertexSet& s, const VertexSet&) { return s.contains(0); };
    for_each_candidate(i, std::nullopt, false, [&](const VertexSet& s) {
        seen.insert(std::vector<Vertex>(s.begin(), s.end()));
        return true;
    }, false, prune);
    // Every set containing 0 is built from {0}, so only {0} itself remains.
    CHECK(seen.size() == 9);
    CHECK(seen.count({0}) == 1);
    CHECK(seen.count({0, 1}) == 0);
    CHECK(seen.count({1, 2, 3}) == 1);
}

TEST_CASE("admissible neighborhoods")
{
    CHECK(admissible_neighborhoods(Graph(1), c5, std::nullopt).size() == 2);
    CHECK(admissible_neighborhoods(c5, c5, std::nullopt).size() == 32);
    CHECK(admissible_neighborhoods(c5, c5, std::nullopt, true).size() == 11);

    // Under rule (0, 1) every S contains 0, and S survives exactly when x
    // is not hull-adjacent to 1 once 0 is deleted.
    auto rule = ComparablePair::vertices(0, 1);
    auto sets = admissible_neighborhoods(Graph(2), c5, rule);
    for (const auto& s : sets)
        CHECK(s.contains(0));
    std::size_t expected = 0;
    for (const VertexSet& s : {VertexSet{0}, VertexSet{0, 1}}) {
        Graph child = add_vertex(Graph(2), s);
        Graph j = hull(delete_vertex(child, 0), c5);
        expected += !j.adjacent(0, 1);
    }
    CHECK(sets.size() == expected);
}

TEST_CASE("rule filter keeps children whose reduced graph is not colorable")
{
    HomSolver solver(c5);
    // Deleting 0 from K3 + pendant leaves K3: no hull, so the child is kept.
    Graph child = add_vertex(named("K3"), {0});
    CHECK(rule_admits(solver, child, ComparablePair::vertices(0, 3)));
}

TEST_CASE("generation from K1 without triangles and P6")
{
    GenerationReport r = expand(config("K1", {Pattern::path(6)}));
    CHECK(r.status == GenerationStatus::Complete);
    CHECK(orders(r.obstructions) == std::multiset<std::size_t>{3, 8, 8, 8});
    for (const auto& g : r.obstructions) {
        CHECK(is_minimal_obstruction(g, c5, Oracle::Primary));
        CHECK(is_minimal_obstruction(g, c5, Oracle::Independent));
        CHECK_FALSE(contains_induced(g, Pattern::path(6)));
    }
    CHECK(certificate_set(r.obstructions).size() == r.obstructions.size());
}

TEST_CASE("S(2,2,1)-free generation from C5")
{
    GenerationReport r = expand(config("C5", {Pattern::from_name(GraphName::subdivided_claw(2, 2, 1))}));
    CHECK(r.status == GenerationStatus::Complete);
    CHECK(orders(r.obstructions) == std::multiset<std::size_t>{3, 8, 13});
}

TEST_CASE("P7-free generation from C5 and C7")
{
    std::vector<Graph> all;
    for (const char* seed : {"C5", "C7"}) {
        GenerationConfig cfg = config(seed, {Pattern::path(7)});
        cfg.schedule = RuleSchedule::parse("vertices,10:edges");
        GenerationReport r = expand(cfg);
        CHECK(r.status == GenerationStatus::Complete);
        all.insert(all.end(), r.obstructions.begin(), r.obstructions.end());
    }
    CHECK(certificate_set(all).size() == 6);
}

TEST_CASE("rule choices find the same obstructions")
{
    for (const auto& [seed, f] : {std::pair{"K1", Pattern::path(6)},
                                  std::pair{"C5", Pattern::from_name(GraphName::subdivided_claw(2, 2, 1))}}) {
        GenerationConfig low = config(seed, {f});
        GenerationConfig first = low;
        first.rule_choice = RuleChoice::First;
        GenerationReport a = expand(low), b = expand(first);
        CHECK(a.status == GenerationStatus::Complete);
        CHECK(b.status == GenerationStatus::Complete);
        CHECK(certificate_set(a.obstructions) == certificate_set(b.obstructions));
    }
}

TEST_CASE("pruning does not lose obstructions")
{
    GenerationConfig pruned = config("K1", {Pattern::path(6)});
    GenerationReport a = expand(pruned);

    GenerationConfig plain = pruned;
    plain.comparable_rules = false;
    plain.triangle_prune = false;
    plain.connected_only = false;
    plain.max_order = 8;
    GenerationReport b = expand(plain);
    CHECK(b.status == GenerationStatus::TruncatedByOrder);
    CHECK(b.prunes_by_rule == 0);
    CHECK(certificate_set(b.obstructions) == certificate_set(a.obstructions, 8));
    CHECK(certificate_set(b.obstructions).size() == 4);
}

TEST_CASE("truncation is reported")
{
    GenerationConfig cfg = config("K1", {Pattern::path(7)});
    cfg.node_budget = 2000;
    GenerationReport r = expand(cfg);
    CHECK(r.status == GenerationStatus::TruncatedByBudget);
    CHECK(r.nodes_visited <= 2000);

    GenerationConfig small = config("K1", {Pattern::path(6)});
    small.max_order = 5;
    CHECK(expand(small).status == GenerationStatus::TruncatedByOrder);
}

TEST_CASE("configuration errors")
{
    GenerationConfig cfg = config("C5", {Pattern::path(6)});
    cfg.max_order = 4;
    CHECK_THROWS_AS(expand(cfg), ParameterError);
    cfg = config("C5", {Pattern::path(6)});
    cfg.node_budget = 0;
    CHECK_THROWS_AS(expand(cfg), ParameterError);
    cfg = config("C5", {Pattern::path(6)});
    cfg.target = named("K3");
    CHECK_THROWS_AS(expand(cfg), ParameterError);
    cfg.triangle_prune = false;
    cfg.node_budget = 1000;
    CHECK_NOTHROW(expand(cfg));
}

TEST_CASE("single-worker runs are deterministic and parallel runs agree")
{
    GenerationConfig cfg = config("C5", {Pattern::path(7)});
    cfg.schedule = RuleSchedule::parse("vertices,10:edges");
    GenerationReport a = expand(cfg);
    GenerationReport b = expand(cfg);
    CHECK(a.obstructions == b.obstructions);
    CHECK(a.nodes_visited == b.nodes_visited);
    CHECK(a.prunes_by_rule == b.prunes_by_rule);

    cfg.workers = 4;
    GenerationReport c = expand(cfg);
    CHECK(c.status == a.status);
    CHECK(certificate_set(c.obstructions) == certificate_set(a.obstructions));
}

TEST_CASE("progress callback fires")
{
    GenerationConfig cfg = config("C5", {Pattern::path(7)});
    cfg.schedule = RuleSchedule::parse("vertices,10:edges");
    cfg.progress_interval = 100;
    std::size_t calls = 0;
    cfg.progress = [&](const GenerationProgress& p) {
        ++calls;
        CHECK(p.nodes_visited > 0);
    };
    expand(cfg);
    CHECK(calls > 0);
}
