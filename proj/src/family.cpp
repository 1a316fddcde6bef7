#include <obstruct/errors.hpp>
#include <obstruct/family.hpp>
#include <obstruct/homomorphism.hpp>

#include <string>

namespace obstruct {

FamilyParams make_family_params(unsigned q, unsigned p)
{
    if (q < 3 || q % 2 == 0)
        throw ParameterError("q must be odd and at least 3, got " + std::to_string(q));
    if (p < 1)
        throw ParameterError("p must be at least 1");
    const std::size_t n = std::size_t{q} * p - 2;
    if (n > Graph::capacity)
        throw CapacityError("G(" + std::to_string(q) + "," + std::to_string(p) + ") has " + std::to_string(n)
                            + " vertices, above the capacity of " + std::to_string(Graph::capacity));
    return FamilyParams{q, p};
}

Graph build_gqp(const FamilyParams& params)
{
    const FamilyParams checked = make_family_params(params.q, params.p);
    const std::size_t n = checked.order();
    std::vector<std::size_t> offsets{1};
    for (unsigned j = 1; j < checked.p; ++j)
        offsets.push_back((std::size_t{checked.q} * j - 1) % n);
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i)
        for (std::size_t d : offsets) {
            Vertex k = static_cast<Vertex>((i + d) % n);
            if (k != i)
                b.add_edge(i, k);
        }
    return std::move(b).build();
}

unsigned type_of(Vertex i, unsigned q)
{
    if (q == 0)
        throw ParameterError("q must be positive");
    return i % q;
}

bool is_circulant(const Graph& g)
{
    const std::size_t n = g.order();
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
            if (g.adjacent(i, j) != g.adjacent(0, static_cast<Vertex>((j + n - i) % n)))
                return false;
    return true;
}

bool is_induced_path(const Graph& g, std::span<const Vertex> seq)
{
    VertexSet seen;
    for (Vertex v : seq) {
        if (v >= g.order() || seen.contains(v))
            return false;
        seen.insert(v);
    }
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b)
            if (g.adjacent(seq[a], seq[b]) != (b == a + 1))
                return false;
    return true;
}

bool certify_minimal_obstruction(const FamilyParams& params, const Graph& h)
{
    const FamilyParams checked = make_family_params(params.q, params.p);
    auto girth = odd_girth(h);
    if (!girth || *girth != checked.q)
        throw ParameterError("target must have odd girth " + std::to_string(checked.q));
    if (has_c4_subgraph(h))
        throw ParameterError("target must not contain a 4-cycle");

    const Graph g = build_gqp(checked);
    if (!is_circulant(g))
        return is_minimal_obstruction(g, h);

    HomSolver solver(h);
    const VertexSet all = g.vertices();
    if (solver.colorable(g, all))
        return false;
    VertexSet rest = all;
    rest.erase(static_cast<Vertex>(g.order() - 1));
    return solver.colorable(g, rest);
}

bool gqp_contains(const FamilyParams& params, const Pattern& f)
{
    const Graph g = build_gqp(params);
    if (f.order() == 0)
        return true;
    if (f.order() > g.order())
        return false;
    // Rotations act transitively, so some copy (if any) passes through
    // vertex 0 with the search root of f placed there.
    switch (f.shape()) {
        case Pattern::Shape::Path:
        case Pattern::Shape::Matching: return contains_induced_using(g, f, 0);
        case Pattern::Shape::General: return contains_induced_anchored(g, f, f.search_order().front(), 0);
    }
    return contains_induced(g, f);
}

FreenessVerdict family_is_f_free(unsigned q, const Pattern& f)
{
    const auto last = static_cast<unsigned>(f.order() + 1);
    make_family_params(q, last);
    FreenessVerdict verdict;
    for (unsigned p = 1; p <= last; ++p) {
        verdict.checked_up_to = p;
        if (gqp_contains(FamilyParams{q, p}, f)) {
            verdict.free = false;
            verdict.violating_p = p;
            break;
        }
    }
    return verdict;
}

std::vector<Vertex> lowerpath_witness(unsigned q, unsigned p)
{
    const FamilyParams params = make_family_params(q, p);
    if (p < 2 * q + 1)
        throw PreconditionError("lowerpath witness needs p >= 2q + 1");
    const long n = static_cast<long>(params.order());
    const long qq = q;
    std::vector<Vertex> seq{0};
    for (long i = 1; i <= 3 * qq - 4; ++i) {
        long a = 0;
        if (i % 3 == 1)
            a = qq * qq - 1 - ((i - 1) / 3) * (qq + 1);
        else if (i % 3 == 2)
            a = 2 * qq * qq - 2 - ((i - 2) / 3) * (qq + 1);
        else
            a = 2 * qq * qq - 3 - ((i - 3) / 3) * (qq + 1);
        seq.push_back(static_cast<Vertex>(((a % n) + n) % n));
    }
    if (!is_induced_path(build_gqp(params), seq))
        throw InternalError("lowerpath witness failed verification for q=" + std::to_string(q)
                            + ", p=" + std::to_string(p));
    return seq;
}

std::size_t gqp_longest_induced_path(const FamilyParams& params)
{
    const Graph g = build_gqp(params);
    if (g.order() == 0)
        return 0;
    return longest_induced_path(g, Vertex{0});
}

} // namespace obstruct
