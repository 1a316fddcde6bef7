#include <obstruct/errors.hpp>
#include <obstruct/homomorphism.hpp>

#include <algorithm>
#include <bit>
#include <cstring>
#include <deque>
#include <limits>
#include <numeric>

namespace obstruct {

PartialAssignment& PartialAssignment::assign(Vertex guest, Vertex host)
{
    if (guest >= images_.size())
        images_.resize(guest + 1);
    images_[guest] = host;
    return *this;
}

namespace {

using Domain = HomSolver::Domain;

// Orbits of Aut(h) by explicit automorphism search; only attempted for
// small targets, larger ones fall back to "every vertex is a representative".
class AutomorphismSearch {
public:
    explicit AutomorphismSearch(const Graph& h) : h_(h), image_(h.order()), used_(h.order()) {}

    bool exists_mapping(Vertex from, Vertex to)
    {
        std::fill(image_.begin(), image_.end(), unset);
        std::fill(used_.begin(), used_.end(), false);
        if (h_.degree(from) != h_.degree(to))
            return false;
        image_[from] = to;
        used_[to] = true;
        return extend(0);
    }

private:
    static constexpr Vertex unset = std::numeric_limits<Vertex>::max();

    bool extend(Vertex v)
    {
        while (v < h_.order() && image_[v] != unset)
            ++v;
        if (v == h_.order())
            return true;
        for (Vertex t = 0; t < h_.order(); ++t) {
            if (used_[t] || h_.degree(t) != h_.degree(v))
                continue;
            bool ok = true;
            for (Vertex w = 0; w < h_.order() && ok; ++w)
                if (image_[w] != unset && h_.adjacent(v, w) != h_.adjacent(t, image_[w]))
                    ok = false;
            if (!ok)
                continue;
            image_[v] = t;
            used_[t] = true;
            if (extend(v + 1))
                return true;
            image_[v] = unset;
            used_[t] = false;
        }
        return false;
    }

    const Graph& h_;
    std::vector<Vertex> image_;
    std::vector<bool> used_;
};

Domain orbit_representatives_of(const Graph& h)
{
    const std::size_t m = h.order();
    Domain all = m == 64 ? ~Domain{0} : ((Domain{1} << m) - 1);
    if (m > 16)
        return all;
    std::vector<Vertex> orbit(m);
    std::iota(orbit.begin(), orbit.end(), 0);
    AutomorphismSearch search(h);
    for (Vertex b = 1; b < m; ++b)
        for (Vertex a = 0; a < b; ++a)
            if (orbit[a] == a && search.exists_mapping(a, b)) {
                orbit[b] = a;
                break;
            }
    Domain reps = 0;
    for (Vertex v = 0; v < m; ++v)
        if (orbit[v] == v)
            reps |= Domain{1} << v;
    return reps;
}

class ForwardChecking {
public:
    ForwardChecking(const Graph& g, const VertexSet& active, const std::vector<Domain>& nbr)
        : g_(g), active_(active), nbr_(nbr), n_(g.order()), degree_(g.order(), 0)
    {
        for (Vertex v : active)
            degree_[v] = static_cast<unsigned>((g.neighbors(v) & active).count());
        levels_.resize((active.count() + 1) * n_);
    }

    bool run(std::span<const Domain> initial, Coloring* out)
    {
        for (Vertex v : active_)
            if (initial[v] == 0)
                return false;
        std::memcpy(levels_.data(), initial.data(), n_ * sizeof(Domain));
        out_ = out;
        return search(0, active_);
    }

private:
    bool search(std::size_t level, const VertexSet& unassigned)
    {
        if (unassigned.empty())
            return true;
        const Domain* dom = &levels_[level * n_];
        Vertex best = 0;
        int best_size = std::numeric_limits<int>::max();
        unsigned best_degree = 0;
        for (Vertex v : unassigned) {
            int size = std::popcount(dom[v]);
            if (size < best_size || (size == best_size && degree_[v] > best_degree)) {
                best = v;
                best_size = size;
                best_degree = degree_[v];
            }
        }
        VertexSet rest = unassigned;
        rest.erase(best);
        const VertexSet touched = g_.neighbors(best) & rest;
        Domain* next = &levels_[(level + 1) * n_];
        for (Domain choices = dom[best]; choices; choices &= choices - 1) {
            const auto a = static_cast<Vertex>(std::countr_zero(choices));
            std::memcpy(next, dom, n_ * sizeof(Domain));
            bool ok = true;
            for (Vertex y : touched) {
                next[y] &= nbr_[a];
                if (next[y] == 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            if (search(level + 1, rest)) {
                if (out_)
                    (*out_)[best] = a;
                return true;
            }
        }
        return false;
    }

    const Graph& g_;
    VertexSet active_;
    const std::vector<Domain>& nbr_;
    std::size_t n_;
    std::vector<unsigned> degree_;
    std::vector<Domain> levels_;
    Coloring* out_ = nullptr;
};

// Vertex-by-vertex backtracking in index order with no propagation.
class PlainBacktracking {
public:
    PlainBacktracking(const Graph& g, const Graph& h, const PartialAssignment& pre)
        : g_(g), h_(h), pre_(pre), color_(g.order(), unset)
    {
    }

    std::optional<Coloring> run()
    {
        if (!extend(0))
            return std::nullopt;
        return color_;
    }

private:
    static constexpr Vertex unset = std::numeric_limits<Vertex>::max();

    bool fits(Vertex v, Vertex a) const
    {
        for (Vertex w : g_.neighbors(v))
            if (w < v && !h_.adjacent(color_[w], a))
                return false;
        return true;
    }

    bool extend(Vertex v)
    {
        if (v == g_.order())
            return true;
        if (auto fixed = pre_[v]) {
            if (!fits(v, *fixed))
                return false;
            color_[v] = *fixed;
            return extend(v + 1);
        }
        for (Vertex a = 0; a < h_.order(); ++a) {
            if (!fits(v, a))
                continue;
            color_[v] = a;
            if (extend(v + 1))
                return true;
        }
        color_[v] = unset;
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    const PartialAssignment& pre_;
    Coloring color_;
};

void validate(const Graph& g, const Graph& h, const PartialAssignment& pre)
{
    if (h.order() == 0)
        throw PreconditionError("target graph must have at least one vertex");
    if (pre.size() > g.order())
        throw PreconditionError("precoloring references guest vertices outside the graph");
    for (Vertex v = 0; v < pre.size(); ++v)
        if (auto a = pre[v]; a && *a >= h.order())
            throw PreconditionError("precoloring references a host vertex outside the target");
}

} // namespace

HomSolver::HomSolver(Graph target) : target_(std::move(target))
{
    const std::size_t m = target_.order();
    if (m == 0)
        throw PreconditionError("target graph must have at least one vertex");
    if (m > max_target_order)
        throw CapacityError("target graph order exceeds 64");
    full_ = m == 64 ? ~Domain{0} : ((Domain{1} << m) - 1);
    nbr_.resize(m);
    for (Vertex a = 0; a < m; ++a)
        for (Vertex b : target_.neighbors(a))
            nbr_[a] |= Domain{1} << b;
    reps_ = orbit_representatives_of(target_);
}

bool HomSolver::solve(const Graph& g, const VertexSet& active, std::span<const Domain> domains, Coloring* out) const
{
    if (active.empty())
        return true;
    if (out)
        out->assign(g.order(), 0);
    ForwardChecking fc(g, active, nbr_);
    return fc.run(domains, out);
}

namespace {

// Highest-degree active vertex; its domain may be restricted to orbit
// representatives without losing solutions.
Vertex symmetry_anchor(const Graph& g, const VertexSet& active)
{
    Vertex best = *active.first();
    std::size_t best_degree = 0;
    for (Vertex v : active) {
        std::size_t d = (g.neighbors(v) & active).count();
        if (d > best_degree) {
            best = v;
            best_degree = d;
        }
    }
    return best;
}

} // namespace

bool HomSolver::colorable(const Graph& g, const VertexSet& active) const
{
    if (active.empty())
        return true;
    std::vector<Domain> dom(g.order(), full_);
    dom[symmetry_anchor(g, active)] = reps_;
    return solve(g, active, dom, nullptr);
}

std::optional<Coloring> HomSolver::find(const Graph& g, const VertexSet& active) const
{
    Coloring c;
    if (active.empty())
        return Coloring(g.order(), 0);
    std::vector<Domain> dom(g.order(), full_);
    dom[symmetry_anchor(g, active)] = reps_;
    if (!solve(g, active, dom, &c))
        return std::nullopt;
    return c;
}

std::optional<Coloring> HomSolver::find_separating(const Graph& g, const VertexSet& active, Vertex a, Vertex b) const
{
    std::vector<Domain> dom(g.order(), full_);
    Coloring c;
    for (Domain r = reps_; r; r &= r - 1) {
        const auto host = static_cast<Vertex>(std::countr_zero(r));
        dom[a] = Domain{1} << host;
        dom[b] = host_non_neighbors(host);
        if (solve(g, active, dom, &c))
            return c;
    }
    return std::nullopt;
}

HullOracle::HullOracle(const HomSolver& solver, const Graph& g, const VertexSet& active)
    : solver_(solver), g_(g), active_(active), n_(g.order()), pairs_(n_ * n_, Pair::Unknown)
{
}

bool HullOracle::colorable()
{
    if (!colorable_) {
        ++searches_;
        auto c = solver_.find(g_, active_);
        colorable_ = c.has_value();
        if (c)
            witnesses_.push_back(std::move(*c));
    }
    return *colorable_;
}

bool HullOracle::separated_by_witness(Vertex a, Vertex b) const
{
    const auto& h = solver_.target();
    for (const auto& c : witnesses_)
        if (!h.adjacent(c[a], c[b]))
            return true;
    return false;
}

bool HullOracle::adjacent(Vertex a, Vertex b)
{
    if (a == b)
        return false;
    if (g_.adjacent(a, b))
        return true;
    Pair& p = cell(a, b);
    if (p == Pair::Unknown) {
        if (separated_by_witness(a, b)) {
            p = Pair::NonEdge;
        }
        else {
            ++searches_;
            auto c = solver_.find_separating(g_, active_, a, b);
            if (c) {
                witnesses_.push_back(std::move(*c));
                p = Pair::NonEdge;
            }
            else {
                p = Pair::Edge;
            }
        }
        cell(b, a) = p;
    }
    return p == Pair::Edge;
}

VertexSet HullOracle::neighbors(Vertex a)
{
    VertexSet out;
    for (Vertex b : active_)
        if (adjacent(a, b))
            out.insert(b);
    return out;
}

bool is_hom(const Graph& g, const Graph& h, std::span<const Vertex> c)
{
    if (c.size() != g.order())
        return false;
    for (Vertex v : c)
        if (v >= h.order())
            return false;
    for (auto [u, v] : g.edges())
        if (!h.adjacent(c[u], c[v]))
            return false;
    return true;
}

std::optional<Coloring> find_hom(const Graph& g, const Graph& h, const PartialAssignment& pre, Oracle oracle)
{
    validate(g, h, pre);
    if (oracle == Oracle::Independent)
        return PlainBacktracking(g, h, pre).run();

    HomSolver solver(h);
    std::vector<Domain> dom(g.order(), solver.full_domain());
    bool any_fixed = false;
    for (Vertex v = 0; v < pre.size(); ++v)
        if (auto a = pre[v]) {
            dom[v] = Domain{1} << *a;
            any_fixed = true;
        }
    if (!any_fixed && g.order() > 0)
        dom[symmetry_anchor(g, g.vertices())] = solver.orbit_representatives();
    Coloring c;
    if (!solver.solve(g, g.vertices(), dom, &c))
        return std::nullopt;
    return c;
}

bool exists_hom(const Graph& g, const Graph& h, const PartialAssignment& pre, Oracle oracle)
{
    return find_hom(g, h, pre, oracle).has_value();
}

Graph hull(const Graph& g, const Graph& h)
{
    HomSolver solver(h);
    HullOracle oracle(solver, g, g.vertices());
    if (!oracle.colorable())
        throw PreconditionError("hull: guest graph is not colorable by the target");
    GraphBuilder b(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (oracle.adjacent(u, v))
                b.add_edge(u, v);
    return std::move(b).build();
}

bool is_minimal_obstruction(const Graph& g, const Graph& h, Oracle oracle)
{
    if (oracle == Oracle::Independent) {
        if (exists_hom(g, h, {}, oracle))
            return false;
        for (Vertex v = 0; v < g.order(); ++v)
            if (!exists_hom(delete_vertex(g, v), h, {}, oracle))
                return false;
        return true;
    }
    HomSolver solver(h);
    const auto all = g.vertices();
    if (solver.colorable(g, all))
        return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto rest = all;
        rest.erase(v);
        if (!solver.colorable(g, rest))
            return false;
    }
    return true;
}

std::optional<std::size_t> odd_girth(const Graph& g)
{
    const std::size_t n = g.order();
    std::optional<std::size_t> best;
    std::vector<std::size_t> dist(n);
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), unseen);
        std::deque<Vertex> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex v : g.neighbors(u)) {
                if (dist[v] == unseen) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
                else if (dist[v] == dist[u]) {
                    std::size_t len = 2 * dist[u] + 1;
                    if (!best || len < *best)
                        best = len;
                }
            }
        }
    }
    return best;
}

bool has_c4_subgraph(const Graph& g)
{
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if ((g.neighbors(u) & g.neighbors(v)).count() >= 2)
                return true;
    return false;
}

bool has_triangle(const Graph& g)
{
    for (auto [u, v] : g.edges())
        if (g.neighbors(u).intersects(g.neighbors(v)))
            return true;
    return false;
}

} // namespace obstruct
