#include <obstruct/errors.hpp>
#include <obstruct/graph.hpp>

#include <cassert>
#include <string>

namespace obstruct {

namespace {

void check_capacity(std::size_t order)
{
    if (order > Graph::capacity)
        throw CapacityError("graph order " + std::to_string(order) + " exceeds capacity "
                            + std::to_string(Graph::capacity));
}

void check_vertex(const Graph& g, Vertex v)
{
    if (v >= g.order())
        throw BoundsError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(g.order()));
}

} // namespace

Graph::Graph(std::size_t order)
{
    check_capacity(order);
    rows_.resize(order);
}

Graph Graph::from_edges(std::size_t order, const std::vector<std::pair<Vertex, Vertex>>& edges)
{
    GraphBuilder b(order);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

std::size_t Graph::edge_count() const noexcept
{
    std::size_t twice = 0;
    for (const auto& r : rows_)
        twice += r.count();
    return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : rows_[u])
            if (v > u)
                out.emplace_back(u, v);
    return out;
}

VertexSet Graph::neighborhood_of(const VertexSet& s) const noexcept
{
    VertexSet out;
    for (Vertex v : s)
        out |= rows_[v];
    return out - s;
}

GraphBuilder::GraphBuilder(std::size_t order) : graph_(order) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v)
{
    check_vertex(graph_, u);
    check_vertex(graph_, v);
    if (u == v)
        throw PreconditionError("self-loop on vertex " + std::to_string(u));
    graph_.rows_[u].insert(v);
    graph_.rows_[v].insert(u);
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v)
{
    check_vertex(graph_, u);
    check_vertex(graph_, v);
    graph_.rows_[u].erase(v);
    graph_.rows_[v].erase(u);
    return *this;
}

Vertex GraphBuilder::append_vertex()
{
    check_capacity(graph_.order() + 1);
    graph_.rows_.emplace_back();
    return static_cast<Vertex>(graph_.order() - 1);
}

Graph GraphBuilder::build() && { return std::move(graph_); }
Graph GraphBuilder::build() const& { return graph_; }

Graph add_vertex(const Graph& g, const VertexSet& neighbors)
{
    if (!neighbors.is_subset_of(g.vertices()))
        throw BoundsError("new neighborhood references vertices outside the graph");
    GraphBuilder b(g);
    const Vertex x = b.append_vertex();
    for (Vertex v : neighbors)
        b.add_edge(x, v);
    Graph out = std::move(b).build();
    assert(is_well_formed(out));
    return out;
}

Graph delete_vertex(const Graph& g, Vertex v)
{
    check_vertex(g, v);
    auto keep = g.vertices();
    keep.erase(v);
    return induced_subgraph(g, keep);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s)
{
    if (!s.is_subset_of(g.vertices()))
        throw BoundsError("induced_subgraph: set references vertices outside the graph");
    std::vector<Vertex> index(g.order(), 0);
    std::vector<Vertex> members;
    for (Vertex v : s) {
        index[v] = static_cast<Vertex>(members.size());
        members.push_back(v);
    }
    GraphBuilder b(members.size());
    for (Vertex i = 0; i < members.size(); ++i)
        for (Vertex w : g.neighbors(members[i]) & s)
            if (index[w] > i)
                b.add_edge(i, index[w]);
    return std::move(b).build();
}

Graph permute(const Graph& g, const std::vector<Vertex>& perm)
{
    if (perm.size() != g.order())
        throw PreconditionError("permutation size does not match graph order");
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges())
        b.add_edge(perm[u], perm[v]);
    return std::move(b).build();
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    const auto shift = static_cast<Vertex>(a.order());
    GraphBuilder out(a.order() + b.order());
    for (auto [u, v] : a.edges())
        out.add_edge(u, v);
    for (auto [u, v] : b.edges())
        out.add_edge(u + shift, v + shift);
    return std::move(out).build();
}

bool is_well_formed(const Graph& g) noexcept
{
    const auto all = g.vertices();
    for (Vertex u = 0; u < g.order(); ++u) {
        const auto& r = g.neighbors(u);
        if (r.contains(u) || !r.is_subset_of(all))
            return false;
        for (Vertex v : r)
            if (!g.neighbors(v).contains(u))
                return false;
    }
    return true;
}

bool is_connected(const Graph& g) noexcept
{
    if (g.order() == 0)
        return true;
    VertexSet reached = VertexSet::singleton(0);
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier)
            next |= g.neighbors(v);
        frontier = next - reached;
        reached |= next;
    }
    return reached.count() == g.order();
}

} // namespace obstruct
