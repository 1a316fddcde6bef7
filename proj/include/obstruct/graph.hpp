#pragma once

#include <obstruct/vertex_set.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace obstruct {

/// Simple undirected graph on vertices {0, ..., order-1}, stored as one
/// adjacency bit row per vertex. Values are immutable once built; every
/// modifying operation returns a new graph.
class Graph {
public:
    static constexpr std::size_t capacity = VertexSet::capacity;

    Graph() = default;

    /// Edgeless graph on `order` vertices.
    explicit Graph(std::size_t order);

    static Graph from_edges(std::size_t order, const std::vector<std::pair<Vertex, Vertex>>& edges);

    std::size_t order() const noexcept { return rows_.size(); }
    VertexSet vertices() const noexcept { return VertexSet::range(rows_.size()); }

    const VertexSet& neighbors(Vertex v) const noexcept { return rows_[v]; }
    bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].contains(v); }
    std::size_t degree(Vertex v) const noexcept { return rows_[v].count(); }

    std::size_t edge_count() const noexcept;
    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Union of N(v) over v in s, minus s.
    VertexSet neighborhood_of(const VertexSet& s) const noexcept;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;
    std::vector<VertexSet> rows_;
};

/// Mutable staging area for constructing a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t order);
    explicit GraphBuilder(Graph g) : graph_(std::move(g)) {}

    GraphBuilder& add_edge(Vertex u, Vertex v);
    GraphBuilder& remove_edge(Vertex u, Vertex v);
    /// Appends an isolated vertex and returns its index.
    Vertex append_vertex();
    std::size_t order() const noexcept { return graph_.order(); }
    bool adjacent(Vertex u, Vertex v) const noexcept { return graph_.adjacent(u, v); }

    Graph build() &&;
    Graph build() const&;

private:
    Graph graph_;
};

/// Graph of order n+1 whose new last vertex has exactly `neighbors`.
Graph add_vertex(const Graph& g, const VertexSet& neighbors);

/// Induced subgraph on V(g) \ {v}, relabeled order-preservingly.
Graph delete_vertex(const Graph& g, Vertex v);

/// Induced subgraph on s, relabeled order-preservingly.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Relabels g so that vertex v becomes perm[v].
Graph permute(const Graph& g, const std::vector<Vertex>& perm);

/// Vertex-disjoint union; the vertices of b follow those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

/// The empty graph counts as connected.
bool is_connected(const Graph& g) noexcept;

/// Checks symmetry, irreflexivity and range of every row.
bool is_well_formed(const Graph& g) noexcept;

} // namespace obstruct
