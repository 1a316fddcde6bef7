#pragma once

#include <obstruct/graph.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace obstruct {

/// Host vertex per guest vertex; `std::nullopt` means unassigned.
class PartialAssignment {
public:
    PartialAssignment() = default;
    explicit PartialAssignment(std::size_t guest_order) : images_(guest_order) {}

    PartialAssignment& assign(Vertex guest, Vertex host);
    std::optional<Vertex> operator[](Vertex guest) const
    {
        return guest < images_.size() ? images_[guest] : std::nullopt;
    }
    std::size_t size() const noexcept { return images_.size(); }

private:
    std::vector<std::optional<Vertex>> images_;
};

/// Which decision procedure answers G -> H.
///   Primary      forward checking over host-candidate bitsets, smallest
///                candidate set first.
///   Independent  plain recursive backtracking in vertex index order.
enum class Oracle { Primary, Independent };

using Coloring = std::vector<Vertex>;

bool exists_hom(const Graph& g, const Graph& h, const PartialAssignment& pre = {}, Oracle oracle = Oracle::Primary);

std::optional<Coloring> find_hom(const Graph& g, const Graph& h, const PartialAssignment& pre = {},
                                 Oracle oracle = Oracle::Primary);

/// True iff `c` maps every edge of g onto an edge of h.
bool is_hom(const Graph& g, const Graph& h, std::span<const Vertex> c);

/// Supergraph of g on V(g) whose edges are the pairs mapped onto an edge of
/// h by every h-coloring. Throws PreconditionError if g is not h-colorable.
Graph hull(const Graph& g, const Graph& h);

/// Not h-colorable, while every one-vertex-deleted subgraph is.
bool is_minimal_obstruction(const Graph& g, const Graph& h, Oracle oracle = Oracle::Primary);

/// Length of a shortest odd cycle; nullopt for bipartite graphs.
std::optional<std::size_t> odd_girth(const Graph& g);

/// Whether some two distinct vertices share two neighbors.
bool has_c4_subgraph(const Graph& g);

bool has_triangle(const Graph& g);

/// Homomorphism search bound to one target graph of order <= 64.
///
/// Every query works on the subgraph of the guest induced by `active`, so
/// callers can test g - U without materializing it. Queries that only
/// constrain a single guest vertex use the orbits of Aut(h) to try one
/// host vertex per orbit.
class HomSolver {
public:
    using Domain = std::uint64_t;
    static constexpr std::size_t max_target_order = 64;

    explicit HomSolver(Graph target);

    const Graph& target() const noexcept { return target_; }
    Domain full_domain() const noexcept { return full_; }
    Domain host_neighbors(Vertex a) const noexcept { return nbr_[a]; }
    /// Host vertices b with ab not an edge, including a itself.
    Domain host_non_neighbors(Vertex a) const noexcept { return full_ & ~nbr_[a]; }
    /// One host vertex per automorphism orbit.
    Domain orbit_representatives() const noexcept { return reps_; }

    /// Core search. `domains` is indexed by guest vertex; entries outside
    /// `active` are ignored. On success the coloring is written to `out`
    /// (if non-null) for every active vertex.
    bool solve(const Graph& g, const VertexSet& active, std::span<const Domain> domains, Coloring* out) const;

    bool colorable(const Graph& g, const VertexSet& active) const;
    std::optional<Coloring> find(const Graph& g, const VertexSet& active) const;

    /// A coloring of g[active] with c(a)c(b) not an edge of the target
    /// (a == b in h allowed), if one exists.
    std::optional<Coloring> find_separating(const Graph& g, const VertexSet& active, Vertex a, Vertex b) const;

private:
    Graph target_;
    Domain full_ = 0;
    Domain reps_ = 0;
    std::vector<Domain> nbr_;
};

/// hull(g[active], h) evaluated lazily, one pair at a time. Every coloring
/// found while answering a query is kept as a witness and reused to settle
/// later pairs without searching.
class HullOracle {
public:
    HullOracle(const HomSolver& solver, const Graph& g, const VertexSet& active);

    bool colorable();
    /// Requires colorable(). Both vertices must be active.
    bool adjacent(Vertex a, Vertex b);
    /// Hull neighbors of a among the active vertices.
    VertexSet neighbors(Vertex a);

    const VertexSet& active() const noexcept { return active_; }
    std::size_t searches() const noexcept { return searches_; }

private:
    enum class Pair : std::uint8_t { Unknown, Edge, NonEdge };
    Pair& cell(Vertex a, Vertex b) { return pairs_[a * n_ + b]; }
    bool separated_by_witness(Vertex a, Vertex b) const;

    const HomSolver& solver_;
    const Graph& g_;
    VertexSet active_;
    std::size_t n_;
    std::optional<bool> colorable_;
    std::vector<Coloring> witnesses_;
    std::vector<Pair> pairs_;
    std::size_t searches_ = 0;
};

} // namespace obstruct
