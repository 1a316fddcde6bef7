#pragma once

#include <obstruct/graph.hpp>
#include <obstruct/pattern.hpp>

#include <optional>
#include <span>
#include <vector>

namespace obstruct {

/// Parameters of the circulant G(q, p) on qp - 2 vertices.
struct FamilyParams {
    unsigned q = 3;
    unsigned p = 1;

    std::size_t order() const noexcept { return std::size_t{q} * p - 2; }
};

/// Validates q odd >= 3, p >= 1 and qp - 2 <= Graph::capacity.
FamilyParams make_family_params(unsigned q, unsigned p);

/// Circulant on Z_{qp-2} with offsets {+-1} and {+-(qj - 1) : 1 <= j < p}.
/// Coinciding offsets collapse and offset 0 is dropped.
Graph build_gqp(const FamilyParams& params);

/// Residue class of vertex i modulo q.
unsigned type_of(Vertex i, unsigned q);

/// i ~ j iff 0 ~ (j - i) mod n, for every pair.
bool is_circulant(const Graph& g);

/// Whether `seq` lists distinct vertices inducing a path in this order.
bool is_induced_path(const Graph& g, std::span<const Vertex> seq);

/// G(q, p) is a minimal obstruction to h-coloring. Requires odd_girth(h) == q
/// and h free of C4 subgraphs (ParameterError otherwise). Once the circulant
/// structure is confirmed, only the deletion of vertex qp - 3 is checked.
bool certify_minimal_obstruction(const FamilyParams& params, const Graph& h);

struct FreenessVerdict {
    bool free = true;
    /// Smallest p with an induced copy, when not free.
    std::optional<unsigned> violating_p;
    /// Largest p examined.
    unsigned checked_up_to = 0;
};

/// Checks p = 1, ..., |V(f)| + 1 in increasing order and stops at the first
/// p whose G(q, p) contains f. A clean sweep means f-free for every p.
FreenessVerdict family_is_f_free(unsigned q, const Pattern& f);

/// Same test for a single p.
bool gqp_contains(const FamilyParams& params, const Pattern& f);

/// Explicit induced path on 3q - 3 vertices in G(q, p) for p >= 2q + 1,
/// verified before it is returned.
std::vector<Vertex> lowerpath_witness(unsigned q, unsigned p);

/// Vertex count of a longest induced path of G(q, p).
std::size_t gqp_longest_induced_path(const FamilyParams& params);

} // namespace obstruct
