#pragma once

#include <obstruct/graph.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace obstruct {

/// Symbolic description of one of the named graph shapes.
///
/// Labeling conventions (stable; test fixtures depend on them):
///   Path(t)            0-1-...-(t-1)
///   Cycle(t)           0-1-...-(t-1)-0
///   Complete(n)        0..n-1
///   SubdividedClaw     center 0; legs a, b, c follow in that order, each
///                      labeled outward from the center
///   Matching(q)        edges {2k, 2k+1}
///   QGadget(i)         shared subpath 0..i-1 first; then the rest of the
///                      first 5-cycle (i..4, closing 4-0); then the rest of
///                      the second 5-cycle (5..9-i, from i-1 back to 0)
///   Gqp(q, p)          vertices 0..qp-3 with the circulant offsets
///   DisjointUnion      vertices of the left part first
struct GraphName {
    enum class Kind { Path, Cycle, Complete, SubdividedClaw, Matching, DisjointUnion, QGadget, Gqp };

    Kind kind = Kind::Path;
    std::vector<unsigned> params;
    std::vector<GraphName> parts; // two entries for DisjointUnion

    static GraphName path(unsigned t);
    static GraphName cycle(unsigned t);
    static GraphName complete(unsigned n);
    /// Parameters are normalized to non-increasing order.
    static GraphName subdivided_claw(unsigned a, unsigned b, unsigned c);
    static GraphName matching(unsigned q);
    static GraphName q_gadget(unsigned i);
    static GraphName gqp(unsigned q, unsigned p);
    static GraphName disjoint_union(GraphName a, GraphName b);

    friend bool operator==(const GraphName&, const GraphName&) = default;
};

/// Validates the parameters and builds the graph. Throws ParameterError.
Graph build(const GraphName& name);

/// Parses `P<t> | C<t> | K<n> | S<a>,<b>,<c> | <q>K2 | Q<i> | G<q>,<p> | <name>+<name>`.
/// The separators inside S and G may be ',' or '-'; "S311" (one digit per
/// leg) is also accepted. `<m>K<n>` with n != 2 means m disjoint copies of
/// K_n. Throws ParseError with the position of the offending character.
GraphName parse_name(std::string_view text);

/// Canonical spelling of a name, e.g. "S2,2,1", "3K2", "P10+P2".
std::string to_string(const GraphName& name);

/// Splits a comma-separated list of names, keeping the commas that belong
/// to an S or G parameter list ("P8,S2,2,1,K3" -> P8, S2,2,1, K3).
std::vector<GraphName> parse_name_list(std::string_view text);

} // namespace obstruct
