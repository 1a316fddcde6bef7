#pragma once

#include <obstruct/graph.hpp>
#include <obstruct/homomorphism.hpp>
#include <obstruct/pattern.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace obstruct {

/// Which comparable pair is searched for first at a given order.
enum class Rule { VerticesFirst, EdgesFirst };

/// Rule choice per order of the current graph, with a fallback.
class RuleSchedule {
public:
    RuleSchedule() = default;
    explicit RuleSchedule(Rule fallback) : fallback_(fallback) {}

    RuleSchedule& set(std::size_t order, Rule rule)
    {
        by_order_[order] = rule;
        return *this;
    }
    Rule at(std::size_t order) const;
    Rule fallback() const noexcept { return fallback_; }
    const std::map<std::size_t, Rule>& overrides() const noexcept { return by_order_; }

    /// Comma-separated tokens: `vertices` or `edges` sets the fallback,
    /// `<n>:vertices` or `<n>:edges` overrides one order.
    static RuleSchedule parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const RuleSchedule&, const RuleSchedule&) = default;

private:
    Rule fallback_ = Rule::VerticesFirst;
    std::map<std::size_t, Rule> by_order_;
};

/// Comparable vertices (u, w), or comparable edges uv -> u'v' with the
/// orientation u -> u', v -> v'. For the vertex kind `v` and `v_image` are
/// unused and `u_image` is w.
///
/// The retraction kind generalizes both to a vertex set U with a map
/// psi : U -> V(i) - U such that psi extended by the identity is a
/// homomorphism from i to hull(i - U, h). A minimal obstruction containing i
/// then has a vertex x adjacent to some r in U with psi(r) x outside the hull
/// of the extension minus U, exactly as for vertices and edges.
struct ComparablePair {
    enum class Kind { Vertex, Edge, Retraction };
    Kind kind = Kind::Vertex;
    Vertex u = 0, v = 0;
    Vertex u_image = 0, v_image = 0;
    /// Retraction kind only: U, and psi indexed by vertex.
    VertexSet set;
    std::vector<Vertex> images;

    static ComparablePair vertices(Vertex u, Vertex w) { return {Kind::Vertex, u, 0, w, 0, {}, {}}; }
    static ComparablePair edges(Vertex u, Vertex v, Vertex u_image, Vertex v_image)
    {
        return {Kind::Edge, u, v, u_image, v_image, {}, {}};
    }
    static ComparablePair retraction(VertexSet set, std::vector<Vertex> images)
    {
        return {Kind::Retraction, 0, 0, 0, 0, set, std::move(images)};
    }

    /// The deleted set U.
    VertexSet domain() const;
    /// psi(r) for r in U.
    Vertex image(Vertex r) const;

    friend bool operator==(const ComparablePair&, const ComparablePair&) = default;
};

/// First (u, w) in ascending (u, w) order with N(u) inside the neighborhood
/// of w in hull(i - u, h). Requires i to be h-colorable.
std::optional<ComparablePair> find_comparable_vertices(const Graph& i, const Graph& h);
std::optional<ComparablePair> find_comparable_vertices(const HomSolver& solver, const Graph& i);

/// First (uv, u'v') with uv ascending over edges of i and u'v' ascending
/// over edges of hull(i - {u, v}, h); the orientation u -> u' is tried
/// before u -> v'. Requires i to be h-colorable.
std::optional<ComparablePair> find_comparable_edges(const Graph& i, const Graph& h);
std::optional<ComparablePair> find_comparable_edges(const HomSolver& solver, const Graph& i);

/// The comparable pair whose deleted vertex or edge has the smallest maximum
/// degree. Ties go to vertices before edges (edges first under EdgesFirst),
/// then to ascending order. For each domain, an image dominating it in i
/// itself is preferred over one that needs hull edges. Requires i to be
/// h-colorable.
std::optional<ComparablePair> find_low_degree_pair(const Graph& i, const Graph& h, Rule first = Rule::VerticesFirst);
std::optional<ComparablePair> find_low_degree_pair(const HomSolver& solver, const Graph& i,
                                                   Rule first = Rule::VerticesFirst);

/// Smallest component U of i - C, over separators C of one or two vertices,
/// that retracts onto hull(i - U, h) with C fixed. Ties go to single
/// vertices first, then to separators and components in ascending order.
/// Requires i to be h-colorable.
std::optional<ComparablePair> find_comparable_retraction(const Graph& i, const Graph& h);

/// Whether `child` (whose last vertex is the new vertex x) survives the
/// filter of `rule`. Children whose reduced graph is not colorable are kept.
bool rule_admits(const HomSolver& solver, const Graph& child, const ComparablePair& rule);

/// Given a partial neighborhood S and the vertices still undecided, true
/// skips every extension of S.
using CandidatePrune = std::function<bool(const VertexSet& s, const VertexSet& open)>;

/// Calls `fn(S)` for every candidate neighborhood S of a new vertex:
/// every subset of V(i), restricted to S containing the rule's domain U
/// (vertex rule) or meeting it (edge and retraction rules), to independent
/// S under triangle_prune, and to non-empty S under nonempty. The hull
/// filter is not applied here. Return false from fn to stop. Supersets are
/// built by adding vertices in increasing order; `prune` may cut them off.
void for_each_candidate(const Graph& i, const std::optional<ComparablePair>& rule, bool triangle_prune,
                        const std::function<bool(const VertexSet&)>& fn, bool nonempty = false,
                        const CandidatePrune& prune = {});

/// Candidate neighborhoods that also pass the rule's hull filter.
std::vector<VertexSet> admissible_neighborhoods(const Graph& i, const Graph& h, const std::optional<ComparablePair>& rule,
                                                bool triangle_prune = false);

struct GenerationProgress {
    std::uint64_t nodes_visited = 0;
    std::size_t seen = 0;
    std::size_t obstructions = 0;
    std::size_t current_order = 0;
};

/// How a node picks its comparable pair. `First` takes the first pair in
/// ascending order, trying the kind named by the schedule first.
/// `LowDegree` uses find_low_degree_pair, which keeps the search finite on
/// inputs where the first pair found keeps reappearing after each expansion.
enum class RuleChoice { First, LowDegree };

struct GenerationConfig {
    Graph target;
    std::vector<Pattern> forbidden;
    Graph seed = Graph(1);
    RuleSchedule schedule;
    std::size_t max_order = 64;
    std::uint64_t node_budget = UINT64_MAX;
    /// Skip neighborhoods containing an edge and report K3 up front. Only
    /// valid for triangle-free targets.
    bool triangle_prune = true;
    /// Use the comparable vertex and edge rules.
    bool comparable_rules = true;
    RuleChoice rule_choice = RuleChoice::LowDegree;
    /// When neither applies, look for a retraction of a component cut off
    /// by one or two vertices. Needs comparable_rules.
    bool retraction_rules = true;
    /// With a connected seed, never add an isolated vertex. Minimal
    /// obstructions are connected, so nothing is lost.
    bool connected_only = true;
    unsigned workers = 1;
    /// Called every `progress_interval` nodes, from whichever worker.
    std::function<void(const GenerationProgress&)> progress;
    std::uint64_t progress_interval = 100000;
};

enum class GenerationStatus { Complete, TruncatedByOrder, TruncatedByBudget };

std::string to_string(GenerationStatus s);

struct GenerationReport {
    std::vector<Graph> obstructions;
    GenerationStatus status = GenerationStatus::Complete;
    /// Expansion steps, counting every candidate child before its pattern
    /// check. The budget is charged against this.
    std::uint64_t nodes_visited = 0;
    std::uint64_t prunes_by_rule = 0;
    std::uint64_t duplicates_rejected = 0;
    std::uint64_t forbidden_rejected = 0;
    std::uint64_t vertex_rules = 0;
    std::uint64_t edge_rules = 0;
    std::uint64_t retraction_rules = 0;
    std::size_t largest_order = 0;
};

/// Exhaustive expansion from cfg.seed. Obstructions are listed in discovery
/// order; with one worker the report is fully deterministic.
GenerationReport expand(const GenerationConfig& cfg);

} // namespace obstruct
