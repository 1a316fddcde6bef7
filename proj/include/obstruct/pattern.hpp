#pragma once

#include <obstruct/constructions.hpp>
#include <obstruct/graph.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace obstruct {

/// A forbidden induced subgraph, optionally tagged with a shape that has a
/// dedicated search (induced paths, induced matchings).
class Pattern {
public:
    enum class Shape { General, Path, Matching };

    /// Untagged pattern; always searched with the general injector.
    static Pattern general(Graph f, std::string label = {});
    static Pattern path(unsigned t);
    static Pattern matching(unsigned q);
    /// Paths and matchings are tagged automatically.
    static Pattern from_name(const GraphName& name);

    const Graph& graph() const noexcept { return graph_; }
    Shape shape() const noexcept { return shape_; }
    /// t for Path(t), q for Matching(q), 0 otherwise.
    unsigned parameter() const noexcept { return parameter_; }
    const std::string& label() const noexcept { return label_; }
    std::size_t order() const noexcept { return graph_.order(); }

    /// Static search order for the general injector with `first` mapped first.
    const std::vector<Vertex>& search_order(Vertex first) const { return orders_[first]; }
    /// Search order used when no vertex is anchored.
    const std::vector<Vertex>& search_order() const { return orders_[root_]; }

private:
    Pattern(Graph f, Shape shape, unsigned parameter, std::string label);

    Graph graph_;
    Shape shape_ = Shape::General;
    unsigned parameter_ = 0;
    std::string label_;
    Vertex root_ = 0;
    std::vector<std::vector<Vertex>> orders_;
};

/// Some vertex subset of g induces a copy of f.
bool contains_induced(const Graph& g, const Pattern& f);

/// Some induced copy of f in g uses vertex x. If g - x is f-free this
/// equals contains_induced(g, f).
bool contains_induced_using(const Graph& g, const Pattern& f, Vertex x);

/// Some induced copy of f maps pattern vertex `pattern_vertex` onto `x`.
bool contains_induced_anchored(const Graph& g, const Pattern& f, Vertex pattern_vertex, Vertex x);

/// The general injector, ignoring any shape tag. `anchor` optionally pins
/// (pattern vertex, host vertex). Returns the embedding of pattern vertices.
std::optional<std::vector<Vertex>> find_induced_general(const Graph& g, const Pattern& f,
                                                        std::optional<std::pair<Vertex, Vertex>> anchor = {});

/// g is free of every pattern in fs (short-circuits).
bool is_family_free(const Graph& g, std::span<const Pattern> fs);

/// Number of vertices of a longest induced path (exhaustive; small graphs).
/// With `from` set, only paths starting at that vertex are considered.
std::size_t longest_induced_path(const Graph& g, std::optional<Vertex> from = {});

} // namespace obstruct
