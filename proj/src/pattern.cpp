#include <obstruct/errors.hpp>
#include <obstruct/pattern.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>

namespace obstruct {

namespace {

// Greedy order: next is the unplaced vertex with the most placed
// neighbors, ties by degree (descending) then index.
std::vector<Vertex> connectivity_order(const Graph& f, Vertex first)
{
    const std::size_t n = f.order();
    std::vector<Vertex> order{first};
    VertexSet placed = VertexSet::singleton(first);
    while (order.size() < n) {
        Vertex best = 0;
        std::size_t best_links = 0, best_degree = 0;
        bool found = false;
        for (Vertex v = 0; v < n; ++v) {
            if (placed.contains(v))
                continue;
            std::size_t links = (f.neighbors(v) & placed).count();
            std::size_t deg = f.degree(v);
            if (!found || links > best_links || (links == best_links && deg > best_degree)) {
                best = v;
                best_links = links;
                best_degree = deg;
                found = true;
            }
        }
        order.push_back(best);
        placed.insert(best);
    }
    return order;
}

class Injector {
public:
    Injector(const Graph& g, const Pattern& f, const std::vector<Vertex>& order)
        : g_(g), f_(f), order_(order), map_(f.order()), position_(f.order())
    {
        for (std::size_t k = 0; k < order_.size(); ++k)
            position_[order_[k]] = static_cast<Vertex>(k);
        for (Vertex v = 0; v < g.order(); ++v)
            host_degree_.push_back(g.degree(v));
    }

    bool run(std::optional<Vertex> pinned_host)
    {
        if (f_.order() == 0)
            return true;
        if (f_.order() > g_.order())
            return false;
        pinned_ = pinned_host;
        return place(0, VertexSet{});
    }

    const std::vector<Vertex>& embedding() const { return map_; }

private:
    bool place(std::size_t k, const VertexSet& used)
    {
        if (k == order_.size())
            return true;
        const Vertex pv = order_[k];
        VertexSet cand;
        if (k == 0 && pinned_) {
            cand = VertexSet::singleton(*pinned_);
        }
        else {
            cand = g_.vertices() - used;
            for (Vertex pw : f_.graph().neighbors(pv))
                if (position_[pw] < k)
                    cand &= g_.neighbors(map_[pw]);
            for (std::size_t j = 0; j < k && !cand.empty(); ++j) {
                Vertex pw = order_[j];
                if (!f_.graph().adjacent(pv, pw))
                    cand -= g_.neighbors(map_[pw]);
            }
        }
        const std::size_t need = f_.graph().degree(pv);
        for (Vertex v : cand) {
            if (host_degree_[v] < need)
                continue;
            map_[pv] = v;
            VertexSet next = used;
            next.insert(v);
            if (place(k + 1, next))
                return true;
        }
        return false;
    }

    const Graph& g_;
    const Pattern& f_;
    const std::vector<Vertex>& order_;
    std::vector<Vertex> map_;
    std::vector<Vertex> position_;
    std::vector<std::size_t> host_degree_;
    std::optional<Vertex> pinned_;
};

// One-word vertex set for graphs of order at most 64, with just the
// operations the path search needs.
struct Mask64 {
    std::uint64_t bits = 0;

    static Mask64 singleton(Vertex v) { return {std::uint64_t{1} << v}; }
    void insert(Vertex v) { bits |= std::uint64_t{1} << v; }
    Mask64 operator|(Mask64 o) const { return {bits | o.bits}; }
    Mask64 operator-(Mask64 o) const { return {bits & ~o.bits}; }
    Mask64& operator|=(Mask64 o)
    {
        bits |= o.bits;
        return *this;
    }
    Mask64& operator-=(Mask64 o)
    {
        bits &= ~o.bits;
        return *this;
    }

    struct iterator {
        std::uint64_t rest;
        Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(rest)); }
        iterator& operator++()
        {
            rest &= rest - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {bits}; }
    iterator end() const { return {0}; }
};

template <class Set>
std::vector<Set> rows_of(const Graph& g);

template <>
std::vector<VertexSet> rows_of<VertexSet>(const Graph& g)
{
    std::vector<VertexSet> rows;
    for (Vertex v = 0; v < g.order(); ++v)
        rows.push_back(g.neighbors(v));
    return rows;
}

template <>
std::vector<Mask64> rows_of<Mask64>(const Graph& g)
{
    std::vector<Mask64> rows;
    for (Vertex v = 0; v < g.order(); ++v)
        rows.push_back({g.neighbors(v).words()[0]});
    return rows;
}

// Depth-first extension of induced paths from a start vertex. Only the
// last vertex is required to exceed the start, so each path is found from
// its smaller end.
template <class Set>
class BasicPathSearch {
public:
    BasicPathSearch(const Graph& g, unsigned t) : rows_(rows_of<Set>(g)), t_(t) {}

    bool from(Vertex s)
    {
        start_ = s;
        if (t_ == 1)
            return true;
        return extend(s, 1, Set::singleton(s));
    }

    // Path containing x: grow a right arm, then a left arm. Paths with x
    // inside are taken with the left arm starting above the right one.
    bool through(Vertex x)
    {
        if (t_ == 1)
            return true;
        x_ = x;
        return grow_right(x, x, 1, Set::singleton(x), Set{});
    }

private:
    bool extend(Vertex end, unsigned len, const Set& blocked)
    {
        Set cand = rows_[end] - blocked;
        if (len + 1 == t_) {
            for (Vertex y : cand)
                if (y > start_)
                    return true;
            return false;
        }
        const Set next_blocked = blocked | rows_[end];
        for (Vertex y : cand)
            if (extend(y, len + 1, next_blocked | Set::singleton(y)))
                return true;
        return false;
    }

    // `interior` is the union of neighborhoods of non-end path vertices.
    bool grow_right(Vertex left, Vertex right, unsigned len, const Set& path, const Set& interior)
    {
        if (len == t_)
            return true;
        if (right != x_ && grow_left(left, right, len, path, interior))
            return true;
        Set cand = rows_[right] - path - interior;
        Set next_interior = interior;
        if (right != x_) {
            cand -= rows_[left];
            next_interior |= rows_[right];
        }
        for (Vertex y : cand) {
            if (right == x_)
                first_right_ = y;
            Set next_path = path;
            next_path.insert(y);
            if (grow_right(left, y, len + 1, next_path, next_interior))
                return true;
        }
        return false;
    }

    bool grow_left(Vertex left, Vertex right, unsigned len, const Set& path, const Set& interior)
    {
        if (len == t_)
            return true;
        Set cand = rows_[left] - path - interior - rows_[right];
        const Set next_interior = interior | rows_[left];
        for (Vertex y : cand) {
            if (left == x_ && y < first_right_)
                continue;
            Set next_path = path;
            next_path.insert(y);
            if (grow_left(y, right, len + 1, next_path, next_interior))
                return true;
        }
        return false;
    }

    std::vector<Set> rows_;
    unsigned t_;
    Vertex start_ = 0;
    Vertex x_ = 0;
    Vertex first_right_ = 0;
};

class PathSearch {
public:
    PathSearch(const Graph& g, unsigned t) : small_(g.order() <= 64)
    {
        if (small_)
            narrow_.emplace(g, t);
        else
            wide_.emplace(g, t);
    }

    bool from(Vertex s) { return small_ ? narrow_->from(s) : wide_->from(s); }
    bool through(Vertex x) { return small_ ? narrow_->through(x) : wide_->through(x); }

private:
    bool small_;
    std::optional<BasicPathSearch<Mask64>> narrow_;
    std::optional<BasicPathSearch<VertexSet>> wide_;
};

// Induced matchings: edges taken in lexicographic order, each new edge
// strictly after the previous one and outside the closed neighborhoods of
// the chosen edges.
class MatchingSearch {
public:
    MatchingSearch(const Graph& g, unsigned q) : g_(g), q_(q), edges_(g.edges()) {}

    bool any()
    {
        return choose(0, 0, VertexSet{});
    }

    bool through(Vertex x)
    {
        for (Vertex y : g_.neighbors(x)) {
            VertexSet blocked = closed(x) | closed(y);
            if (choose(0, 1, blocked))
                return true;
        }
        return false;
    }

private:
    VertexSet closed(Vertex v) const { return g_.neighbors(v) | VertexSet::singleton(v); }

    bool choose(std::size_t from, unsigned have, const VertexSet& blocked)
    {
        if (have == q_)
            return true;
        for (std::size_t i = from; i < edges_.size(); ++i) {
            if (edges_.size() - i < q_ - have)
                return false;
            auto [a, b] = edges_[i];
            if (blocked.contains(a) || blocked.contains(b))
                continue;
            if (choose(i + 1, have + 1, blocked | closed(a) | closed(b)))
                return true;
        }
        return false;
    }

    const Graph& g_;
    unsigned q_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
};

void longest_from(const Graph& g, Vertex end, std::size_t len, const VertexSet& blocked, std::size_t& best)
{
    best = std::max(best, len);
    const VertexSet cand = g.neighbors(end) - blocked;
    const VertexSet next_blocked = blocked | g.neighbors(end);
    for (Vertex y : cand)
        longest_from(g, y, len + 1, next_blocked | VertexSet::singleton(y), best);
}

} // namespace

Pattern::Pattern(Graph f, Shape shape, unsigned parameter, std::string label)
    : graph_(std::move(f)), shape_(shape), parameter_(parameter), label_(std::move(label))
{
    const std::size_t n = graph_.order();
    for (Vertex v = 0; v < n; ++v)
        if (graph_.degree(v) > graph_.degree(root_))
            root_ = v;
    for (Vertex v = 0; v < n; ++v)
        orders_.push_back(connectivity_order(graph_, v));
}

Pattern Pattern::general(Graph f, std::string label)
{
    return Pattern(std::move(f), Shape::General, 0, std::move(label));
}

Pattern Pattern::path(unsigned t)
{
    if (t == 0)
        throw ParameterError("path pattern needs t >= 1");
    return Pattern(build(GraphName::path(t)), Shape::Path, t, "P" + std::to_string(t));
}

Pattern Pattern::matching(unsigned q)
{
    if (q == 0)
        throw ParameterError("matching pattern needs q >= 1");
    return Pattern(build(GraphName::matching(q)), Shape::Matching, q, std::to_string(q) + "K2");
}

Pattern Pattern::from_name(const GraphName& name)
{
    if (name.kind == GraphName::Kind::Path)
        return path(name.params.at(0));
    if (name.kind == GraphName::Kind::Matching)
        return matching(name.params.at(0));
    return general(build(name), to_string(name));
}

std::optional<std::vector<Vertex>> find_induced_general(const Graph& g, const Pattern& f,
                                                        std::optional<std::pair<Vertex, Vertex>> anchor)
{
    if (anchor) {
        if (anchor->first >= f.order() || anchor->second >= g.order())
            throw BoundsError("anchor out of range");
        Injector inj(g, f, f.search_order(anchor->first));
        if (inj.run(anchor->second))
            return inj.embedding();
        return std::nullopt;
    }
    if (f.order() == 0)
        return std::vector<Vertex>{};
    Injector inj(g, f, f.search_order());
    if (inj.run(std::nullopt))
        return inj.embedding();
    return std::nullopt;
}

bool contains_induced(const Graph& g, const Pattern& f)
{
    if (f.order() > g.order())
        return false;
    switch (f.shape()) {
        case Pattern::Shape::Path: {
            PathSearch search(g, f.parameter());
            for (Vertex s = 0; s < g.order(); ++s)
                if (search.from(s))
                    return true;
            return false;
        }
        case Pattern::Shape::Matching: return MatchingSearch(g, f.parameter()).any();
        case Pattern::Shape::General: return find_induced_general(g, f).has_value();
    }
    return false;
}

bool contains_induced_anchored(const Graph& g, const Pattern& f, Vertex pattern_vertex, Vertex x)
{
    return find_induced_general(g, f, std::pair{pattern_vertex, x}).has_value();
}

bool contains_induced_using(const Graph& g, const Pattern& f, Vertex x)
{
    if (x >= g.order())
        throw BoundsError("contains_induced_using: vertex out of range");
    if (f.order() > g.order())
        return false;
    switch (f.shape()) {
        case Pattern::Shape::Path: return PathSearch(g, f.parameter()).through(x);
        case Pattern::Shape::Matching: return MatchingSearch(g, f.parameter()).through(x);
        case Pattern::Shape::General:
            for (Vertex pv = 0; pv < f.order(); ++pv)
                if (contains_induced_anchored(g, f, pv, x))
                    return true;
            return false;
    }
    return false;
}

bool is_family_free(const Graph& g, std::span<const Pattern> fs)
{
    return std::none_of(fs.begin(), fs.end(), [&](const Pattern& f) { return contains_induced(g, f); });
}

std::size_t longest_induced_path(const Graph& g, std::optional<Vertex> from)
{
    std::size_t best = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (from && s != *from)
            continue;
        longest_from(g, s, 1, VertexSet::singleton(s), best);
    }
    return best;
}

} // namespace obstruct
