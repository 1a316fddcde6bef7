#pragma once

// Brute-force reference implementations and random generators shared by the
// test binaries. Everything here is deliberately naive.

#include <obstruct/constructions.hpp>
#include <obstruct/graph.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace testing {

using obstruct::Graph;
using obstruct::GraphBuilder;
using obstruct::Vertex;

inline Graph named(const char* text) { return obstruct::build(obstruct::parse_name(text)); }

inline Graph random_graph_with_density(std::mt19937_64& rng, std::size_t n, double density)
{
    std::bernoulli_distribution coin(density);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t min_order, std::size_t max_order)
{
    std::uniform_int_distribution<std::size_t> order(min_order, max_order);
    std::uniform_real_distribution<double> density(0.1, 0.7);
    const std::size_t n = order(rng);
    return random_graph_with_density(rng, n, density(rng));
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n)
{
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

/// Tries all |V(h)|^|V(g)| maps.
inline bool brute_hom(const Graph& g, const Graph& h)
{
    const std::size_t n = g.order(), m = h.order();
    if (n == 0)
        return true;
    if (m == 0)
        return false;
    std::vector<Vertex> c(n, 0);
    while (true) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (!h.adjacent(c[u], c[v])) {
                ok = false;
                break;
            }
        if (ok)
            return true;
        std::size_t k = 0;
        while (k < n && ++c[k] == m)
            c[k++] = 0;
        if (k == n)
            return false;
    }
}

/// Every homomorphism g -> h.
inline std::vector<std::vector<Vertex>> all_homs(const Graph& g, const Graph& h)
{
    std::vector<std::vector<Vertex>> out;
    const std::size_t n = g.order(), m = h.order();
    std::vector<Vertex> c(n, 0);
    if (n == 0) {
        out.push_back(c);
        return out;
    }
    while (true) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (!h.adjacent(c[u], c[v])) {
                ok = false;
                break;
            }
        if (ok)
            out.push_back(c);
        std::size_t k = 0;
        while (k < n && ++c[k] == m)
            c[k++] = 0;
        if (k == n)
            return out;
    }
}

/// hull(g, h) from the full list of homomorphisms.
inline Graph brute_hull(const Graph& g, const Graph& h)
{
    const auto homs = all_homs(g, h);
    GraphBuilder b(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (std::all_of(homs.begin(), homs.end(), [&](const auto& c) { return h.adjacent(c[u], c[v]); }))
                b.add_edge(u, v);
    return std::move(b).build();
}

inline bool brute_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    std::vector<Vertex> perm(a.order());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    do {
        if (obstruct::permute(a, perm) == b)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Induced copy of f in g, by trying every injective map in order.
inline bool brute_contains_induced(const Graph& g, const Graph& f)
{
    const std::size_t k = f.order(), n = g.order();
    if (k == 0)
        return true;
    if (k > n)
        return false;
    std::vector<Vertex> map;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self) -> bool {
        const std::size_t i = map.size();
        if (i == k)
            return true;
        for (Vertex v = 0; v < n; ++v) {
            if (used[v])
                continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = f.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) == g.adjacent(v, map[j]);
            if (!ok)
                continue;
            used[v] = true;
            map.push_back(v);
            if (self(self))
                return true;
            map.pop_back();
            used[v] = false;
        }
        return false;
    };
    return rec(rec);
}

/// All graphs on n labeled vertices (n <= 7 keeps this under 2^21).
inline std::vector<Graph> all_labeled_graphs(std::size_t n)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        GraphBuilder b(n);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1U)
                b.add_edge(pairs[k].first, pairs[k].second);
        out.push_back(std::move(b).build());
    }
    return out;
}

} // namespace testing
