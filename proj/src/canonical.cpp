#include <obstruct/canonical.hpp>
#include <obstruct/errors.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>

namespace obstruct {

namespace {

using Row = std::uint64_t;
using Partition = std::vector<std::uint8_t>; // color per vertex, 0..k-1

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : n_(g.order()), adj_(g.order(), 0)
    {
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : g.neighbors(v))
                adj_[v] |= Row{1} << w;
    }

    // Returns the canonical labeling: vertex v gets label perm[v].
    std::vector<Vertex> run()
    {
        Partition c(n_, 0);
        refine(c);
        std::vector<Vertex> path;
        search(c, path);
        return best_perm_;
    }

private:
    std::size_t colors_of(const Partition& c) const
    {
        std::size_t k = 0;
        for (auto x : c)
            k = std::max<std::size_t>(k, x + 1u);
        return k;
    }

    // Renumbers the colors in use to 0..k-1, keeping their order.
    static void compact(Partition& c)
    {
        std::array<int, 256> rank;
        rank.fill(-1);
        for (auto x : c)
            rank[x] = 0;
        int next = 0;
        for (auto& r : rank)
            if (r == 0)
                r = next++;
        for (auto& x : c)
            x = static_cast<std::uint8_t>(rank[x]);
    }

    // Splits colors by neighbor counts per color until stable. New colors
    // are ordered by (old color, count vector), so the result only depends
    // on the structure, never on the labels.
    void refine(Partition& c) const
    {
        compact(c);
        std::size_t k = colors_of(c);
        std::vector<std::uint8_t> counts(n_ * n_);
        std::vector<Vertex> order(n_);
        while (true) {
            std::fill(counts.begin(), counts.end(), 0);
            for (Vertex v = 0; v < n_; ++v)
                for (Row r = adj_[v]; r; r &= r - 1)
                    ++counts[v * n_ + c[std::countr_zero(r)]];
            std::iota(order.begin(), order.end(), 0);
            auto key_less = [&](Vertex a, Vertex b) {
                if (c[a] != c[b])
                    return c[a] < c[b];
                return std::lexicographical_compare(&counts[a * n_], &counts[a * n_ + k], &counts[b * n_],
                                                    &counts[b * n_ + k]);
            };
            auto key_equal = [&](Vertex a, Vertex b) {
                return c[a] == c[b] && std::equal(&counts[a * n_], &counts[a * n_ + k], &counts[b * n_]);
            };
            std::sort(order.begin(), order.end(), key_less);
            Partition next(n_);
            std::uint8_t color = 0;
            for (std::size_t i = 0; i < n_; ++i) {
                if (i > 0 && !key_equal(order[i - 1], order[i]))
                    ++color;
                next[order[i]] = color;
            }
            const std::size_t k2 = n_ == 0 ? 0 : std::size_t{color} + 1;
            c = std::move(next);
            if (k2 == k)
                return;
            k = k2;
        }
    }

    // First smallest non-singleton cell, as a vertex mask.
    std::optional<Row> target_cell(const Partition& c) const
    {
        std::vector<std::size_t> size(colors_of(c), 0);
        for (auto x : c)
            ++size[x];
        std::optional<std::size_t> best;
        for (std::size_t col = 0; col < size.size(); ++col)
            if (size[col] > 1 && (!best || size[col] < size[*best]))
                best = col;
        if (!best)
            return std::nullopt;
        Row mask = 0;
        for (Vertex v = 0; v < n_; ++v)
            if (c[v] == *best)
                mask |= Row{1} << v;
        return mask;
    }

    std::vector<Row> encode(const std::vector<Vertex>& perm) const
    {
        std::vector<Row> rows(n_, 0);
        for (Vertex v = 0; v < n_; ++v)
            for (Row r = adj_[v]; r; r &= r - 1)
                rows[perm[v]] |= Row{1} << perm[std::countr_zero(r)];
        return rows;
    }

    // Orbit representative of v under the stored automorphisms that fix
    // every vertex of `path`.
    Vertex orbit_rep(Vertex v, const std::vector<Vertex>& path) const
    {
        std::vector<Vertex> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](Vertex x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gen : automorphisms_) {
            if (!std::all_of(path.begin(), path.end(), [&](Vertex p) { return gen[p] == p; }))
                continue;
            for (Vertex x = 0; x < n_; ++x) {
                Vertex a = find(x), b = find(gen[x]);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        }
        return find(v);
    }

    static std::size_t common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
    {
        std::size_t k = 0;
        while (k < a.size() && k < b.size() && a[k] == b[k])
            ++k;
        return k;
    }

    void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to)
    {
        // Both are labelings with equal encodings: to^-1 . from is an automorphism.
        std::vector<Vertex> inv(n_);
        for (Vertex v = 0; v < n_; ++v)
            inv[to[v]] = v;
        std::vector<Vertex> gamma(n_);
        bool identity = true;
        for (Vertex v = 0; v < n_; ++v) {
            gamma[v] = inv[from[v]];
            identity = identity && gamma[v] == v;
        }
        if (!identity)
            automorphisms_.push_back(std::move(gamma));
    }

    // Returns the level to unwind to, or `none` to continue.
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    std::size_t search(const Partition& c, std::vector<Vertex>& path)
    {
        auto cell = target_cell(c);
        if (!cell)
            return leaf(c, path);
        std::vector<Vertex> tried;
        for (Row r = *cell; r; r &= r - 1) {
            const auto v = static_cast<Vertex>(std::countr_zero(r));
            if (!tried.empty()) {
                Vertex rep = orbit_rep(v, path);
                bool equivalent = false;
                for (Vertex t : tried)
                    if (orbit_rep(t, path) == rep) {
                        equivalent = true;
                        break;
                    }
                if (equivalent)
                    continue;
            }
            tried.push_back(v);
            Partition child(n_);
            for (Vertex w = 0; w < n_; ++w)
                child[w] = static_cast<std::uint8_t>(2 * c[w] + (w == v ? 0 : 1));
            refine(child);
            path.push_back(v);
            std::size_t jump = search(child, path);
            path.pop_back();
            if (jump != none && jump < path.size())
                return jump;
        }
        return none;
    }

    std::size_t leaf(const Partition& c, const std::vector<Vertex>& path)
    {
        std::vector<Vertex> perm(c.begin(), c.end());
        std::vector<Row> rows = encode(perm);
        if (!have_leaf_) {
            have_leaf_ = true;
            first_perm_ = best_perm_ = perm;
            first_rows_ = best_rows_ = std::move(rows);
            first_path_ = best_path_ = path;
            return none;
        }
        if (rows == first_rows_) {
            record_automorphism(perm, first_perm_);
            return common_prefix(path, first_path_);
        }
        if (rows == best_rows_) {
            record_automorphism(perm, best_perm_);
            return common_prefix(path, best_path_);
        }
        if (rows < best_rows_) {
            best_rows_ = std::move(rows);
            best_perm_ = perm;
            best_path_ = path;
        }
        return none;
    }

    std::size_t n_;
    std::vector<Row> adj_;
    bool have_leaf_ = false;
    std::vector<Vertex> first_perm_, best_perm_;
    std::vector<Row> first_rows_, best_rows_;
    std::vector<Vertex> first_path_, best_path_;
    std::vector<std::vector<Vertex>> automorphisms_;
};

std::vector<Vertex> canonical_labeling(const Graph& g)
{
    if (g.order() > 64)
        throw CapacityError("canonical form supports at most 64 vertices");
    if (g.order() == 0)
        return {};
    return Canonizer(g).run();
}

} // namespace

std::string Certificate::hex() const
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    for (auto b : bytes) {
        s += digits[b >> 4];
        s += digits[b & 15];
    }
    return s;
}

std::size_t CertificateHash::operator()(const Certificate& c) const noexcept
{
    std::size_t h = 14695981039346656037ull;
    for (auto b : c.bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

Graph canonical_graph(const Graph& g) { return permute(g, canonical_labeling(g)); }

Certificate canonical_form(const Graph& g)
{
    const Graph cg = canonical_graph(g);
    const std::size_t n = cg.order();
    Certificate cert;
    cert.bytes.push_back(static_cast<std::uint8_t>(n));
    std::uint8_t acc = 0;
    int filled = 0;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) {
            acc = static_cast<std::uint8_t>((acc << 1) | (cg.adjacent(i, j) ? 1 : 0));
            if (++filled == 8) {
                cert.bytes.push_back(acc);
                acc = 0;
                filled = 0;
            }
        }
    if (filled)
        cert.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
    return cert;
}

SeenStore::Shard& SeenStore::shard_for(const Certificate& c) const
{
    return shards_[CertificateHash{}(c) % shard_count];
}

bool SeenStore::insert_if_new(const Certificate& c)
{
    Shard& s = shard_for(c);
    std::lock_guard lock(s.mutex);
    return s.items.insert(c).second;
}

bool SeenStore::contains(const Certificate& c) const
{
    Shard& s = shard_for(c);
    std::lock_guard lock(s.mutex);
    return s.items.contains(c);
}

std::size_t SeenStore::size() const
{
    std::size_t total = 0;
    for (auto& s : shards_) {
        std::lock_guard lock(s.mutex);
        total += s.items.size();
    }
    return total;
}

} // namespace obstruct
