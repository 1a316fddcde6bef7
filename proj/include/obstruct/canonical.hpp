#pragma once

#include <obstruct/graph.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

namespace obstruct {

/// Isomorphism-invariant byte string: the order, then the upper triangle of
/// the canonically relabeled adjacency matrix, row by row, packed MSB first.
struct Certificate {
    std::vector<std::uint8_t> bytes;

    std::string hex() const;

    friend bool operator==(const Certificate&, const Certificate&) = default;
    friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

struct CertificateHash {
    std::size_t operator()(const Certificate& c) const noexcept;
};

/// Canonical certificate of g. Throws CapacityError for order > 64.
Certificate canonical_form(const Graph& g);

/// g relabeled into its canonical labeling. Same order limit.
Graph canonical_graph(const Graph& g);

/// Set of certificates safe for concurrent use.
class SeenStore {
public:
    /// True iff `c` was absent; afterwards it is present.
    bool insert_if_new(const Certificate& c);
    bool contains(const Certificate& c) const;
    std::size_t size() const;

private:
    static constexpr std::size_t shard_count = 16;
    struct Shard {
        mutable std::mutex mutex;
        std::unordered_set<Certificate, CertificateHash> items;
    };
    Shard& shard_for(const Certificate& c) const;

    mutable std::array<Shard, shard_count> shards_;
};

inline bool insert_if_new(SeenStore& store, const Certificate& c) { return store.insert_if_new(c); }

} // namespace obstruct
