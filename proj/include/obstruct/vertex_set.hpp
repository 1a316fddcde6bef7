#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>

namespace obstruct {

using Vertex = unsigned;

/// Fixed-width bit field over [0, capacity). All operations are exact and
/// allocation free.
class VertexSet {
public:
    static constexpr std::size_t capacity = 256;
    static constexpr std::size_t word_count = capacity / 64;
    using Word = std::uint64_t;

    constexpr VertexSet() noexcept = default;

    constexpr VertexSet(std::initializer_list<Vertex> vs) noexcept
    {
        for (Vertex v : vs)
            insert(v);
    }

    /// {0, ..., n-1}
    static constexpr VertexSet range(std::size_t n) noexcept
    {
        VertexSet s;
        for (std::size_t w = 0; w < word_count; ++w) {
            std::size_t lo = w * 64;
            if (n >= lo + 64)
                s.words_[w] = ~Word{0};
            else if (n > lo)
                s.words_[w] = (Word{1} << (n - lo)) - 1;
        }
        return s;
    }

    static constexpr VertexSet singleton(Vertex v) noexcept
    {
        VertexSet s;
        s.insert(v);
        return s;
    }

    constexpr bool contains(Vertex v) const noexcept
    {
        return v < capacity && ((words_[v >> 6] >> (v & 63)) & 1U);
    }

    constexpr void insert(Vertex v) noexcept { words_[v >> 6] |= Word{1} << (v & 63); }
    constexpr void erase(Vertex v) noexcept { words_[v >> 6] &= ~(Word{1} << (v & 63)); }

    constexpr void set(Vertex v, bool value) noexcept
    {
        if (value)
            insert(v);
        else
            erase(v);
    }

    constexpr std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (Word w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    constexpr bool empty() const noexcept
    {
        for (Word w : words_)
            if (w)
                return false;
        return true;
    }

    constexpr bool intersects(const VertexSet& o) const noexcept
    {
        for (std::size_t i = 0; i < word_count; ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    constexpr bool is_subset_of(const VertexSet& o) const noexcept
    {
        for (std::size_t i = 0; i < word_count; ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    /// Smallest member, if any.
    constexpr std::optional<Vertex> first() const noexcept
    {
        for (std::size_t i = 0; i < word_count; ++i)
            if (words_[i])
                return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
        return std::nullopt;
    }

    /// Members of {0..order-1} not in this set.
    constexpr VertexSet complement(std::size_t order) const noexcept { return range(order) - *this; }

    constexpr VertexSet& operator|=(const VertexSet& o) noexcept
    {
        for (std::size_t i = 0; i < word_count; ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    constexpr VertexSet& operator&=(const VertexSet& o) noexcept
    {
        for (std::size_t i = 0; i < word_count; ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    constexpr VertexSet& operator-=(const VertexSet& o) noexcept
    {
        for (std::size_t i = 0; i < word_count; ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
    friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
    friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }

    friend constexpr bool operator==(const VertexSet&, const VertexSet&) noexcept = default;
    friend constexpr auto operator<=>(const VertexSet&, const VertexSet&) noexcept = default;

    constexpr const std::array<Word, word_count>& words() const noexcept { return words_; }

    /// Ascending iteration over members.
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        constexpr iterator() noexcept = default;
        constexpr iterator(const VertexSet* s, std::size_t word) noexcept : set_(s), word_(word)
        {
            if (set_ && word_ < word_count) {
                bits_ = set_->words_[word_];
                advance();
            }
        }

        constexpr Vertex operator*() const noexcept
        {
            return static_cast<Vertex>(word_ * 64 + static_cast<std::size_t>(std::countr_zero(bits_)));
        }
        constexpr iterator& operator++() noexcept
        {
            bits_ &= bits_ - 1;
            advance();
            return *this;
        }
        constexpr iterator operator++(int) noexcept
        {
            auto t = *this;
            ++*this;
            return t;
        }
        friend constexpr bool operator==(const iterator& a, const iterator& b) noexcept
        {
            return a.word_ == b.word_ && a.bits_ == b.bits_;
        }

    private:
        constexpr void advance() noexcept
        {
            while (bits_ == 0 && ++word_ < word_count)
                bits_ = set_->words_[word_];
            if (word_ >= word_count) {
                word_ = word_count;
                bits_ = 0;
            }
        }

        const VertexSet* set_ = nullptr;
        std::size_t word_ = word_count;
        Word bits_ = 0;
    };

    constexpr iterator begin() const noexcept { return iterator(this, 0); }
    constexpr iterator end() const noexcept { return iterator(this, word_count); }

private:
    std::array<Word, word_count> words_{};
};

} // namespace obstruct
