#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace degcut {

/// Hard cap on the order of a Graph. All adjacency rows and vertex sets are
/// fixed-width bitsets of this many bits.
inline constexpr int max_vertices = 512;

/// A set of vertices of some graph, stored as a fixed-width bitset.
class VertexSet {
public:
    static constexpr std::size_t word_count = max_vertices / 64;

    VertexSet() = default;
    VertexSet(std::initializer_list<int> members) {
        for (int v : members)
            insert(v);
    }

    /// {0, ..., n-1}
    static VertexSet range(int n) {
        VertexSet s;
        for (std::size_t w = 0; n > 0; ++w, n -= 64)
            s.words_[w] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        return s;
    }

    static VertexSet from_word(std::uint64_t bits) {
        VertexSet s;
        s.words_[0] = bits;
        return s;
    }

    void insert(int v) { words_[v >> 6] |= bit(v); }
    void erase(int v) { words_[v >> 6] &= ~bit(v); }
    bool contains(int v) const { return (words_[v >> 6] & bit(v)) != 0; }

    int size() const {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }

    /// Smallest member, or -1.
    int first() const { return next(-1); }

    /// Smallest member strictly greater than v, or -1.
    int next(int v) const {
        int start = v + 1;
        if (start >= max_vertices)
            return -1;
        std::size_t w = static_cast<std::size_t>(start) >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (start & 63));
        while (true) {
            if (cur != 0)
                return static_cast<int>(w * 64 + std::countr_zero(cur));
            if (++w == word_count)
                return -1;
            cur = words_[w];
        }
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < word_count; ++w) {
            std::uint64_t cur = words_[w];
            while (cur != 0) {
                fn(static_cast<int>(w * 64 + std::countr_zero(cur)));
                cur &= cur - 1;
            }
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::uint64_t word(std::size_t i) const { return words_[i]; }

    bool subset_of(const VertexSet& other) const {
        for (std::size_t w = 0; w < word_count; ++w)
            if ((words_[w] & ~other.words_[w]) != 0)
                return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        for (std::size_t w = 0; w < word_count; ++w)
            if ((words_[w] & other.words_[w]) != 0)
                return true;
        return false;
    }

    int count_common(const VertexSet& other) const {
        int c = 0;
        for (std::size_t w = 0; w < word_count; ++w)
            c += std::popcount(words_[w] & other.words_[w]);
        return c;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t w = 0; w < word_count; ++w)
            words_[w] &= o.words_[w];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t w = 0; w < word_count; ++w)
            words_[w] |= o.words_[w];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t w = 0; w < word_count; ++w)
            words_[w] &= ~o.words_[w];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Lexicographic order on the ascending member lists.
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        int x = a.first(), y = b.first();
        while (x >= 0 && y >= 0) {
            if (x != y)
                return x <=> y;
            x = a.next(x);
            y = b.next(y);
        }
        return (x >= 0) <=> (y >= 0);
    }

private:
    static std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }

    std::array<std::uint64_t, word_count> words_{};
};

} // namespace degcut
