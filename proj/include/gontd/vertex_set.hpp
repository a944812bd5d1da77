#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace gontd {

using VertexId = std::uint32_t;

/// Subset of {0, ..., n-1} stored as a packed bitset.
///
/// Graphs of up to 64 vertices use a single word, so set algebra is a handful
/// of machine instructions; larger graphs fall back to a word array with the
/// same interface. All binary operations require equal universes.
class VertexSet {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = VertexId;
        using difference_type = std::ptrdiff_t;
        using pointer = const VertexId*;
        using reference = VertexId;

        const_iterator() = default;
        const_iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) { seek(); }

        VertexId operator*() const { return static_cast<VertexId>(pos_); }
        const_iterator& operator++() {
            ++pos_;
            seek();
            return *this;
        }
        const_iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

    private:
        void seek();

        const VertexSet* set_ = nullptr;
        std::size_t pos_ = 0;
    };

    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<VertexId> members);

    static VertexSet full(std::size_t universe);
    static VertexSet singleton(std::size_t universe, VertexId v);

    std::size_t universe() const noexcept { return universe_; }

    bool contains(VertexId v) const noexcept {
        return v < universe_ && (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void insert(VertexId v);
    void erase(VertexId v);

    std::size_t size() const noexcept;
    bool empty() const noexcept;

    /// Smallest member; universe() when empty.
    VertexId front() const noexcept;

    bool is_subset_of(const VertexSet& other) const;
    bool is_proper_subset_of(const VertexSet& other) const { return *this != other && is_subset_of(other); }
    bool intersects(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const;

    bool operator==(const VertexSet& other) const = default;

    /// Orders sets by their sorted member lists (lexicographic), which puts
    /// sets with a smaller least element first.
    bool operator<(const VertexSet& other) const;

    std::vector<VertexId> members() const { return {begin(), end()}; }

    const_iterator begin() const { return {this, 0}; }
    const_iterator end() const { return {this, universe_}; }

private:
    void check_universe(const VertexSet& other) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

inline void VertexSet::const_iterator::seek() {
    const std::size_t n = set_->universe_;
    while (pos_ < n) {
        const std::uint64_t word = set_->words_[pos_ >> 6] >> (pos_ & 63);
        if (word) {
            pos_ += static_cast<std::size_t>(std::countr_zero(word));
            if (pos_ > n) pos_ = n;
            return;
        }
        pos_ = (pos_ | 63) + 1;
    }
    pos_ = n;
}

}  // namespace gontd
