#include "gontd/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gontd {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> members) : VertexSet(universe) {
    for (VertexId v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (universe % 64) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    return s;
}

VertexSet VertexSet::singleton(std::size_t universe, VertexId v) {
    VertexSet s(universe);
    s.insert(v);
    return s;
}

void VertexSet::insert(VertexId v) {
    if (v >= universe_) throw std::out_of_range("vertex " + std::to_string(v) + " outside set universe");
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(VertexId v) {
    if (v >= universe_) throw std::out_of_range("vertex " + std::to_string(v) + " outside set universe");
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

VertexId VertexSet::front() const noexcept { return *begin(); }

void VertexSet::check_universe(const VertexSet& other) const {
    if (universe_ != other.universe_) throw std::invalid_argument("vertex sets over different universes");
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

bool VertexSet::operator<(const VertexSet& other) const {
    return std::lexicographical_compare(begin(), end(), other.begin(), other.end());
}

}  // namespace gontd
