#include "quotlat/index_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace quotlat {

namespace {

constexpr std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

} // namespace

IndexSet::IndexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

IndexSet::IndexSet(std::size_t universe, std::initializer_list<std::size_t> members) : IndexSet(universe) {
    for (std::size_t i : members) {
        insert(i);
    }
}

IndexSet IndexSet::full(std::size_t universe) {
    IndexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    s.clear_padding();
    return s;
}

IndexSet IndexSet::from_vector(std::size_t universe, const std::vector<std::size_t>& members) {
    IndexSet s(universe);
    for (std::size_t i : members) {
        s.insert(i);
    }
    return s;
}

std::size_t IndexSet::count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool IndexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool IndexSet::contains(std::size_t i) const {
    if (i >= universe_) {
        return false;
    }
    return (words_[i / 64] >> (i % 64)) & 1U;
}

void IndexSet::insert(std::size_t i) {
    if (i >= universe_) {
        throw std::out_of_range("IndexSet::insert: index " + std::to_string(i) + " outside universe of size " +
                                std::to_string(universe_));
    }
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void IndexSet::erase(std::size_t i) {
    if (i < universe_) {
        words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }
}

void IndexSet::check_compatible(const IndexSet& other) const {
    if (universe_ != other.universe_) {
        throw std::invalid_argument("IndexSet: universe mismatch (" + std::to_string(universe_) + " vs " +
                                    std::to_string(other.universe_) + ")");
    }
}

void IndexSet::clear_padding() {
    if (universe_ % 64 != 0 && !words_.empty()) {
        words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }
}

IndexSet& IndexSet::operator|=(const IndexSet& other) {
    check_compatible(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] |= other.words_[w];
    }
    return *this;
}

IndexSet& IndexSet::operator&=(const IndexSet& other) {
    check_compatible(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

IndexSet& IndexSet::operator-=(const IndexSet& other) {
    check_compatible(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= ~other.words_[w];
    }
    return *this;
}

IndexSet IndexSet::complement() const {
    IndexSet c = *this;
    for (auto& w : c.words_) {
        w = ~w;
    }
    c.clear_padding();
    return c;
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
    check_compatible(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) {
            return false;
        }
    }
    return true;
}

bool IndexSet::intersects(const IndexSet& other) const {
    check_compatible(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & other.words_[w]) != 0) {
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> IndexSet::to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

std::string IndexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](std::size_t i) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += std::to_string(i);
    });
    out += '}';
    return out;
}

std::size_t IndexSet::hash() const {
    std::size_t h = std::hash<std::size_t>{}(universe_);
    for (std::uint64_t w : words_) {
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

bool canonical_less(const IndexSet& a, const IndexSet& b) {
    const std::size_t ca = a.count();
    const std::size_t cb = b.count();
    if (ca != cb) {
        return ca < cb;
    }
    const auto va = a.to_vector();
    const auto vb = b.to_vector();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

} // namespace quotlat
