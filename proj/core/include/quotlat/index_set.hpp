#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace quotlat {

/// A subset of {0, ..., universe-1}, stored as a packed bit vector.
///
/// Quotients, atoms and lattice elements are all represented as index sets:
/// atoms partition Sigma*, so a union of atoms is identified exactly by the
/// indices of the atoms it contains.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::size_t universe);
    IndexSet(std::size_t universe, std::initializer_list<std::size_t> members);

    static IndexSet full(std::size_t universe);
    static IndexSet from_vector(std::size_t universe, const std::vector<std::size_t>& members);

    std::size_t universe() const { return universe_; }
    std::size_t count() const;
    bool empty() const;
    bool contains(std::size_t i) const;

    void insert(std::size_t i);
    void erase(std::size_t i);

    IndexSet& operator|=(const IndexSet& other);
    IndexSet& operator&=(const IndexSet& other);
    IndexSet& operator-=(const IndexSet& other);
    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

    IndexSet complement() const;
    bool is_subset_of(const IndexSet& other) const;
    bool intersects(const IndexSet& other) const;

    std::vector<std::size_t> to_vector() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int bit = std::countr_zero(bits);
                f(w * 64 + static_cast<std::size_t>(bit));
                bits &= bits - 1;
            }
        }
    }

    /// "{0,2,3}"
    std::string to_string() const;

    std::size_t hash() const;

    friend bool operator==(const IndexSet& a, const IndexSet& b) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;

    void check_compatible(const IndexSet& other) const;
    void clear_padding();
};

/// Canonical order: by cardinality, then lexicographically on the ascending
/// member lists.
bool canonical_less(const IndexSet& a, const IndexSet& b);

struct IndexSetHash {
    std::size_t operator()(const IndexSet& s) const { return s.hash(); }
};

} // namespace quotlat
