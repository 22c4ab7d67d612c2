#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quotlat/decomposition.hpp"
#include "quotlat/index_set.hpp"

namespace quotlat {

enum class LatticeOp { union_of, intersection_of };
enum class Side { left, right };

struct LatticeKind {
    LatticeOp op = LatticeOp::union_of;
    Side side = Side::left;

    friend bool operator==(const LatticeKind&, const LatticeKind&) = default;
};

/// "union-left", "intersection-right", ...
std::string to_string(const LatticeKind& kind);
/// Inverse of to_string; throws std::invalid_argument.
LatticeKind parse_lattice_kind(const std::string& text);

/// A union (resp. intersection) of quotients, identified by the atoms it
/// contains: left-atom indices for left lattices, right-atom indices for
/// right lattices. The full atom set denotes Sigma*.
struct LatticeElement {
    IndexSet atoms;
    LatticeKind kind;

    friend bool operator==(const LatticeElement&, const LatticeElement&) = default;
};

class QuotientLattice {
public:
    QuotientLattice(LatticeKind kind, std::vector<IndexSet> generators, std::size_t atom_count);

    const LatticeKind& kind() const { return kind_; }
    std::size_t atom_count() const { return atom_count_; }
    std::size_t size() const { return elements_.size(); }

    /// Elements in canonical order (cardinality, then lexicographic).
    const std::vector<IndexSet>& elements() const { return elements_; }
    const std::vector<IndexSet>& generators() const { return generators_; }
    LatticeElement element(std::size_t index) const { return {elements_[index], kind_}; }

    bool contains(const IndexSet& atoms) const { return index_.count(atoms) != 0; }
    bool contains(const LatticeElement& e) const { return e.kind == kind_ && contains(e.atoms); }
    /// Throws ElementNotInLattice.
    std::size_t index_of(const IndexSet& atoms) const;

    LatticeElement bottom() const;
    LatticeElement top() const;

    /// Cover relation of the containment order as (lower, upper) index pairs.
    std::vector<std::pair<std::size_t, std::size_t>> cover_edges() const;

private:
    LatticeKind kind_;
    std::size_t atom_count_;
    std::vector<IndexSet> generators_;
    std::vector<IndexSet> elements_;
    std::unordered_map<IndexSet, std::size_t, IndexSetHash> index_;
};

/// All unions (resp. intersections) of the quotients on the given side,
/// including the empty union (empty set) and the empty intersection (Sigma*).
QuotientLattice build_lattice(const LanguageDecomposition& d, LatticeKind kind);

/// Union lattices: set union. Intersection lattices: intersection of every
/// generator containing a | b (Sigma* when there is none).
LatticeElement join(const QuotientLattice& l, const LatticeElement& a, const LatticeElement& b);
/// Intersection lattices: set intersection. Union lattices: union of every
/// generator contained in a & b.
LatticeElement meet(const QuotientLattice& l, const LatticeElement& a, const LatticeElement& b);

/// Exhaustive check of the distributive law over all triples.
bool is_distributive(const QuotientLattice& l);

// Duality maps between left and right lattices.
/// Psi(X) = union of R_i over the left atoms A_i not inside X.
LatticeElement psi(const LanguageDecomposition& d, const LatticeElement& x);
/// Psi'(Y) = union of L_i over the right atoms B_i not inside Y.
LatticeElement psi_prime(const LanguageDecomposition& d, const LatticeElement& y);
/// Phi(X) = intersection of R_j over the left atoms A_j inside X.
LatticeElement phi(const LanguageDecomposition& d, const LatticeElement& x);
/// Phi'(Y) = intersection of L_j over the right atoms B_j inside Y.
LatticeElement phi_prime(const LanguageDecomposition& d, const LatticeElement& y);

enum class DualityTheorem { unions, intersections };

struct DualityReport {
    DualityTheorem which = DualityTheorem::unions;
    std::size_t left_size = 0;
    std::size_t right_size = 0;
    bool bijective = false;
    bool order_reversing = false;
    bool exchanges_meet_join = false;
    std::vector<std::string> witnesses;

    bool ok() const { return bijective && order_reversing && exchanges_meet_join && witnesses.empty(); }
};

/// Checks that Psi (unions) or Phi (intersections) is a bijection from the
/// left lattice onto the right one that reverses inclusion and exchanges
/// meets with joins, over all element pairs.
DualityReport verify_duality(const LanguageDecomposition& d, DualityTheorem which);

} // namespace quotlat
