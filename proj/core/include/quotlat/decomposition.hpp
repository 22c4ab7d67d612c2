#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quotlat/automaton.hpp"
#include "quotlat/index_set.hpp"

namespace quotlat {

/// Quotients and atoms of a non-empty regular language, with every quotient
/// stored as the set of atoms it is the union of.
///
/// Indexing:
///   - L_j, B_j (j < n): state q_j of the minimal DFA; L_j is its right
///     language, B_j its left language.
///   - A_i, R_i (i < m): state s_i of the atomaton; A_i is its right language,
///     R_i its left language.
///
/// Left quotients are numbered by the canonical DFA numbering. Left atoms are
/// numbered with the final atom last and the others in canonical order of
/// their sets S (cardinality, then lexicographic), which puts the negative
/// atom, when present, first.
struct LanguageDecomposition {
    Dfa dfa;
    Nfa atomaton;

    /// n entries over m left atoms: L_j as a union of left atoms.
    std::vector<IndexSet> left_quotients;
    /// m entries over n right atoms: R_i as a union of right atoms.
    std::vector<IndexSet> right_quotients;
    /// m entries over n quotient indices: A_i = I_S.
    std::vector<IndexSet> left_atom_sets;
    /// n entries over m quotient indices: B_j = J_T.
    std::vector<IndexSet> right_atom_sets;

    std::size_t final_left_atom = 0;
    IndexSet initial_left_atoms;
    std::optional<std::size_t> negative_left_atom;

    std::size_t n() const { return left_quotients.size(); }
    std::size_t m() const { return right_quotients.size(); }
    const Alphabet& alphabet() const { return dfa.alphabet(); }
};

/// Throws EmptyLanguage when L(language) is empty.
LanguageDecomposition decompose(const Nfa& language);
LanguageDecomposition decompose(const Dfa& language);

/// The atomaton: states are left atoms, s_j in alpha(s_i, a) iff
/// A_j is contained in a^{-1} A_i; initial states are the atoms inside L,
/// the single final state is the atom containing the empty word.
Nfa atomaton(const LanguageDecomposition& d);

// Automata for individual quotients and atoms (all over the decomposition's
// alphabet). Useful for display and language-level verification.
Nfa left_quotient_automaton(const LanguageDecomposition& d, std::size_t j);
Nfa right_quotient_automaton(const LanguageDecomposition& d, std::size_t i);
Nfa left_atom_automaton(const LanguageDecomposition& d, std::size_t i);
Nfa right_atom_automaton(const LanguageDecomposition& d, std::size_t j);
/// Union of the given left atoms (resp. right atoms).
Nfa left_atoms_union_automaton(const LanguageDecomposition& d, const IndexSet& atoms);
Nfa right_atoms_union_automaton(const LanguageDecomposition& d, const IndexSet& atoms);

/// Dense Boolean matrix.
class BoolMatrix {
public:
    BoolMatrix() = default;
    BoolMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c] != 0; }
    void set(std::size_t r, std::size_t c, bool value) { cells_[r * cols_ + c] = value ? 1 : 0; }

    BoolMatrix transposed() const;
    std::vector<bool> column(std::size_t c) const;
    std::vector<bool> row(std::size_t r) const;

    friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> cells_;
};

/// n x m, entry (i, j) set iff A_j is contained in L_i.
using QuotientAtomMatrix = BoolMatrix;

QuotientAtomMatrix quotient_atom_matrix(const LanguageDecomposition& d);

/// The same construction on the right: m x n, entry (i, j) set iff B_j is
/// contained in R_i. Equal to the transpose of `quotient_atom_matrix`.
QuotientAtomMatrix right_quotient_atom_matrix(const LanguageDecomposition& d);

struct IdentityCheckOptions {
    /// Enumerate all subsets X (resp. Y) when m (resp. n) is at most this.
    std::size_t exhaustive_limit = 12;
    /// Number of random subsets drawn otherwise.
    std::size_t samples = 512;
    std::uint64_t seed = 0x5eed;
};

struct IdentityReport {
    std::size_t quotient_atom_checks = 0;
    std::size_t union_checks = 0;
    bool exhaustive_left = false;
    bool exhaustive_right = false;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks, on index sets, that
///   R_i = U{B_k : A_i in L_k} and L_j = U{A_l : B_j in R_l},
///   A_i in L_j  <=>  B_j in R_i,
/// and the four union/intersection identities relating a union X of left
/// atoms (resp. Y of right atoms) to the quotients on the other side.
IdentityReport verify_quotient_atom_identities(const LanguageDecomposition& d, const IdentityCheckOptions& options = {});

} // namespace quotlat
