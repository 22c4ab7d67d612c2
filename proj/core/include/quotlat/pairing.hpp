#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "quotlat/decomposition.hpp"
#include "quotlat/lattice.hpp"

namespace quotlat {

/// The Boolean semiring: addition is OR (so 1 + 1 = 1), multiplication AND.
class Bool2 {
public:
    constexpr Bool2() = default;
    constexpr explicit Bool2(bool value) : value_(value) {}

    constexpr bool value() const { return value_; }
    constexpr explicit operator bool() const { return value_; }

    friend constexpr Bool2 operator+(Bool2 a, Bool2 b) { return Bool2(a.value_ || b.value_); }
    friend constexpr Bool2 operator*(Bool2 a, Bool2 b) { return Bool2(a.value_ && b.value_); }
    constexpr Bool2& operator+=(Bool2 other) { return *this = *this + other; }
    friend constexpr bool operator==(Bool2, Bool2) = default;

    static constexpr Bool2 zero() { return Bool2(false); }
    static constexpr Bool2 one() { return Bool2(true); }

private:
    bool value_ = false;
};

/// Evaluation context for the pairing <A, B>_L = 1 iff some w in A and v in B
/// have wv in L, restricted to unions of right atoms (first argument) and
/// unions of left atoms (second argument).
///
/// On atoms the pairing is read from the right quotients: <B_i, A_j> = 1 iff
/// B_i lies in R_j. That is a different route from the quotient-atom matrix,
/// which is built from the sets S of the left atoms.
class PairingContext {
public:
    explicit PairingContext(LanguageDecomposition decomposition);

    const LanguageDecomposition& decomposition() const { return decomposition_; }
    /// The quotient-atom matrix of the decomposition.
    const QuotientAtomMatrix& matrix() const { return matrix_; }

private:
    LanguageDecomposition decomposition_;
    QuotientAtomMatrix matrix_;
};

/// <B_i, A_j>. Throws IndexOutOfRange.
Bool2 pair_atoms(const PairingContext& ctx, std::size_t right_atom, std::size_t left_atom);

/// Bilinear extension to unions of right atoms and unions of left atoms.
Bool2 pair_sets(const PairingContext& ctx, const IndexSet& right_atoms, const IndexSet& left_atoms);

/// Pairing of explicit finite word sets against the language of `language`.
Bool2 pair_words(const Dfa& language, std::span<const std::string> first, std::span<const std::string> second);

/// Y^perp for a union Y of right atoms, as the set of left atoms pairing to
/// zero with every atom of Y.
IndexSet orthogonal_complement(const PairingContext& ctx, const IndexSet& right_atoms);

/// Psi(X) = union of B_k with <B_k, complement of X> = 1.
LatticeElement psi_via_pairing(const PairingContext& ctx, const LatticeElement& x);
/// Phi(Z) = union of B_k whose orthogonal complement misses Z.
LatticeElement phi_via_pairing(const PairingContext& ctx, const LatticeElement& z);
/// Matrix with (i, j)-entry <B_i, A_j>.
QuotientAtomMatrix matrix_via_pairing(const PairingContext& ctx);

/// Restriction of the pairing to a right lattice element against a left
/// lattice element of the same operation (union or intersection).
Bool2 pair_lattice_elements(const PairingContext& ctx, const LatticeElement& right, const LatticeElement& left);

} // namespace quotlat
