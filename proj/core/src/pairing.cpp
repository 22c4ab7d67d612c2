#include "quotlat/pairing.hpp"

#include "quotlat/error.hpp"

namespace quotlat {

namespace {

void require_universe(const IndexSet& s, std::size_t expected, const char* what) {
    if (s.universe() != expected) {
        throw IndexOutOfRange(std::string(what) + " must be a subset of " + std::to_string(expected) + " atoms");
    }
}

} // namespace

PairingContext::PairingContext(LanguageDecomposition decomposition)
    : decomposition_(std::move(decomposition)), matrix_(quotient_atom_matrix(decomposition_)) {}

Bool2 pair_atoms(const PairingContext& ctx, std::size_t right_atom, std::size_t left_atom) {
    const auto& d = ctx.decomposition();
    if (right_atom >= d.n() || left_atom >= d.m()) {
        throw IndexOutOfRange("pair_atoms: (" + std::to_string(right_atom) + ", " + std::to_string(left_atom) +
                              ") outside " + std::to_string(d.n()) + " x " + std::to_string(d.m()));
    }
    return Bool2(d.right_quotients[left_atom].contains(right_atom));
}

Bool2 pair_sets(const PairingContext& ctx, const IndexSet& right_atoms, const IndexSet& left_atoms) {
    require_universe(right_atoms, ctx.decomposition().n(), "first argument");
    require_universe(left_atoms, ctx.decomposition().m(), "second argument");
    Bool2 sum = Bool2::zero();
    right_atoms.for_each([&](std::size_t i) {
        left_atoms.for_each([&](std::size_t j) { sum += pair_atoms(ctx, i, j); });
    });
    return sum;
}

Bool2 pair_words(const Dfa& language, std::span<const std::string> first, std::span<const std::string> second) {
    for (const auto& w : first) {
        for (const auto& v : second) {
            if (language.accepts(w + v)) {
                return Bool2::one();
            }
        }
    }
    return Bool2::zero();
}

IndexSet orthogonal_complement(const PairingContext& ctx, const IndexSet& right_atoms) {
    const auto& d = ctx.decomposition();
    require_universe(right_atoms, d.n(), "orthogonal_complement argument");
    IndexSet out(d.m());
    for (std::size_t j = 0; j < d.m(); ++j) {
        IndexSet single(d.m());
        single.insert(j);
        if (!pair_sets(ctx, right_atoms, single)) {
            out.insert(j);
        }
    }
    return out;
}

LatticeElement psi_via_pairing(const PairingContext& ctx, const LatticeElement& x) {
    const auto& d = ctx.decomposition();
    if (!(x.kind == LatticeKind{LatticeOp::union_of, Side::left}) || x.atoms.universe() != d.m()) {
        throw ElementNotInLattice("psi_via_pairing expects an element of union-left");
    }
    const IndexSet outside = x.atoms.complement();
    IndexSet result(d.n());
    for (std::size_t k = 0; k < d.n(); ++k) {
        IndexSet single(d.n());
        single.insert(k);
        if (pair_sets(ctx, single, outside)) {
            result.insert(k);
        }
    }
    return {result, {LatticeOp::union_of, Side::right}};
}

LatticeElement phi_via_pairing(const PairingContext& ctx, const LatticeElement& z) {
    const auto& d = ctx.decomposition();
    if (!(z.kind == LatticeKind{LatticeOp::intersection_of, Side::left}) || z.atoms.universe() != d.m()) {
        throw ElementNotInLattice("phi_via_pairing expects an element of intersection-left");
    }
    IndexSet result(d.n());
    for (std::size_t k = 0; k < d.n(); ++k) {
        IndexSet single(d.n());
        single.insert(k);
        if (!z.atoms.intersects(orthogonal_complement(ctx, single))) {
            result.insert(k);
        }
    }
    return {result, {LatticeOp::intersection_of, Side::right}};
}

QuotientAtomMatrix matrix_via_pairing(const PairingContext& ctx) {
    const auto& d = ctx.decomposition();
    QuotientAtomMatrix matrix(d.n(), d.m());
    for (std::size_t i = 0; i < d.n(); ++i) {
        for (std::size_t j = 0; j < d.m(); ++j) {
            matrix.set(i, j, pair_atoms(ctx, i, j).value());
        }
    }
    return matrix;
}

Bool2 pair_lattice_elements(const PairingContext& ctx, const LatticeElement& right, const LatticeElement& left) {
    if (right.kind.side != Side::right || left.kind.side != Side::left || right.kind.op != left.kind.op) {
        throw ElementNotInLattice("pair_lattice_elements expects a right and a left element of the same operation");
    }
    return pair_sets(ctx, right.atoms, left.atoms);
}

} // namespace quotlat
