#include "quotlat/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "quotlat/error.hpp"

namespace quotlat {

namespace {

/// Left atoms of the language of a canonical minimal DFA, read off the
/// reverse subset construction: the subset reached by w in the reversed DFA is
/// {i : reverse(w) in L_i}, so the reachable subsets are exactly the sets S
/// of non-empty atomic intersections I_S.
struct AtomSide {
    /// determinize(reverse(dfa)) renumbered by atom index; a minimal complete
    /// DFA of the reverse language whose initial state is the final atom.
    Dfa reverse_minimal;
    std::vector<IndexSet> atom_sets;
};

AtomSide atoms_of(const Dfa& minimal) {
    // A minimal DFA has no unreachable states and its dead state never enters
    // a reverse subset, so no trimming is needed to keep indices aligned.
    const Dfa rd = determinize(reverse(minimal.to_nfa()));
    const std::size_t m = rd.num_states();
    const auto& subsets = rd.provenance();

    std::vector<State> order(m);
    std::iota(order.begin(), order.end(), State{0});
    std::sort(order.begin(), order.end(), [&](State a, State b) {
        const bool a_final = a == rd.initial();
        const bool b_final = b == rd.initial();
        if (a_final != b_final) {
            return b_final;
        }
        return canonical_less(subsets[a], subsets[b]);
    });
    std::vector<State> renumber(m);
    for (std::size_t i = 0; i < m; ++i) {
        renumber[order[i]] = i;
    }

    Dfa renumbered(rd.alphabet(), m, renumber[rd.initial()]);
    std::vector<IndexSet> atom_sets(m);
    for (State q = 0; q < m; ++q) {
        for (std::size_t a = 0; a < rd.alphabet().size(); ++a) {
            renumbered.set_next(renumber[q], a, renumber[rd.next(q, a)]);
        }
        renumbered.set_final(renumber[q], rd.is_final(q));
        atom_sets[renumber[q]] = subsets[q];
    }
    return {std::move(renumbered), std::move(atom_sets)};
}

std::vector<State> require_isomorphism(const Dfa& a, const Dfa& b, const char* what) {
    auto iso = isomorphism(a, b);
    if (!iso) {
        throw std::logic_error(std::string("decompose: minimal machines are not isomorphic (") + what + ")");
    }
    return *std::move(iso);
}

IndexSet map_set(const IndexSet& s, const std::vector<State>& mapping, std::size_t universe) {
    IndexSet out(universe);
    s.for_each([&](std::size_t i) { out.insert(mapping[i]); });
    return out;
}

} // namespace

LanguageDecomposition decompose(const Nfa& language) {
    Dfa dfa = minimize(language);
    if (dfa.final_states().empty()) {
        throw EmptyLanguage();
    }
    const std::size_t n = dfa.num_states();
    AtomSide left = atoms_of(dfa);
    const std::size_t m = left.atom_sets.size();

    // Right side: the same construction applied to the reverse language. Its
    // left quotients are the reversed right quotients and its left atoms the
    // reversed right atoms; the two isomorphisms below relabel them so that
    // R_i sits with A_i and B_j with L_j.
    const Dfa mirror_dfa = minimize(reverse(dfa.to_nfa()));
    const AtomSide mirror = atoms_of(mirror_dfa);
    const auto quotient_to_atom = require_isomorphism(mirror_dfa, left.reverse_minimal, "reverse language");
    const auto atom_to_state = require_isomorphism(mirror.reverse_minimal, dfa, "language");

    LanguageDecomposition d{.dfa = dfa,
                            .atomaton = reverse(left.reverse_minimal.to_nfa()),
                            .left_quotients = std::vector<IndexSet>(n, IndexSet(m)),
                            .right_quotients = std::vector<IndexSet>(m, IndexSet(n)),
                            .left_atom_sets = std::move(left.atom_sets),
                            .right_atom_sets = std::vector<IndexSet>(n, IndexSet(m)),
                            .final_left_atom = m - 1,
                            .initial_left_atoms = IndexSet(m),
                            .negative_left_atom = std::nullopt};

    for (std::size_t i = 0; i < m; ++i) {
        const IndexSet& s = d.left_atom_sets[i];
        s.for_each([&](std::size_t j) { d.left_quotients[j].insert(i); });
        if (s.contains(dfa.initial())) {
            d.initial_left_atoms.insert(i);
        }
        if (s.empty()) {
            d.negative_left_atom = i;
        }
    }
    for (std::size_t k = 0; k < mirror.atom_sets.size(); ++k) {
        const State j = atom_to_state[k];
        d.right_atom_sets[j] = map_set(mirror.atom_sets[k], quotient_to_atom, m);
        mirror.atom_sets[k].for_each([&](std::size_t p) { d.right_quotients[quotient_to_atom[p]].insert(j); });
    }
    return d;
}

LanguageDecomposition decompose(const Dfa& language) { return decompose(language.to_nfa()); }

Nfa atomaton(const LanguageDecomposition& d) { return d.atomaton; }

Nfa left_quotient_automaton(const LanguageDecomposition& d, std::size_t j) {
    IndexSet start(d.n());
    start.insert(j);
    return with_initial(d.dfa.to_nfa(), start);
}

Nfa right_quotient_automaton(const LanguageDecomposition& d, std::size_t i) {
    IndexSet target(d.m());
    target.insert(i);
    return with_final(d.atomaton, target);
}

Nfa left_atom_automaton(const LanguageDecomposition& d, std::size_t i) {
    IndexSet start(d.m());
    start.insert(i);
    return with_initial(d.atomaton, start);
}

Nfa right_atom_automaton(const LanguageDecomposition& d, std::size_t j) {
    IndexSet target(d.n());
    target.insert(j);
    return with_final(d.dfa.to_nfa(), target);
}

Nfa left_atoms_union_automaton(const LanguageDecomposition& d, const IndexSet& atoms) {
    return with_initial(d.atomaton, atoms);
}

Nfa right_atoms_union_automaton(const LanguageDecomposition& d, const IndexSet& atoms) {
    return with_final(d.dfa.to_nfa(), atoms);
}

// ---------------------------------------------------------------------------

BoolMatrix BoolMatrix::transposed() const {
    BoolMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t.set(c, r, at(r, c));
        }
    }
    return t;
}

std::vector<bool> BoolMatrix::column(std::size_t c) const {
    std::vector<bool> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = at(r, c);
    }
    return out;
}

std::vector<bool> BoolMatrix::row(std::size_t r) const {
    std::vector<bool> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        out[c] = at(r, c);
    }
    return out;
}

QuotientAtomMatrix quotient_atom_matrix(const LanguageDecomposition& d) {
    QuotientAtomMatrix matrix(d.n(), d.m());
    for (std::size_t j = 0; j < d.m(); ++j) {
        d.left_atom_sets[j].for_each([&](std::size_t i) { matrix.set(i, j, true); });
    }
    return matrix;
}

QuotientAtomMatrix right_quotient_atom_matrix(const LanguageDecomposition& d) {
    QuotientAtomMatrix matrix(d.m(), d.n());
    for (std::size_t j = 0; j < d.n(); ++j) {
        d.right_atom_sets[j].for_each([&](std::size_t i) { matrix.set(i, j, true); });
    }
    return matrix;
}

// ---------------------------------------------------------------------------

namespace {

/// Calls f on every subset of {0..universe-1} (exhaustive) or on `samples`
/// uniformly random subsets. Returns whether the enumeration was exhaustive.
template <typename F>
bool for_subsets(std::size_t universe, const IdentityCheckOptions& options, std::mt19937_64& rng, F&& f) {
    if (universe <= options.exhaustive_limit) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe); ++mask) {
            IndexSet s(universe);
            for (std::size_t i = 0; i < universe; ++i) {
                if ((mask >> i) & 1U) {
                    s.insert(i);
                }
            }
            f(s);
        }
        return true;
    }
    std::bernoulli_distribution coin(0.5);
    for (std::size_t k = 0; k < options.samples; ++k) {
        IndexSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) {
            if (coin(rng)) {
                s.insert(i);
            }
        }
        f(s);
    }
    return false;
}

IndexSet union_over(const std::vector<IndexSet>& family, const IndexSet& selector, std::size_t universe) {
    IndexSet out(universe);
    selector.for_each([&](std::size_t i) { out |= family[i]; });
    return out;
}

/// Empty family gives the full set (Sigma*).
IndexSet intersection_over(const std::vector<IndexSet>& family, const IndexSet& selector, std::size_t universe) {
    IndexSet out = IndexSet::full(universe);
    selector.for_each([&](std::size_t i) { out &= family[i]; });
    return out;
}

} // namespace

IdentityReport verify_quotient_atom_identities(const LanguageDecomposition& d, const IdentityCheckOptions& options) {
    IdentityReport report;
    const std::size_t n = d.n();
    const std::size_t m = d.m();
    const auto& lq = d.left_quotients;
    const auto& rq = d.right_quotients;
    const auto violation = [&](std::string text) { report.violations.push_back(std::move(text)); };

    for (std::size_t i = 0; i < m; ++i) {
        IndexSet expected(n);
        for (std::size_t k = 0; k < n; ++k) {
            if (lq[k].contains(i)) {
                expected.insert(k);
            }
        }
        ++report.quotient_atom_checks;
        if (!(rq[i] == expected)) {
            violation("R_" + std::to_string(i) + " = " + rq[i].to_string() + " but the union of B_k over A_" +
                      std::to_string(i) + " in L_k is " + expected.to_string());
        }
        if (!(d.left_atom_sets[i] == expected)) {
            violation("A_" + std::to_string(i) + " has S = " + d.left_atom_sets[i].to_string() +
                      " but lies in the quotients " + expected.to_string());
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        IndexSet expected(m);
        for (std::size_t l = 0; l < m; ++l) {
            if (rq[l].contains(j)) {
                expected.insert(l);
            }
        }
        ++report.quotient_atom_checks;
        if (!(lq[j] == expected)) {
            violation("L_" + std::to_string(j) + " = " + lq[j].to_string() + " but the union of A_l over B_" +
                      std::to_string(j) + " in R_l is " + expected.to_string());
        }
        if (!(d.right_atom_sets[j] == expected)) {
            violation("B_" + std::to_string(j) + " has T = " + d.right_atom_sets[j].to_string() +
                      " but lies in the right quotients " + expected.to_string());
        }
        for (std::size_t i = 0; i < m; ++i) {
            ++report.quotient_atom_checks;
            if (lq[j].contains(i) != rq[i].contains(j)) {
                violation("A_" + std::to_string(i) + " in L_" + std::to_string(j) + " disagrees with B_" +
                          std::to_string(j) + " in R_" + std::to_string(i));
            }
        }
    }

    std::mt19937_64 rng(options.seed);
    report.exhaustive_left = for_subsets(m, options, rng, [&](const IndexSet& x) {
        const IndexSet outside = x.complement();
        IndexSet not_inside_x(n);
        IndexSet containing_x(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (!lq[j].is_subset_of(x)) {
                not_inside_x.insert(j);
            }
            if (x.is_subset_of(lq[j])) {
                containing_x.insert(j);
            }
        }
        report.union_checks += 2;
        if (!(union_over(rq, outside, n) == not_inside_x)) {
            violation("(1) fails for X = " + x.to_string());
        }
        if (!(intersection_over(rq, x, n) == containing_x)) {
            violation("(2) fails for X = " + x.to_string());
        }
    });
    report.exhaustive_right = for_subsets(n, options, rng, [&](const IndexSet& y) {
        const IndexSet outside = y.complement();
        IndexSet not_inside_y(m);
        IndexSet containing_y(m);
        for (std::size_t i = 0; i < m; ++i) {
            if (!rq[i].is_subset_of(y)) {
                not_inside_y.insert(i);
            }
            if (y.is_subset_of(rq[i])) {
                containing_y.insert(i);
            }
        }
        report.union_checks += 2;
        if (!(union_over(lq, outside, m) == not_inside_y)) {
            violation("(3) fails for Y = " + y.to_string());
        }
        if (!(intersection_over(lq, y, m) == containing_y)) {
            violation("(4) fails for Y = " + y.to_string());
        }
    });
    return report;
}

} // namespace quotlat
