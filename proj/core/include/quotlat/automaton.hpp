#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quotlat/index_set.hpp"

namespace quotlat {

using State = std::size_t;

/// Ordered finite alphabet of single printable characters. The order is the
/// one used for every canonical numbering and word ordering in the library.
class Alphabet {
public:
    explicit Alphabet(std::string_view symbols);

    std::size_t size() const { return symbols_.size(); }
    char symbol(std::size_t index) const { return symbols_[index]; }
    std::optional<std::size_t> index_of(char c) const;
    const std::string& symbols() const { return symbols_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string symbols_;
};

class Dfa;

/// Nondeterministic finite automaton without epsilon moves.
class Nfa {
public:
    Nfa(Alphabet alphabet, std::size_t num_states);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t num_states() const { return successors_.size(); }

    State add_state();
    void add_transition(State from, std::size_t symbol, State to);
    void set_initial(State q, bool value = true);
    void set_final(State q, bool value = true);
    void set_initial(const IndexSet& states);
    void set_final(const IndexSet& states);

    /// Sorted, duplicate-free successor list.
    const std::vector<State>& successors(State q, std::size_t symbol) const { return successors_[q][symbol]; }
    const IndexSet& initial() const { return initial_; }
    const IndexSet& final_states() const { return final_; }
    bool is_initial(State q) const { return initial_.contains(q); }
    bool is_final(State q) const { return final_.contains(q); }

    /// delta(from, symbol), lifted to sets.
    IndexSet step(const IndexSet& from, std::size_t symbol) const;
    bool accepts(std::string_view word) const;

    std::size_t num_transitions() const;

    friend bool operator==(const Nfa&, const Nfa&) = default;

private:
    Alphabet alphabet_;
    std::vector<std::vector<std::vector<State>>> successors_;
    IndexSet initial_;
    IndexSet final_;

    void check_state(State q) const;
};

/// Complete deterministic finite automaton.
class Dfa {
public:
    /// All transitions initially point to state 0; callers overwrite them.
    Dfa(Alphabet alphabet, std::size_t num_states, State initial);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t num_states() const { return final_.universe(); }

    State initial() const { return initial_; }
    State next(State q, std::size_t symbol) const { return delta_[q * alphabet_.size() + symbol]; }
    void set_next(State q, std::size_t symbol, State to);
    void set_final(State q, bool value = true);
    const IndexSet& final_states() const { return final_; }
    bool is_final(State q) const { return final_.contains(q); }

    /// For machines produced by `determinize`: the set of source states each
    /// DFA state stands for. Empty otherwise.
    const std::vector<IndexSet>& provenance() const { return provenance_; }
    void set_provenance(std::vector<IndexSet> subsets);

    bool accepts(std::string_view word) const;
    Nfa to_nfa() const;

    /// Structural equality (same numbering); provenance is ignored.
    friend bool operator==(const Dfa& a, const Dfa& b);

private:
    Alphabet alphabet_;
    std::vector<State> delta_;
    State initial_;
    IndexSet final_;
    std::vector<IndexSet> provenance_;
};

enum class Direction { left, right };

struct StateLanguageQuery {
    State state = 0;
    Direction direction = Direction::right;
    std::size_t length_bound = 0;
};

Nfa reverse(const Nfa& n);

/// Subset construction from the initial set; only reachable subsets become
/// states (the empty subset included, when reachable). States are numbered in
/// breadth-first discovery order, symbols explored in alphabet order.
Dfa determinize(const Nfa& n);

/// Removes unreachable and empty states, preserving relative order.
Nfa trim(const Nfa& n);

/// Double-reversal minimization with a trim before each determinization.
/// The result is complete and canonically numbered (see `canonicalize`).
Dfa minimize(const Nfa& n);
Dfa minimize(const Dfa& d);

/// Renumbers reachable states breadth-first from the initial state, following
/// alphabet order, with states whose right language is empty moved to the end.
/// Unreachable states are dropped.
Dfa canonicalize(const Dfa& d);

/// Isomorphism test for complete DFAs restricted to their reachable parts.
bool isomorphic(const Dfa& a, const Dfa& b);

/// Maps each state of `a` to the corresponding state of `b` (paired
/// breadth-first walk). Requires both machines to be reachable and
/// isomorphic; returns nullopt otherwise.
std::optional<std::vector<State>> isomorphism(const Dfa& a, const Dfa& b);

/// Deterministic view of an NFA with one initial state and at most one
/// successor per (state, symbol); missing moves go to an added dead state.
std::optional<Dfa> as_dfa(const Nfa& n);
bool is_deterministic(const Nfa& n);

/// Words of length <= bound in the left or right language of a state, in
/// shortlex order.
std::vector<std::string> state_language(const Nfa& n, const StateLanguageQuery& query);
std::vector<std::string> state_language(const Dfa& d, const StateLanguageQuery& query);

/// Exact language equivalence (product of subset constructions).
bool equivalent(const Nfa& a, const Nfa& b);
bool equivalent(const Dfa& a, const Dfa& b);
bool equivalent(const Nfa& a, const Dfa& b);
bool equivalent(const Dfa& a, const Nfa& b);

bool is_empty(const Nfa& n);
bool is_finite(const Nfa& n);

/// Shortlex-first `count` words of L(n).
std::vector<std::string> shortest_words(const Nfa& n, std::size_t count);
/// All words of a finite language; nullopt when the language is infinite.
std::optional<std::vector<std::string>> finite_words(const Nfa& n);

// Boolean constructions used by verification code.
Nfa intersection(const Nfa& a, const Nfa& b);
Nfa disjoint_union(const std::vector<Nfa>& parts, const Alphabet& alphabet);
Dfa complement(const Dfa& d);
Nfa universal(const Alphabet& alphabet);
Nfa empty_language(const Alphabet& alphabet);
/// a^{-1} L(n) for a single symbol.
Nfa left_quotient(const Nfa& n, std::size_t symbol);
/// Same transitions with the given initial (resp. final) set.
Nfa with_initial(const Nfa& n, const IndexSet& initial);
Nfa with_final(const Nfa& n, const IndexSet& final_states);

/// Shortlex comparison under the alphabet order.
bool shortlex_less(const Alphabet& alphabet, std::string_view a, std::string_view b);

} // namespace quotlat
