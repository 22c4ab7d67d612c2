#include "fixtures.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "generators.hpp"
#include "quotlat/regex.hpp"

namespace quotlat::testing {

LanguageDecomposition golden_decomposition() {
    return decompose(parse_regex(kGoldenRegex, Alphabet(kGoldenAlphabet)));
}

Dfa hand_drawn_dfa(const Alphabet& alphabet) {
    const std::size_t a = *alphabet.index_of('a');
    const std::size_t b = *alphabet.index_of('b');
    Dfa d(alphabet, 5, 0);
    for (State q = 0; q < 5; ++q) {
        d.set_next(q, a, 4);
        d.set_next(q, b, 4);
    }
    d.set_next(0, b, 1);
    d.set_next(0, a, 2);
    d.set_next(1, a, 3);
    d.set_next(2, a, 3);
    d.set_final(0);
    d.set_final(2);
    d.set_final(3);
    return d;
}

Nfa hand_drawn_atomaton(const Alphabet& alphabet) {
    const std::size_t a = *alphabet.index_of('a');
    const std::size_t b = *alphabet.index_of('b');
    Nfa n(alphabet, 4);
    n.add_transition(0, a, 0);
    n.add_transition(0, b, 0);
    n.add_transition(0, a, 1);
    n.add_transition(0, b, 1);
    n.add_transition(0, b, 3);
    n.add_transition(1, a, 2);
    n.add_transition(1, b, 2);
    n.add_transition(2, a, 3);
    n.set_initial(1);
    n.set_initial(2);
    n.set_initial(3);
    n.set_final(3);
    return n;
}

oracle::ExplicitLanguage finite_set(std::initializer_list<std::string> words) {
    return oracle::ExplicitLanguage::finite(oracle::WordSet(words));
}

oracle::ExplicitLanguage cofinite_set(std::initializer_list<std::string> excluded) {
    return {true, oracle::WordSet(excluded)};
}

bool denotes(const Nfa& n, const oracle::ExplicitLanguage& l) {
    return equivalent(n, oracle::explicit_dfa(n.alphabet(), l));
}

oracle::ExplicitLanguage explicit_language(const Nfa& n) {
    if (auto words = finite_words(n)) {
        return oracle::ExplicitLanguage::finite(oracle::WordSet(words->begin(), words->end()));
    }
    if (auto words = finite_words(complement(determinize(n)).to_nfa())) {
        return {true, oracle::WordSet(words->begin(), words->end())};
    }
    throw std::domain_error("language is neither finite nor cofinite");
}

namespace {

std::vector<bool> reached(const Nfa& n, const std::vector<bool>& from, const std::string& word) {
    std::vector<bool> current = from;
    for (char c : word) {
        std::vector<bool> next(n.num_states(), false);
        const std::size_t a = *n.alphabet().index_of(c);
        for (State q = 0; q < n.num_states(); ++q) {
            if (current[q]) {
                for (State p : n.successors(q, a)) {
                    next[p] = true;
                }
            }
        }
        current = std::move(next);
    }
    return current;
}

std::vector<std::string> words_in(const std::vector<Nfa>& parts, std::size_t max_length) {
    std::vector<std::string> out;
    for (const auto& w : oracle::all_words(parts.front().alphabet().symbols(), max_length)) {
        if (std::any_of(parts.begin(), parts.end(), [&](const Nfa& p) { return oracle::simulate(p, w); })) {
            out.push_back(w);
        }
    }
    return out;
}

double word_count(std::size_t symbols, std::size_t max_length) {
    double total = 0;
    double level = 1;
    for (std::size_t k = 0; k <= max_length; ++k, level *= static_cast<double>(symbols)) {
        total += level;
    }
    return total;
}

} // namespace

bool word_pairing_feasible(const LanguageDecomposition& d) {
    const std::size_t k = d.alphabet().size();
    return word_count(k, d.n()) + word_count(k, d.m()) < 4e5;
}

bool word_pairing(const Nfa& language, const LanguageDecomposition& d, const IndexSet& right_atoms,
                  const IndexSet& left_atoms) {
    if (right_atoms.empty() || left_atoms.empty()) {
        return false;
    }
    std::vector<Nfa> firsts, seconds;
    right_atoms.for_each([&](std::size_t j) { firsts.push_back(right_atom_automaton(d, j)); });
    left_atoms.for_each([&](std::size_t i) { seconds.push_back(left_atom_automaton(d, i)); });

    std::vector<bool> start(language.num_states(), false);
    language.initial().for_each([&](std::size_t q) { start[q] = true; });
    std::set<std::vector<bool>> after_first;
    for (const auto& w : words_in(firsts, d.n())) {
        after_first.insert(reached(language, start, w));
    }
    const auto second_words = words_in(seconds, d.m());
    for (const auto& from : after_first) {
        for (const auto& v : second_words) {
            const auto end = reached(language, from, v);
            for (State q = 0; q < language.num_states(); ++q) {
                if (end[q] && language.final_states().contains(q)) {
                    return true;
                }
            }
        }
    }
    return false;
}

} // namespace quotlat::testing
