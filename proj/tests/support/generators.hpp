#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "quotlat/automaton.hpp"

namespace quotlat::testing {

/// Seeded source; `below` avoids distribution objects so sequences do not
/// depend on the standard library implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }
    bool chance(unsigned percent) { return below(100) < percent; }
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

std::string random_regex(Rng& rng, const std::string& alphabet, int depth);
Nfa random_nfa(Rng& rng, const Alphabet& alphabet, std::size_t states, unsigned density_percent);
Dfa random_dfa(Rng& rng, const Alphabet& alphabet, std::size_t states, unsigned final_percent);
oracle::FiniteLanguage random_finite_language(Rng& rng, const std::string& alphabet, std::size_t max_words,
                                              std::size_t max_length);

struct CorpusEntry {
    std::string description;
    Nfa nfa;
};

/// Non-empty languages over alphabets of size 2 and 3 whose minimal DFA has
/// at most `max_states` states, half from random regexes and half from random
/// NFAs.
std::vector<CorpusEntry> standard_corpus(std::size_t count = 200, std::uint64_t seed = 20240611,
                                         std::size_t max_states = 6);

/// Alphabet "ba" orders b before a, which makes the canonical numbering of
/// the running example L = {ε, a, aa, ba} list its quotients as
/// L, {a}, {ε, a}, {ε}, ∅.
inline constexpr const char* kGoldenRegex = "_|a|aa|ba";
inline constexpr const char* kGoldenAlphabet = "ba";

} // namespace quotlat::testing
