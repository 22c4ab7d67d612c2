#pragma once

#include <initializer_list>
#include <string>

#include "oracle.hpp"
#include "quotlat/decomposition.hpp"

namespace quotlat::testing {

/// L = {ε, a, aa, ba} over the alphabet ordered b, a.
LanguageDecomposition golden_decomposition();

/// The minimal DFA of L = {ε, a, aa, ba} drawn by hand: q0 -b-> q1,
/// q0 -a-> q2, q1 -a-> q3, q2 -a-> q3, everything else into the sink q4.
Dfa hand_drawn_dfa(const Alphabet& alphabet);
/// Its atomaton drawn by hand: s0 loops on a, b; s0 -a,b-> s1; s0 -b-> s3;
/// s1 -a,b-> s2; s2 -a-> s3; initial s1, s2, s3; final s3.
Nfa hand_drawn_atomaton(const Alphabet& alphabet);

oracle::ExplicitLanguage finite_set(std::initializer_list<std::string> words);
oracle::ExplicitLanguage cofinite_set(std::initializer_list<std::string> excluded);

/// Exact comparison of an automaton's language with an explicit language.
bool denotes(const Nfa& n, const oracle::ExplicitLanguage& l);

/// The language of `n` as an explicit set; throws std::domain_error when it
/// is neither finite nor cofinite.
oracle::ExplicitLanguage explicit_language(const Nfa& n);

/// Word-level pairing: searches explicit words w (length <= n) in the given
/// right atoms and v (length <= m) in the given left atoms with wv accepted
/// by `language`, using plain simulation throughout.
bool word_pairing(const Nfa& language, const LanguageDecomposition& d, const IndexSet& right_atoms,
                  const IndexSet& left_atoms);

/// Whether `word_pairing` stays within a few hundred thousand words.
bool word_pairing_feasible(const LanguageDecomposition& d);

} // namespace quotlat::testing
