#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "quotlat/automaton.hpp"
#include "quotlat/complexity.hpp"
#include "quotlat/decomposition.hpp"
#include "quotlat/lattice.hpp"

namespace quotlat {

// Automaton file format:
//
//   {"alphabet": "ab", "states": 3, "initial": [0], "final": [2],
//    "transitions": [{"from": 0, "symbol": "a", "to": 1}, ...]}
//
// Transitions are written sorted by (from, symbol position in the alphabet,
// to).
nlohmann::json automaton_to_json(const Nfa& n);
nlohmann::json automaton_to_json(const Dfa& d);
/// Throws InvalidAutomaton (or InvalidAlphabet) on malformed input.
Nfa automaton_from_json(const nlohmann::json& j);
Nfa read_automaton_file(const std::string& path);

/// Graphviz digraph; final states are double circles and parallel edges are
/// merged into one arrow labelled with a comma-separated symbol list.
std::string automaton_to_dot(const Nfa& n, std::string_view name = "automaton");

/// A finite view of a (possibly infinite) language for display.
struct LanguageSample {
    enum class Shape { finite, cofinite, infinite };
    Shape shape = Shape::finite;
    /// finite: all words. cofinite: all words of the complement. infinite: the
    /// shortlex-first words, at most the requested bound.
    std::vector<std::string> words;
};

LanguageSample sample_language(const Nfa& n, std::size_t word_bound);
/// "{ε, a}", "Σ* \ {ε}", "{a, aa, aaa, …}", "∅".
std::string format_language(const LanguageSample& sample);
std::string format_word(std::string_view word);
nlohmann::json language_to_json(const LanguageSample& sample);

nlohmann::json decomposition_to_json(const LanguageDecomposition& d, std::size_t word_bound);
nlohmann::json matrix_to_json(const BoolMatrix& m);
/// Row-major 0/1 grid, one row per line, entries separated by spaces.
std::string matrix_to_text(const BoolMatrix& m);

/// Display label of a lattice element: the language it denotes.
LanguageSample sample_element(const LanguageDecomposition& d, const LatticeElement& e, std::size_t word_bound);

nlohmann::json lattice_to_json(const QuotientLattice& l, const LanguageDecomposition& d, std::size_t word_bound);
/// Hasse diagram of the lattice (cover relation), drawn bottom to top.
std::string render_lattice_dot(const QuotientLattice& l, const std::vector<LanguageSample>& labels);

nlohmann::json duality_report_to_json(const DualityReport& r);
nlohmann::json identity_report_to_json(const IdentityReport& r);
nlohmann::json complexity_report_to_json(const ComplexityReport& r);

} // namespace quotlat
