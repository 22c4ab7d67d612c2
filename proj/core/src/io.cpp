#include "quotlat/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "quotlat/error.hpp"

namespace quotlat {

using nlohmann::json;

namespace {

json index_array(const IndexSet& s) {
    json out = json::array();
    s.for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

std::string dot_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

std::size_t require_index(const json& value, std::size_t bound, const char* field) {
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0)) {
        throw InvalidAutomaton(std::string("field '") + field + "' must hold non-negative integers");
    }
    const auto index = value.get<std::size_t>();
    if (index >= bound) {
        throw InvalidAutomaton(std::string("field '") + field + "' refers to state " + std::to_string(index) +
                               " but the automaton has " + std::to_string(bound) + " states");
    }
    return index;
}

const json& require_field(const json& j, const char* field) {
    if (!j.is_object() || !j.contains(field)) {
        throw InvalidAutomaton(std::string("automaton JSON is missing field '") + field + "'");
    }
    return j.at(field);
}

} // namespace

json automaton_to_json(const Nfa& n) {
    json transitions = json::array();
    for (State q = 0; q < n.num_states(); ++q) {
        for (std::size_t a = 0; a < n.alphabet().size(); ++a) {
            for (State p : n.successors(q, a)) {
                transitions.push_back({{"from", q}, {"symbol", std::string(1, n.alphabet().symbol(a))}, {"to", p}});
            }
        }
    }
    return {{"alphabet", n.alphabet().symbols()},
            {"states", n.num_states()},
            {"initial", index_array(n.initial())},
            {"final", index_array(n.final_states())},
            {"transitions", std::move(transitions)}};
}

json automaton_to_json(const Dfa& d) { return automaton_to_json(d.to_nfa()); }

Nfa automaton_from_json(const json& j) {
    const json& alphabet_field = require_field(j, "alphabet");
    if (!alphabet_field.is_string()) {
        throw InvalidAutomaton("field 'alphabet' must be a string of symbols");
    }
    const Alphabet alphabet(alphabet_field.get<std::string>());

    const json& states_field = require_field(j, "states");
    if (!states_field.is_number_integer() || states_field.get<long long>() < 0) {
        throw InvalidAutomaton("field 'states' must be a non-negative integer");
    }
    const auto states = states_field.get<std::size_t>();
    Nfa n(alphabet, states);

    for (const char* field : {"initial", "final"}) {
        const json& list = require_field(j, field);
        if (!list.is_array()) {
            throw InvalidAutomaton(std::string("field '") + field + "' must be an array");
        }
        for (const auto& item : list) {
            const std::size_t q = require_index(item, states, field);
            std::string_view(field) == "initial" ? n.set_initial(q) : n.set_final(q);
        }
    }

    const json& transitions = require_field(j, "transitions");
    if (!transitions.is_array()) {
        throw InvalidAutomaton("field 'transitions' must be an array");
    }
    for (const auto& t : transitions) {
        const std::size_t from = require_index(require_field(t, "from"), states, "from");
        const std::size_t to = require_index(require_field(t, "to"), states, "to");
        const json& symbol = require_field(t, "symbol");
        if (!symbol.is_string() || symbol.get<std::string>().size() != 1) {
            throw InvalidAutomaton("transition symbol must be a one-character string");
        }
        const auto index = alphabet.index_of(symbol.get<std::string>()[0]);
        if (!index) {
            throw InvalidAutomaton("transition symbol '" + symbol.get<std::string>() + "' is not in the alphabet");
        }
        n.add_transition(from, *index, to);
    }
    return n;
}

Nfa read_automaton_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidAutomaton("cannot open automaton file '" + path + "'");
    }
    try {
        return automaton_from_json(json::parse(in));
    } catch (const json::exception& e) {
        throw InvalidAutomaton("malformed automaton file '" + path + "': " + e.what());
    }
}

std::string automaton_to_dot(const Nfa& n, std::string_view name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    n.initial().for_each([&](std::size_t q) {
        out << "  start" << q << " [shape=point];\n";
        out << "  start" << q << " -> " << q << ";\n";
    });
    for (State q = 0; q < n.num_states(); ++q) {
        out << "  " << q << " [label=\"" << q << "\"" << (n.is_final(q) ? ", shape=doublecircle" : "") << "];\n";
    }
    for (State q = 0; q < n.num_states(); ++q) {
        for (State p = 0; p < n.num_states(); ++p) {
            std::string label;
            for (std::size_t a = 0; a < n.alphabet().size(); ++a) {
                const auto& succ = n.successors(q, a);
                if (std::binary_search(succ.begin(), succ.end(), p)) {
                    if (!label.empty()) {
                        label += ',';
                    }
                    label += n.alphabet().symbol(a);
                }
            }
            if (!label.empty()) {
                out << "  " << q << " -> " << p << " [label=\"" << dot_escape(label) << "\"];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

// ---------------------------------------------------------------------------

LanguageSample sample_language(const Nfa& n, std::size_t word_bound) {
    if (auto words = finite_words(n)) {
        return {LanguageSample::Shape::finite, *std::move(words)};
    }
    const Nfa complement_nfa = complement(determinize(n)).to_nfa();
    if (auto words = finite_words(complement_nfa)) {
        return {LanguageSample::Shape::cofinite, *std::move(words)};
    }
    return {LanguageSample::Shape::infinite, shortest_words(n, word_bound)};
}

std::string format_word(std::string_view word) { return word.empty() ? "ε" : std::string(word); }

std::string format_language(const LanguageSample& sample) {
    std::string list;
    for (std::size_t i = 0; i < sample.words.size(); ++i) {
        if (i != 0) {
            list += ", ";
        }
        list += format_word(sample.words[i]);
    }
    switch (sample.shape) {
    case LanguageSample::Shape::finite:
        return sample.words.empty() ? "∅" : "{" + list + "}";
    case LanguageSample::Shape::cofinite:
        return sample.words.empty() ? "Σ*" : "Σ* \\ {" + list + "}";
    case LanguageSample::Shape::infinite:
        return "{" + list + (list.empty() ? "…}" : ", …}");
    }
    return list;
}

json language_to_json(const LanguageSample& sample) {
    static const char* const shapes[] = {"finite", "cofinite", "infinite"};
    return {{"shape", shapes[static_cast<int>(sample.shape)]},
            {"words", sample.words},
            {"display", format_language(sample)}};
}

json decomposition_to_json(const LanguageDecomposition& d, std::size_t word_bound) {
    json out;
    out["alphabet"] = d.alphabet().symbols();
    out["n"] = d.n();
    out["m"] = d.m();
    json& lq = out["left_quotients"] = json::array();
    for (std::size_t j = 0; j < d.n(); ++j) {
        lq.push_back({{"index", j},
                      {"atoms", index_array(d.left_quotients[j])},
                      {"language", language_to_json(sample_language(left_quotient_automaton(d, j), word_bound))}});
    }
    json& rq = out["right_quotients"] = json::array();
    for (std::size_t i = 0; i < d.m(); ++i) {
        rq.push_back({{"index", i},
                      {"atoms", index_array(d.right_quotients[i])},
                      {"language", language_to_json(sample_language(right_quotient_automaton(d, i), word_bound))}});
    }
    json& la = out["left_atoms"] = json::array();
    for (std::size_t i = 0; i < d.m(); ++i) {
        la.push_back({{"index", i},
                      {"quotients", index_array(d.left_atom_sets[i])},
                      {"initial", d.initial_left_atoms.contains(i)},
                      {"final", d.final_left_atom == i},
                      {"negative", d.negative_left_atom == i},
                      {"language", language_to_json(sample_language(left_atom_automaton(d, i), word_bound))}});
    }
    json& ra = out["right_atoms"] = json::array();
    for (std::size_t j = 0; j < d.n(); ++j) {
        ra.push_back({{"index", j},
                      {"quotients", index_array(d.right_atom_sets[j])},
                      {"language", language_to_json(sample_language(right_atom_automaton(d, j), word_bound))}});
    }
    out["final_left_atom"] = d.final_left_atom;
    out["initial_left_atoms"] = index_array(d.initial_left_atoms);
    out["negative_left_atom"] = d.negative_left_atom ? json(*d.negative_left_atom) : json(nullptr);
    out["minimal_dfa"] = automaton_to_json(d.dfa);
    out["atomaton"] = automaton_to_json(d.atomaton);
    return out;
}

json matrix_to_json(const BoolMatrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(m.at(r, c) ? 1 : 0);
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::string matrix_to_text(const BoolMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c != 0) {
                out += ' ';
            }
            out += m.at(r, c) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

LanguageSample sample_element(const LanguageDecomposition& d, const LatticeElement& e, std::size_t word_bound) {
    const Nfa automaton = e.kind.side == Side::left ? left_atoms_union_automaton(d, e.atoms)
                                                    : right_atoms_union_automaton(d, e.atoms);
    return sample_language(automaton, word_bound);
}

json lattice_to_json(const QuotientLattice& l, const LanguageDecomposition& d, std::size_t word_bound) {
    json elements = json::array();
    for (std::size_t k = 0; k < l.size(); ++k) {
        elements.push_back({{"index", k},
                            {"atoms", index_array(l.elements()[k])},
                            {"language", language_to_json(sample_element(d, l.element(k), word_bound))}});
    }
    json edges = json::array();
    for (const auto& [lower, upper] : l.cover_edges()) {
        edges.push_back({lower, upper});
    }
    return {{"kind", to_string(l.kind())}, {"size", l.size()}, {"elements", elements}, {"cover_edges", edges}};
}

std::string render_lattice_dot(const QuotientLattice& l, const std::vector<LanguageSample>& labels) {
    std::ostringstream out;
    std::string name = to_string(l.kind());
    std::replace(name.begin(), name.end(), '-', '_');
    out << "digraph " << name << " {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (std::size_t k = 0; k < l.size(); ++k) {
        std::string label = "atoms " + l.elements()[k].to_string();
        if (k < labels.size()) {
            label += "\n" + format_language(labels[k]);
        }
        out << "  e" << k << " [label=\"" << dot_escape(label) << "\"];\n";
    }
    for (const auto& [lower, upper] : l.cover_edges()) {
        out << "  e" << lower << " -> e" << upper << ";\n";
    }
    out << "}\n";
    return out.str();
}

json duality_report_to_json(const DualityReport& r) {
    return {{"theorem", r.which == DualityTheorem::unions ? "unions" : "intersections"},
            {"left_size", r.left_size},
            {"right_size", r.right_size},
            {"bijective", r.bijective},
            {"order_reversing", r.order_reversing},
            {"exchanges_meet_join", r.exchanges_meet_join},
            {"witnesses", r.witnesses},
            {"ok", r.ok()}};
}

json identity_report_to_json(const IdentityReport& r) {
    return {{"quotient_atom_checks", r.quotient_atom_checks},
            {"union_checks", r.union_checks},
            {"exhaustive_left", r.exhaustive_left},
            {"exhaustive_right", r.exhaustive_right},
            {"violations", r.violations},
            {"ok", r.ok()}};
}

json complexity_report_to_json(const ComplexityReport& r) {
    const auto count = [](const std::optional<std::uint64_t>& c) { return c ? json(*c) : json(nullptr); };
    return {{"n", r.n},
            {"m", r.m},
            {"union_count", count(r.union_count)},
            {"intersection_count", count(r.intersection_count)},
            {"union_count_right", count(r.union_count_right)},
            {"intersection_count_right", count(r.intersection_count_right)},
            {"counts_predicted", r.counts_predicted},
            {"union_maximal", r.union_maximal},
            {"intersection_maximal", r.intersection_maximal},
            {"singleton_atoms_present", r.singleton_atoms_present},
            {"cosingleton_atoms_present", r.cosingleton_atoms_present},
            {"criterion_applies", r.criterion_applies},
            {"biconditionals_hold", r.biconditionals_hold}};
}

} // namespace quotlat
