#include <doctest.h>

#include <algorithm>
#include <functional>

#include "fixtures.hpp"
#include "generators.hpp"
#include "quotlat/error.hpp"
#include "quotlat/io.hpp"
#include "quotlat/regex.hpp"

using namespace quotlat;
using nlohmann::json;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        ++count;
    }
    return count;
}

} // namespace

TEST_CASE("automaton JSON round trip") {
    testing::Rng rng(21);
    for (int k = 0; k < 50; ++k) {
        const Alphabet alphabet(rng.chance(50) ? "ab" : "xyz");
        const Nfa n = testing::random_nfa(rng, alphabet, 1 + rng.below(6), 30);
        const json j = automaton_to_json(n);
        CHECK(automaton_from_json(j) == n);
        CHECK(automaton_from_json(json::parse(j.dump())) == n);
        CHECK(automaton_to_json(automaton_from_json(j)) == j);
    }
}

TEST_CASE("automaton JSON layout") {
    const Dfa d = testing::hand_drawn_dfa(Alphabet("ab"));
    const json j = automaton_to_json(d);
    CHECK(j["alphabet"] == "ab");
    CHECK(j["states"] == 5);
    CHECK(j["initial"] == json::array({0}));
    CHECK(j["final"] == json::array({0, 2, 3}));
    CHECK(j["transitions"].size() == 10);
    CHECK(j["transitions"][0] == json{{"from", 0}, {"symbol", "a"}, {"to", 2}});
    CHECK(j["transitions"][1] == json{{"from", 0}, {"symbol", "b"}, {"to", 1}});
}

TEST_CASE("malformed automaton JSON") {
    const json good = automaton_to_json(testing::hand_drawn_dfa(Alphabet("ab")));
    const auto broken = [&](const std::function<void(json&)>& edit) {
        json j = good;
        edit(j);
        return j;
    };
    CHECK_THROWS_AS(automaton_from_json(json::array()), InvalidAutomaton);
    CHECK_THROWS_AS(automaton_from_json(broken([](json& j) { j.erase("states"); })), InvalidAutomaton);
    CHECK_THROWS_AS(automaton_from_json(broken([](json& j) { j["states"] = -1; })), InvalidAutomaton);
    CHECK_THROWS_AS(automaton_from_json(broken([](json& j) { j["initial"] = json::array({7}); })), InvalidAutomaton);
    CHECK_THROWS_AS(automaton_from_json(broken([](json& j) { j["final"] = "0"; })), InvalidAutomaton);
    CHECK_THROWS_AS(automaton_from_json(broken([](json& j) { j["transitions"][0]["symbol"] = "c"; })),
                    InvalidAutomaton);
    CHECK_THROWS_AS(automaton_from_json(broken([](json& j) { j["transitions"][0]["symbol"] = "ab"; })),
                    InvalidAutomaton);
    CHECK_THROWS_AS(automaton_from_json(broken([](json& j) { j["transitions"][0]["to"] = 9; })), InvalidAutomaton);
    CHECK_THROWS_AS(automaton_from_json(broken([](json& j) { j["alphabet"] = "aa"; })), InvalidAlphabet);
    CHECK_THROWS_AS(read_automaton_file("/nonexistent/automaton.json"), InvalidAutomaton);
}

TEST_CASE("automaton DOT") {
    const Nfa atomaton = testing::hand_drawn_atomaton(Alphabet("ab"));
    const std::string dot = automaton_to_dot(atomaton, "atomaton");
    CHECK(dot.rfind("digraph atomaton {", 0) == 0);
    CHECK(occurrences(dot, "doublecircle") == 1);
    CHECK(occurrences(dot, "shape=point") == 3);
    CHECK(dot.find("0 -> 1 [label=\"a,b\"]") != std::string::npos);
    CHECK(dot.find("0 -> 3 [label=\"b\"]") != std::string::npos);
    CHECK(automaton_to_dot(atomaton, "atomaton") == dot);
}

TEST_CASE("language display") {
    const Alphabet ab("ab");
    CHECK(format_language(sample_language(parse_regex("@", ab), 5)) == "∅");
    CHECK(format_language(sample_language(parse_regex("_|a", ab), 5)) == "{ε, a}");
    CHECK(format_language(sample_language(universal(ab), 5)) == "Σ*");
    CHECK(format_language(sample_language(parse_regex("(a|b)(a|b)*", ab), 5)) == "Σ* \\ {ε}");
    CHECK(format_language(sample_language(parse_regex("a*b", ab), 3)) == "{b, ab, aab, …}");
    CHECK(sample_language(parse_regex("a*b", ab), 3).shape == LanguageSample::Shape::infinite);
    CHECK(format_word("") == "ε");
    const json j = language_to_json(sample_language(parse_regex("_|a", ab), 5));
    CHECK(j["shape"] == "finite");
    CHECK(j["words"] == json::array({"", "a"}));
}

TEST_CASE("decomposition and matrix export") {
    const auto d = testing::golden_decomposition();
    const json j = decomposition_to_json(d, 4);
    CHECK(j["n"] == 5);
    CHECK(j["m"] == 4);
    CHECK(j["left_atoms"][3]["final"] == true);
    CHECK(j["left_atoms"][0]["negative"] == true);
    CHECK(j["left_atoms"][3]["quotients"] == json::array({0, 2, 3}));
    CHECK(j["left_quotients"][1]["language"]["display"] == "{a}");
    CHECK(j["right_atoms"][4]["language"]["shape"] == "cofinite");
    CHECK(j["initial_left_atoms"] == json::array({1, 2, 3}));
    CHECK(automaton_from_json(j["atomaton"]) == d.atomaton);

    const auto m = quotient_atom_matrix(d);
    CHECK(matrix_to_text(m) == "0 1 1 1\n0 0 1 0\n0 0 1 1\n0 0 0 1\n0 0 0 0\n");
    CHECK(matrix_to_json(m)[2] == json::array({0, 0, 1, 1}));
}

TEST_CASE("lattice DOT and JSON") {
    const auto d = testing::golden_decomposition();
    const auto render = [&](LatticeKind kind) {
        const auto l = build_lattice(d, kind);
        std::vector<LanguageSample> labels;
        for (std::size_t k = 0; k < l.size(); ++k) {
            labels.push_back(sample_element(d, l.element(k), 6));
        }
        return render_lattice_dot(l, labels);
    };
    const std::string ul = render({LatticeOp::union_of, Side::left});
    CHECK(ul.find("rankdir=BT") != std::string::npos);
    CHECK(occurrences(ul, "[label=") == 5);
    CHECK(occurrences(ul, " -> ") == 5);
    CHECK(ul.find("{ε, a, ba, aa}") != std::string::npos);
    CHECK(ul == render({LatticeOp::union_of, Side::left}));

    const std::string ir = render({LatticeOp::intersection_of, Side::right});
    CHECK(occurrences(ir, "[label=") == 6);
    CHECK(occurrences(ir, " -> ") == 6);
    CHECK(ir.find("Σ*") != std::string::npos);

    const auto single = decompose(universal(Alphabet("ab")));
    const auto l1 = build_lattice(single, {LatticeOp::intersection_of, Side::left});
    const std::string one = render_lattice_dot(l1, {sample_element(single, l1.element(0), 3)});
    CHECK(occurrences(one, "[label=") == 1);
    CHECK(occurrences(one, " -> ") == 0);

    const json j = lattice_to_json(build_lattice(d, {LatticeOp::union_of, Side::left}), d, 6);
    CHECK(j["kind"] == "union-left");
    CHECK(j["size"] == 5);
    CHECK(j["cover_edges"].size() == 5);
    CHECK(j["elements"][4]["atoms"] == json::array({1, 2, 3}));
}

TEST_CASE("report export") {
    const auto d = testing::golden_decomposition();
    const json dual = duality_report_to_json(verify_duality(d, DualityTheorem::unions));
    CHECK(dual["ok"] == true);
    CHECK(dual["left_size"] == 5);
    const json ident = identity_report_to_json(verify_quotient_atom_identities(d));
    CHECK(ident["ok"] == true);
    CHECK(ident["violations"].empty());
    const json cx = complexity_report_to_json(complexity_report(d));
    CHECK(cx["union_count"] == 5);
    CHECK(cx["singleton_atoms_present"].size() == 5);
}
