#include "cli.hpp"

#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "quotlat/complexity.hpp"
#include "quotlat/decomposition.hpp"
#include "quotlat/error.hpp"
#include "quotlat/io.hpp"
#include "quotlat/pairing.hpp"
#include "quotlat/regex.hpp"

namespace quotlat::cli {

using nlohmann::json;

namespace {

const std::vector<std::pair<std::string, Command>> kCommands = {
    {"quotients", Command::quotients}, {"atoms", Command::atoms},     {"atomaton", Command::atomaton},
    {"matrix", Command::matrix},       {"lattice", Command::lattice}, {"duality", Command::duality},
    {"pairing", Command::pairing},     {"complexity", Command::complexity}, {"all", Command::all},
};

const char* const kCommandHelp[] = {
    "left and right quotients as atom unions",
    "left and right atoms with their index sets",
    "the atomaton of the language",
    "the quotient-atom matrix",
    "one of the four quotient lattices",
    "check the dual isomorphisms between left and right lattices",
    "pairing matrix and orthogonal complements",
    "union and intersection complexity",
    "everything, including all verifications",
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Session {
    const CliRequest& request;
    LanguageDecomposition d;
    std::size_t bound;
    std::ostream& out;
};

std::string sample(const Nfa& n, std::size_t bound) { return format_language(sample_language(n, bound)); }

// --- text renderers --------------------------------------------------------

void quotients_text(const Session& s) {
    const auto& d = s.d;
    s.out << "left quotients (n = " << d.n() << ")\n";
    for (std::size_t j = 0; j < d.n(); ++j) {
        s.out << "  L" << j << " = " << sample(left_quotient_automaton(d, j), s.bound) << "  [atoms "
              << d.left_quotients[j].to_string() << "]\n";
    }
    s.out << "right quotients (m = " << d.m() << ")\n";
    for (std::size_t i = 0; i < d.m(); ++i) {
        s.out << "  R" << i << " = " << sample(right_quotient_automaton(d, i), s.bound) << "  [atoms "
              << d.right_quotients[i].to_string() << "]\n";
    }
}

void atoms_text(const Session& s) {
    const auto& d = s.d;
    s.out << "left atoms (m = " << d.m() << ")\n";
    for (std::size_t i = 0; i < d.m(); ++i) {
        std::vector<std::string> tags;
        if (d.negative_left_atom == i) {
            tags.emplace_back("negative");
        }
        if (d.initial_left_atoms.contains(i)) {
            tags.emplace_back("initial");
        }
        if (d.final_left_atom == i) {
            tags.emplace_back("final");
        }
        s.out << "  A" << i << " = " << sample(left_atom_automaton(d, i), s.bound) << "  [S = "
              << d.left_atom_sets[i].to_string() << "]";
        for (std::size_t k = 0; k < tags.size(); ++k) {
            s.out << (k == 0 ? "  " : ", ") << tags[k];
        }
        s.out << '\n';
    }
    s.out << "right atoms (n = " << d.n() << ")\n";
    for (std::size_t j = 0; j < d.n(); ++j) {
        s.out << "  B" << j << " = " << sample(right_atom_automaton(d, j), s.bound) << "  [T = "
              << d.right_atom_sets[j].to_string() << "]\n";
    }
}

void atomaton_text(const Session& s) {
    const Nfa& a = s.d.atomaton;
    s.out << "atomaton: " << a.num_states() << " states, initial " << a.initial().to_string() << ", final "
          << a.final_states().to_string() << '\n';
    for (State q = 0; q < a.num_states(); ++q) {
        for (std::size_t c = 0; c < a.alphabet().size(); ++c) {
            for (State p : a.successors(q, c)) {
                s.out << "  s" << q << " --" << a.alphabet().symbol(c) << "--> s" << p << '\n';
            }
        }
    }
}

std::vector<LanguageSample> lattice_labels(const Session& s, const QuotientLattice& l) {
    std::vector<LanguageSample> labels;
    for (std::size_t k = 0; k < l.size(); ++k) {
        labels.push_back(sample_element(s.d, l.element(k), s.bound));
    }
    return labels;
}

void lattice_text(const Session& s, const QuotientLattice& l, bool distributive) {
    const auto edges = l.cover_edges();
    s.out << to_string(l.kind()) << " lattice: " << l.size() << " elements, " << edges.size() << " cover edges\n";
    const auto labels = lattice_labels(s, l);
    for (std::size_t k = 0; k < l.size(); ++k) {
        s.out << "  e" << k << " = " << format_language(labels[k]) << "  [atoms " << l.elements()[k].to_string()
              << "]\n";
    }
    s.out << "cover edges\n";
    for (const auto& [lower, upper] : edges) {
        s.out << "  e" << lower << " < e" << upper << '\n';
    }
    if (distributive) {
        s.out << "distributive: " << yes_no(is_distributive(l)) << '\n';
    }
}

const char* theorem_name(DualityTheorem t) { return t == DualityTheorem::unions ? "unions" : "intersections"; }

bool duality_text(const Session& s, const std::vector<DualityReport>& reports, bool prefix) {
    bool ok = true;
    for (const auto& r : reports) {
        if (prefix) {
            s.out << theorem_name(r.which) << ": ";
        }
        if (r.ok()) {
            s.out << "dual isomorphism verified: " << r.left_size << " elements\n";
            continue;
        }
        ok = false;
        s.out << "dual isomorphism violated (" << r.left_size << " left, " << r.right_size << " right elements";
        s.out << "; bijective " << yes_no(r.bijective) << ", order-reversing " << yes_no(r.order_reversing)
              << ", exchanges meet and join " << yes_no(r.exchanges_meet_join) << ")\n";
        for (const auto& w : r.witnesses) {
            s.out << "  " << w << '\n';
        }
    }
    return ok;
}

void pairing_text(const Session& s, const PairingContext& ctx) {
    const auto matrix = matrix_via_pairing(ctx);
    s.out << "pairing <B_i, A_j> (" << matrix.rows() << " x " << matrix.cols() << ")\n";
    s.out << matrix_to_text(matrix);
    s.out << "orthogonal complements\n";
    for (std::size_t i = 0; i < s.d.n(); ++i) {
        IndexSet single(s.d.n());
        single.insert(i);
        s.out << "  {B" << i << "}^perp = atoms " << orthogonal_complement(ctx, single).to_string() << '\n';
    }
}

std::string count_text(const std::optional<std::uint64_t>& c) { return c ? std::to_string(*c) : "not enumerated"; }

bool complexity_text(const Session& s, const ComplexityReport& r) {
    const auto present = [](const std::vector<bool>& flags) {
        IndexSet set(flags.size());
        for (std::size_t i = 0; i < flags.size(); ++i) {
            if (flags[i]) {
                set.insert(i);
            }
        }
        return set.to_string();
    };
    s.out << "n = " << r.n << ", m = " << r.m << '\n';
    s.out << "union lattice: " << count_text(r.union_count) << " elements, maximal " << yes_no(r.union_maximal)
          << '\n';
    s.out << "intersection lattice: " << count_text(r.intersection_count) << " elements, maximal "
          << yes_no(r.intersection_maximal) << '\n';
    if (r.counts_predicted) {
        s.out << "counts predicted from the atom conditions (n > " << kMaxEnumeratedQuotients << ")\n";
    }
    s.out << "singleton atoms present for quotients " << present(r.singleton_atoms_present) << '\n';
    s.out << "cosingleton atoms present for quotients " << present(r.cosingleton_atoms_present) << '\n';
    if (r.criterion_applies) {
        s.out << "2n-atom criterion: " << yes_no(r.union_maximal && r.intersection_maximal) << '\n';
    } else {
        s.out << "2n-atom criterion: not claimed for n <= 2\n";
    }
    if (!r.biconditionals_hold) {
        s.out << "complexity biconditionals violated\n";
    }
    return r.biconditionals_hold;
}

bool identities_text(const Session& s, const IdentityReport& r) {
    if (r.ok()) {
        s.out << "quotient-atom identities verified: " << r.quotient_atom_checks << " index checks, "
              << r.union_checks << " union checks"
              << (r.exhaustive_left && r.exhaustive_right ? " (exhaustive)" : " (sampled)") << '\n';
        return true;
    }
    s.out << "quotient-atom identities violated\n";
    for (const auto& v : r.violations) {
        s.out << "  " << v << '\n';
    }
    return false;
}

// --- json renderers --------------------------------------------------------

json pairing_json(const PairingContext& ctx) {
    const auto& d = ctx.decomposition();
    json complements = json::array();
    for (std::size_t i = 0; i < d.n(); ++i) {
        IndexSet single(d.n());
        single.insert(i);
        complements.push_back({{"right_atom", i}, {"left_atoms", orthogonal_complement(ctx, single).to_vector()}});
    }
    const auto matrix = matrix_via_pairing(ctx);
    return {{"matrix", matrix_to_json(matrix)},
            {"orthogonal_complements", complements},
            {"agrees_with_quotient_atom_matrix", matrix == ctx.matrix()}};
}

json lattice_json(const Session& s, const QuotientLattice& l, bool distributive) {
    json j = lattice_to_json(l, s.d, s.bound);
    if (distributive) {
        j["distributive"] = is_distributive(l);
    }
    return j;
}

json matrix_json(const QuotientAtomMatrix& m) {
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", matrix_to_json(m)}};
}

std::vector<DualityReport> duality_reports(const LanguageDecomposition& d, std::optional<DualityTheorem> which) {
    if (which) {
        return {verify_duality(d, *which)};
    }
    return {verify_duality(d, DualityTheorem::unions), verify_duality(d, DualityTheorem::intersections)};
}

// --- commands --------------------------------------------------------------

const LatticeKind kAllKinds[] = {{LatticeOp::union_of, Side::left},
                                 {LatticeOp::union_of, Side::right},
                                 {LatticeOp::intersection_of, Side::left},
                                 {LatticeOp::intersection_of, Side::right}};

int run_all(const Session& s) {
    const auto identities = verify_quotient_atom_identities(s.d);
    const auto dualities = duality_reports(s.d, std::nullopt);
    const auto complexity = complexity_report(s.d);
    const PairingContext ctx(s.d);
    bool ok = identities.ok() && complexity.biconditionals_hold;
    for (const auto& r : dualities) {
        ok = ok && r.ok();
    }

    if (s.request.format == Format::json) {
        json lattices = json::array();
        for (const auto& kind : kAllKinds) {
            lattices.push_back(lattice_json(s, build_lattice(s.d, kind), s.request.distributive));
        }
        json duality = json::array();
        for (const auto& r : dualities) {
            duality.push_back(duality_report_to_json(r));
        }
        const json j = {{"decomposition", decomposition_to_json(s.d, s.bound)},
                        {"matrix", matrix_json(quotient_atom_matrix(s.d))},
                        {"lattices", lattices},
                        {"identities", identity_report_to_json(identities)},
                        {"duality", duality},
                        {"pairing", pairing_json(ctx)},
                        {"complexity", complexity_report_to_json(complexity)}};
        s.out << j.dump(2) << '\n';
        return ok ? 0 : 2;
    }

    s.out << "== quotients ==\n";
    quotients_text(s);
    s.out << "\n== atoms ==\n";
    atoms_text(s);
    s.out << "\n== atomaton ==\n";
    atomaton_text(s);
    s.out << "\n== quotient-atom matrix ==\n" << matrix_to_text(quotient_atom_matrix(s.d));
    for (const auto& kind : kAllKinds) {
        s.out << "\n== " << to_string(kind) << " ==\n";
        lattice_text(s, build_lattice(s.d, kind), s.request.distributive);
    }
    s.out << "\n== identities ==\n";
    identities_text(s, identities);
    s.out << "\n== duality ==\n";
    duality_text(s, dualities, true);
    s.out << "\n== pairing ==\n";
    pairing_text(s, ctx);
    s.out << "\n== complexity ==\n";
    complexity_text(s, complexity);
    return ok ? 0 : 2;
}

int dispatch(const Session& s) {
    const auto& req = s.request;
    const bool json_out = req.format == Format::json;
    switch (req.command) {
    case Command::quotients:
    case Command::atoms:
        if (json_out) {
            json j = decomposition_to_json(s.d, s.bound);
            for (const char* key : req.command == Command::quotients
                                       ? std::vector<const char*>{"left_atoms", "right_atoms", "minimal_dfa", "atomaton"}
                                       : std::vector<const char*>{"left_quotients", "right_quotients", "minimal_dfa",
                                                                  "atomaton"}) {
                j.erase(key);
            }
            s.out << j.dump(2) << '\n';
        } else {
            req.command == Command::quotients ? quotients_text(s) : atoms_text(s);
        }
        return 0;
    case Command::atomaton:
        if (req.format == Format::dot) {
            s.out << automaton_to_dot(s.d.atomaton, "atomaton");
        } else if (json_out) {
            s.out << automaton_to_json(s.d.atomaton).dump(2) << '\n';
        } else {
            atomaton_text(s);
        }
        return 0;
    case Command::matrix: {
        const auto m = quotient_atom_matrix(s.d);
        if (json_out) {
            s.out << matrix_json(m).dump(2) << '\n';
        } else {
            s.out << matrix_to_text(m);
        }
        return 0;
    }
    case Command::lattice: {
        const auto l = build_lattice(s.d, *req.lattice_kind);
        if (req.format == Format::dot) {
            s.out << render_lattice_dot(l, lattice_labels(s, l));
        } else if (json_out) {
            s.out << lattice_json(s, l, req.distributive).dump(2) << '\n';
        } else {
            lattice_text(s, l, req.distributive);
        }
        return 0;
    }
    case Command::duality: {
        const auto reports = duality_reports(s.d, req.which);
        bool ok = true;
        if (json_out) {
            json j = json::array();
            for (const auto& r : reports) {
                j.push_back(duality_report_to_json(r));
                ok = ok && r.ok();
            }
            s.out << (req.which ? j.at(0) : j).dump(2) << '\n';
        } else {
            ok = duality_text(s, reports, !req.which);
        }
        return ok ? 0 : 2;
    }
    case Command::pairing: {
        const PairingContext ctx(s.d);
        if (json_out) {
            s.out << pairing_json(ctx).dump(2) << '\n';
        } else {
            pairing_text(s, ctx);
        }
        return 0;
    }
    case Command::complexity: {
        const auto r = complexity_report(s.d);
        if (json_out) {
            s.out << complexity_report_to_json(r).dump(2) << '\n';
            return r.biconditionals_hold ? 0 : 2;
        }
        return complexity_text(s, r) ? 0 : 2;
    }
    case Command::all:
        return run_all(s);
    }
    return 1;
}

Nfa load_input(const CliRequest& req) {
    if (req.regex) {
        const Alphabet alphabet = req.alphabet ? Alphabet(*req.alphabet) : infer_alphabet(*req.regex);
        return parse_regex(*req.regex, alphabet);
    }
    Nfa n = read_automaton_file(*req.automaton_path);
    if (req.alphabet && *req.alphabet != n.alphabet().symbols()) {
        throw AlphabetMismatch("automaton alphabet \"" + n.alphabet().symbols() + "\" differs from --alphabet \"" +
                               *req.alphabet + "\"");
    }
    return n;
}

} // namespace

ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quotients, atoms and quotient lattices of regular languages", "quotlat"};
    app.fallthrough();
    app.require_subcommand(1);

    CliRequest req;
    std::string format = "text";
    std::string kind;
    std::string which;
    std::size_t word_bound = 0;

    auto* regex_opt = app.add_option("--regex", req.regex, "regular expression ('_' empty word, '@' empty set)");
    auto* file_opt = app.add_option("--automaton", req.automaton_path, "automaton JSON file")->check(CLI::ExistingFile);
    regex_opt->excludes(file_opt);
    app.add_option("--alphabet", req.alphabet, "alphabet symbols in order (default: inferred from the regex)");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
    auto* bound_opt = app.add_option("--word-bound", word_bound, "words shown for infinite languages");

    std::vector<std::pair<CLI::App*, Command>> subcommands;
    for (std::size_t k = 0; k < kCommands.size(); ++k) {
        subcommands.emplace_back(app.add_subcommand(kCommands[k].first, kCommandHelp[k]), kCommands[k].second);
    }
    auto* lattice = subcommands[4].first;
    lattice->add_option("--kind", kind, "union-left, union-right, intersection-left or intersection-right")
        ->required()
        ->check(CLI::IsMember({"union-left", "union-right", "intersection-left", "intersection-right"}));
    lattice->add_flag("--distributive", req.distributive, "report whether the lattice is distributive");
    subcommands[5].first->add_option("--which", which, "a: union lattices, b: intersection lattices (default both)")
        ->check(CLI::IsMember({"a", "b"}));
    subcommands[8].first->add_flag("--distributive", req.distributive, "report distributivity of each lattice");

    std::vector<const char*> argv{"quotlat"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return {std::nullopt, code == 0 ? 0 : 1};
    }

    if (!req.regex && !req.automaton_path) {
        err << "error: one of --regex or --automaton is required\n";
        return {std::nullopt, 1};
    }
    for (const auto& [sub, command] : subcommands) {
        if (sub->parsed()) {
            req.command = command;
        }
    }
    req.format = format == "json" ? Format::json : format == "dot" ? Format::dot : Format::text;
    if (req.format == Format::dot && req.command != Command::atomaton && req.command != Command::lattice) {
        err << "error: --format dot is only available for atomaton and lattice\n";
        return {std::nullopt, 1};
    }
    if (!kind.empty()) {
        req.lattice_kind = parse_lattice_kind(kind);
    }
    if (!which.empty()) {
        req.which = which == "a" ? DualityTheorem::unions : DualityTheorem::intersections;
    }
    if (bound_opt->count() != 0) {
        req.word_bound = word_bound;
    }
    return {req, 0};
}

int run(const CliRequest& request, std::ostream& out, std::ostream& err) {
    if (request.command == Command::lattice && !request.lattice_kind) {
        err << "error: lattice requires a lattice kind\n";
        return 1;
    }
    try {
        auto d = decompose(load_input(request));
        const std::size_t bound = request.word_bound.value_or(2 * (d.n() + d.m()));
        const Session session{request, std::move(d), bound, out};
        return dispatch(session);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    }
    return 1;
}

} // namespace quotlat::cli
