#include "quotlat/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "quotlat/error.hpp"

namespace quotlat {

namespace {

constexpr std::string_view kReservedSymbols = "_@|*()";

struct SubsetPair {
    IndexSet left;
    IndexSet right;
    friend bool operator==(const SubsetPair&, const SubsetPair&) = default;
};

struct SubsetPairHash {
    std::size_t operator()(const SubsetPair& p) const { return p.left.hash() * 31 + p.right.hash(); }
};

void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
    if (!(a == b)) {
        throw AlphabetMismatch("alphabet mismatch: \"" + a.symbols() + "\" vs \"" + b.symbols() + "\"");
    }
}

/// States that can reach some state of `targets` (targets included).
IndexSet backward_closure(const Nfa& n, const IndexSet& targets) {
    std::vector<std::vector<State>> predecessors(n.num_states());
    for (State q = 0; q < n.num_states(); ++q) {
        for (std::size_t a = 0; a < n.alphabet().size(); ++a) {
            for (State p : n.successors(q, a)) {
                predecessors[p].push_back(q);
            }
        }
    }
    IndexSet seen = targets;
    std::vector<State> stack = targets.to_vector();
    while (!stack.empty()) {
        const State q = stack.back();
        stack.pop_back();
        for (State p : predecessors[q]) {
            if (!seen.contains(p)) {
                seen.insert(p);
                stack.push_back(p);
            }
        }
    }
    return seen;
}

IndexSet forward_closure(const Nfa& n, const IndexSet& sources) {
    IndexSet seen = sources;
    std::vector<State> stack = sources.to_vector();
    while (!stack.empty()) {
        const State q = stack.back();
        stack.pop_back();
        for (std::size_t a = 0; a < n.alphabet().size(); ++a) {
            for (State p : n.successors(q, a)) {
                if (!seen.contains(p)) {
                    seen.insert(p);
                    stack.push_back(p);
                }
            }
        }
    }
    return seen;
}

/// Breadth-first word enumeration over subsets. `keep` prunes subsets that
/// cannot contribute; `accept` decides membership of the current word.
template <typename Keep, typename Accept>
std::vector<std::string> enumerate_words(const Nfa& n, const IndexSet& start, std::size_t length_bound,
                                         std::size_t max_words, Keep keep, Accept accept) {
    std::vector<std::string> out;
    if (max_words == 0 || !keep(start)) {
        return out;
    }
    std::vector<std::pair<std::string, IndexSet>> level{{std::string{}, start}};
    for (std::size_t length = 0; !level.empty(); ++length) {
        for (const auto& [word, subset] : level) {
            if (accept(subset)) {
                out.push_back(word);
                if (out.size() == max_words) {
                    return out;
                }
            }
        }
        if (length == length_bound) {
            break;
        }
        std::vector<std::pair<std::string, IndexSet>> next;
        for (const auto& [word, subset] : level) {
            for (std::size_t a = 0; a < n.alphabet().size(); ++a) {
                IndexSet succ = n.step(subset, a);
                if (keep(succ)) {
                    next.emplace_back(word + n.alphabet().symbol(a), std::move(succ));
                }
            }
        }
        level = std::move(next);
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty()) {
        throw InvalidAlphabet("alphabet must be non-empty");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const char c = symbols_[i];
        if (std::isprint(static_cast<unsigned char>(c)) == 0 || c == ' ') {
            throw InvalidAlphabet("alphabet symbols must be printable non-space characters");
        }
        if (kReservedSymbols.find(c) != std::string_view::npos) {
            throw InvalidAlphabet(std::string("symbol '") + c + "' is reserved by the regex syntax");
        }
        if (symbols_.find(c) != i) {
            throw InvalidAlphabet(std::string("duplicate symbol '") + c + "'");
        }
    }
}

std::optional<std::size_t> Alphabet::index_of(char c) const {
    const auto pos = symbols_.find(c);
    if (pos == std::string::npos) {
        return std::nullopt;
    }
    return pos;
}

bool shortlex_less(const Alphabet& alphabet, std::string_view a, std::string_view b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            return alphabet.index_of(a[i]).value_or(0) < alphabet.index_of(b[i]).value_or(0);
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Nfa

Nfa::Nfa(Alphabet alphabet, std::size_t num_states)
    : alphabet_(std::move(alphabet)),
      successors_(num_states, std::vector<std::vector<State>>(alphabet_.size())),
      initial_(num_states),
      final_(num_states) {}

void Nfa::check_state(State q) const {
    if (q >= num_states()) {
        throw InvalidAutomaton("state " + std::to_string(q) + " out of range (automaton has " +
                               std::to_string(num_states()) + " states)");
    }
}

State Nfa::add_state() {
    const State q = num_states();
    successors_.emplace_back(alphabet_.size());
    IndexSet init(q + 1);
    IndexSet fin(q + 1);
    initial_.for_each([&](std::size_t i) { init.insert(i); });
    final_.for_each([&](std::size_t i) { fin.insert(i); });
    initial_ = std::move(init);
    final_ = std::move(fin);
    return q;
}

void Nfa::add_transition(State from, std::size_t symbol, State to) {
    check_state(from);
    check_state(to);
    if (symbol >= alphabet_.size()) {
        throw InvalidAutomaton("symbol index " + std::to_string(symbol) + " out of range");
    }
    auto& list = successors_[from][symbol];
    const auto it = std::lower_bound(list.begin(), list.end(), to);
    if (it == list.end() || *it != to) {
        list.insert(it, to);
    }
}

void Nfa::set_initial(State q, bool value) {
    check_state(q);
    value ? initial_.insert(q) : initial_.erase(q);
}

void Nfa::set_final(State q, bool value) {
    check_state(q);
    value ? final_.insert(q) : final_.erase(q);
}

void Nfa::set_initial(const IndexSet& states) {
    if (states.universe() != num_states()) {
        throw InvalidAutomaton("initial set has wrong universe");
    }
    initial_ = states;
}

void Nfa::set_final(const IndexSet& states) {
    if (states.universe() != num_states()) {
        throw InvalidAutomaton("final set has wrong universe");
    }
    final_ = states;
}

IndexSet Nfa::step(const IndexSet& from, std::size_t symbol) const {
    IndexSet out(num_states());
    from.for_each([&](std::size_t q) {
        for (State p : successors_[q][symbol]) {
            out.insert(p);
        }
    });
    return out;
}

bool Nfa::accepts(std::string_view word) const {
    IndexSet current = initial_;
    for (char c : word) {
        const auto a = alphabet_.index_of(c);
        if (!a) {
            return false;
        }
        current = step(current, *a);
    }
    return current.intersects(final_);
}

std::size_t Nfa::num_transitions() const {
    std::size_t total = 0;
    for (const auto& row : successors_) {
        for (const auto& list : row) {
            total += list.size();
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Dfa

Dfa::Dfa(Alphabet alphabet, std::size_t num_states, State initial)
    : alphabet_(std::move(alphabet)), delta_(num_states * alphabet_.size(), 0), initial_(initial), final_(num_states) {
    if (num_states == 0) {
        throw InvalidAutomaton("a DFA needs at least one state");
    }
    if (initial >= num_states) {
        throw InvalidAutomaton("initial state out of range");
    }
}

void Dfa::set_next(State q, std::size_t symbol, State to) {
    if (q >= num_states() || to >= num_states() || symbol >= alphabet_.size()) {
        throw InvalidAutomaton("DFA transition out of range");
    }
    delta_[q * alphabet_.size() + symbol] = to;
}

void Dfa::set_final(State q, bool value) {
    if (q >= num_states()) {
        throw InvalidAutomaton("DFA state out of range");
    }
    value ? final_.insert(q) : final_.erase(q);
}

void Dfa::set_provenance(std::vector<IndexSet> subsets) {
    if (!subsets.empty() && subsets.size() != num_states()) {
        throw InvalidAutomaton("provenance must list one subset per state");
    }
    provenance_ = std::move(subsets);
}

bool Dfa::accepts(std::string_view word) const {
    State q = initial_;
    for (char c : word) {
        const auto a = alphabet_.index_of(c);
        if (!a) {
            return false;
        }
        q = next(q, *a);
    }
    return is_final(q);
}

Nfa Dfa::to_nfa() const {
    Nfa n(alphabet_, num_states());
    for (State q = 0; q < num_states(); ++q) {
        for (std::size_t a = 0; a < alphabet_.size(); ++a) {
            n.add_transition(q, a, next(q, a));
        }
    }
    n.set_initial(initial_);
    n.set_final(final_);
    return n;
}

bool operator==(const Dfa& a, const Dfa& b) {
    return a.alphabet_ == b.alphabet_ && a.initial_ == b.initial_ && a.final_ == b.final_ && a.delta_ == b.delta_;
}

// ---------------------------------------------------------------------------
// Constructions

Nfa reverse(const Nfa& n) {
    Nfa r(n.alphabet(), n.num_states());
    for (State q = 0; q < n.num_states(); ++q) {
        for (std::size_t a = 0; a < n.alphabet().size(); ++a) {
            for (State p : n.successors(q, a)) {
                r.add_transition(p, a, q);
            }
        }
    }
    r.set_initial(n.final_states());
    r.set_final(n.initial());
    return r;
}

Dfa determinize(const Nfa& n) {
    const std::size_t k = n.alphabet().size();
    std::vector<IndexSet> subsets{n.initial()};
    std::unordered_map<IndexSet, State, IndexSetHash> index{{n.initial(), 0}};
    std::vector<State> delta;

    for (State current = 0; current < subsets.size(); ++current) {
        for (std::size_t a = 0; a < k; ++a) {
            IndexSet succ = n.step(subsets[current], a);
            auto [it, inserted] = index.try_emplace(succ, subsets.size());
            if (inserted) {
                subsets.push_back(std::move(succ));
            }
            delta.push_back(it->second);
        }
    }

    Dfa d(n.alphabet(), subsets.size(), 0);
    for (State q = 0; q < subsets.size(); ++q) {
        for (std::size_t a = 0; a < k; ++a) {
            d.set_next(q, a, delta[q * k + a]);
        }
        if (subsets[q].intersects(n.final_states())) {
            d.set_final(q);
        }
    }
    d.set_provenance(std::move(subsets));
    return d;
}

Nfa trim(const Nfa& n) {
    const IndexSet useful = forward_closure(n, n.initial()) & backward_closure(n, n.final_states());
    std::vector<State> renumber(n.num_states(), std::numeric_limits<State>::max());
    State next = 0;
    useful.for_each([&](std::size_t q) { renumber[q] = next++; });

    Nfa t(n.alphabet(), next);
    useful.for_each([&](std::size_t q) {
        for (std::size_t a = 0; a < n.alphabet().size(); ++a) {
            for (State p : n.successors(q, a)) {
                if (useful.contains(p)) {
                    t.add_transition(renumber[q], a, renumber[p]);
                }
            }
        }
        if (n.is_initial(q)) {
            t.set_initial(renumber[q]);
        }
        if (n.is_final(q)) {
            t.set_final(renumber[q]);
        }
    });
    return t;
}

Dfa minimize(const Nfa& n) {
    // Trimming first guarantees the reversed machine has no empty states, the
    // precondition under which the subset construction of a reverse-
    // deterministic machine is minimal.
    const auto reverse_determinize = [](const Nfa& x) { return determinize(reverse(trim(x))); };
    const Dfa reversed_minimal = reverse_determinize(n);
    return canonicalize(reverse_determinize(reversed_minimal.to_nfa()));
}

Dfa minimize(const Dfa& d) { return minimize(d.to_nfa()); }

Dfa canonicalize(const Dfa& d) {
    const std::size_t k = d.alphabet().size();
    const Nfa as_nfa = d.to_nfa();
    const IndexSet live = backward_closure(as_nfa, d.final_states());

    std::vector<State> order{d.initial()};
    std::vector<bool> seen(d.num_states(), false);
    seen[d.initial()] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t a = 0; a < k; ++a) {
            const State p = d.next(order[i], a);
            if (!seen[p]) {
                seen[p] = true;
                order.push_back(p);
            }
        }
    }
    std::stable_partition(order.begin(), order.end(), [&](State q) { return live.contains(q); });

    std::vector<State> renumber(d.num_states(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        renumber[order[i]] = i;
    }
    Dfa c(d.alphabet(), order.size(), renumber[d.initial()]);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t a = 0; a < k; ++a) {
            c.set_next(i, a, renumber[d.next(order[i], a)]);
        }
        if (d.is_final(order[i])) {
            c.set_final(i);
        }
    }
    return c;
}

std::optional<std::vector<State>> isomorphism(const Dfa& a, const Dfa& b) {
    if (!(a.alphabet() == b.alphabet()) || a.num_states() != b.num_states()) {
        return std::nullopt;
    }
    constexpr State unset = std::numeric_limits<State>::max();
    std::vector<State> forward(a.num_states(), unset);
    std::vector<State> backward(b.num_states(), unset);
    std::deque<State> queue{a.initial()};
    forward[a.initial()] = b.initial();
    backward[b.initial()] = a.initial();
    while (!queue.empty()) {
        const State p = queue.front();
        queue.pop_front();
        const State q = forward[p];
        if (a.is_final(p) != b.is_final(q)) {
            return std::nullopt;
        }
        for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
            const State p2 = a.next(p, s);
            const State q2 = b.next(q, s);
            if (forward[p2] == unset && backward[q2] == unset) {
                forward[p2] = q2;
                backward[q2] = p2;
                queue.push_back(p2);
            } else if (forward[p2] != q2 || backward[q2] != p2) {
                return std::nullopt;
            }
        }
    }
    if (std::find(forward.begin(), forward.end(), unset) != forward.end()) {
        return std::nullopt;
    }
    return forward;
}

bool isomorphic(const Dfa& a, const Dfa& b) { return canonicalize(a) == canonicalize(b); }

bool is_deterministic(const Nfa& n) {
    if (n.initial().count() != 1) {
        return false;
    }
    for (State q = 0; q < n.num_states(); ++q) {
        for (std::size_t a = 0; a < n.alphabet().size(); ++a) {
            if (n.successors(q, a).size() > 1) {
                return false;
            }
        }
    }
    return true;
}

std::optional<Dfa> as_dfa(const Nfa& n) {
    if (!is_deterministic(n)) {
        return std::nullopt;
    }
    bool partial = false;
    for (State q = 0; q < n.num_states() && !partial; ++q) {
        for (std::size_t a = 0; a < n.alphabet().size(); ++a) {
            partial = partial || n.successors(q, a).empty();
        }
    }
    const std::size_t states = n.num_states() + (partial ? 1 : 0);
    const State dead = n.num_states();
    Dfa d(n.alphabet(), states, n.initial().to_vector().front());
    for (State q = 0; q < states; ++q) {
        for (std::size_t a = 0; a < n.alphabet().size(); ++a) {
            if (q == dead) {
                d.set_next(q, a, dead);
            } else {
                const auto& succ = n.successors(q, a);
                d.set_next(q, a, succ.empty() ? dead : succ.front());
            }
        }
        if (q < n.num_states() && n.is_final(q)) {
            d.set_final(q);
        }
    }
    return d;
}

std::vector<std::string> state_language(const Nfa& n, const StateLanguageQuery& query) {
    if (query.state >= n.num_states()) {
        throw InvalidAutomaton("state " + std::to_string(query.state) + " out of range");
    }
    const std::size_t unlimited = std::numeric_limits<std::size_t>::max();
    if (query.direction == Direction::right) {
        const IndexSet live = backward_closure(n, n.final_states());
        IndexSet start(n.num_states());
        start.insert(query.state);
        return enumerate_words(
            n, start, query.length_bound, unlimited, [&](const IndexSet& s) { return s.intersects(live); },
            [&](const IndexSet& s) { return s.intersects(n.final_states()); });
    }
    IndexSet target(n.num_states());
    target.insert(query.state);
    const IndexSet reaches_target = backward_closure(n, target);
    return enumerate_words(
        n, n.initial(), query.length_bound, unlimited, [&](const IndexSet& s) { return s.intersects(reaches_target); },
        [&](const IndexSet& s) { return s.contains(query.state); });
}

std::vector<std::string> state_language(const Dfa& d, const StateLanguageQuery& query) {
    return state_language(d.to_nfa(), query);
}

bool equivalent(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a.alphabet(), b.alphabet());
    std::unordered_set<SubsetPair, SubsetPairHash> seen;
    std::deque<SubsetPair> queue;
    SubsetPair start{a.initial(), b.initial()};
    seen.insert(start);
    queue.push_back(std::move(start));
    while (!queue.empty()) {
        SubsetPair current = std::move(queue.front());
        queue.pop_front();
        if (current.left.intersects(a.final_states()) != current.right.intersects(b.final_states())) {
            return false;
        }
        for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
            SubsetPair next{a.step(current.left, s), b.step(current.right, s)};
            if (seen.insert(next).second) {
                queue.push_back(std::move(next));
            }
        }
    }
    return true;
}

bool equivalent(const Dfa& a, const Dfa& b) { return equivalent(a.to_nfa(), b.to_nfa()); }
bool equivalent(const Nfa& a, const Dfa& b) { return equivalent(a, b.to_nfa()); }
bool equivalent(const Dfa& a, const Nfa& b) { return equivalent(a.to_nfa(), b); }

bool is_empty(const Nfa& n) { return !forward_closure(n, n.initial()).intersects(n.final_states()); }

bool is_finite(const Nfa& n) {
    const Nfa t = trim(n);
    // Iterative three-colour DFS for a cycle.
    enum class Colour { white, grey, black };
    std::vector<Colour> colour(t.num_states(), Colour::white);
    for (State root = 0; root < t.num_states(); ++root) {
        if (colour[root] != Colour::white) {
            continue;
        }
        std::vector<std::pair<State, std::size_t>> stack{{root, 0}};
        colour[root] = Colour::grey;
        while (!stack.empty()) {
            auto& [q, edge] = stack.back();
            std::vector<State> succ;
            for (std::size_t a = 0; a < t.alphabet().size(); ++a) {
                for (State p : t.successors(q, a)) {
                    succ.push_back(p);
                }
            }
            if (edge < succ.size()) {
                const State p = succ[edge++];
                if (colour[p] == Colour::grey) {
                    return false;
                }
                if (colour[p] == Colour::white) {
                    colour[p] = Colour::grey;
                    stack.emplace_back(p, 0);
                }
            } else {
                colour[q] = Colour::black;
                stack.pop_back();
            }
        }
    }
    return true;
}

std::vector<std::string> shortest_words(const Nfa& n, std::size_t count) {
    const Nfa t = trim(n);
    return enumerate_words(
        t, t.initial(), std::numeric_limits<std::size_t>::max(), count, [](const IndexSet& s) { return !s.empty(); },
        [&](const IndexSet& s) { return s.intersects(t.final_states()); });
}

std::optional<std::vector<std::string>> finite_words(const Nfa& n) {
    if (!is_finite(n)) {
        return std::nullopt;
    }
    return shortest_words(n, std::numeric_limits<std::size_t>::max());
}

Nfa intersection(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a.alphabet(), b.alphabet());
    const std::size_t width = b.num_states();
    std::unordered_map<std::size_t, State> index;
    std::vector<std::pair<State, State>> states;
    std::vector<std::tuple<State, std::size_t, std::size_t>> edges;
    const auto intern = [&](State p, State q) {
        auto [it, inserted] = index.try_emplace(p * width + q, states.size());
        if (inserted) {
            states.emplace_back(p, q);
        }
        return it->second;
    };
    a.initial().for_each([&](std::size_t p) { b.initial().for_each([&](std::size_t q) { intern(p, q); }); });
    const std::size_t initial_count = states.size();
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto [p, q] = states[i];
        for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
            for (State p2 : a.successors(p, s)) {
                for (State q2 : b.successors(q, s)) {
                    edges.emplace_back(i, s, intern(p2, q2));
                }
            }
        }
    }
    Nfa out(a.alphabet(), states.size());
    for (const auto& [from, s, to] : edges) {
        out.add_transition(from, s, to);
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (i < initial_count) {
            out.set_initial(i);
        }
        if (a.is_final(states[i].first) && b.is_final(states[i].second)) {
            out.set_final(i);
        }
    }
    return out;
}

Nfa disjoint_union(const std::vector<Nfa>& parts, const Alphabet& alphabet) {
    std::size_t total = 0;
    for (const auto& part : parts) {
        require_same_alphabet(alphabet, part.alphabet());
        total += part.num_states();
    }
    Nfa out(alphabet, total);
    std::size_t offset = 0;
    for (const auto& part : parts) {
        for (State q = 0; q < part.num_states(); ++q) {
            for (std::size_t s = 0; s < alphabet.size(); ++s) {
                for (State p : part.successors(q, s)) {
                    out.add_transition(offset + q, s, offset + p);
                }
            }
            if (part.is_initial(q)) {
                out.set_initial(offset + q);
            }
            if (part.is_final(q)) {
                out.set_final(offset + q);
            }
        }
        offset += part.num_states();
    }
    return out;
}

Dfa complement(const Dfa& d) {
    Dfa c = d;
    c.set_provenance({});
    for (State q = 0; q < d.num_states(); ++q) {
        c.set_final(q, !d.is_final(q));
    }
    return c;
}

Nfa universal(const Alphabet& alphabet) {
    Nfa n(alphabet, 1);
    for (std::size_t s = 0; s < alphabet.size(); ++s) {
        n.add_transition(0, s, 0);
    }
    n.set_initial(0);
    n.set_final(0);
    return n;
}

Nfa empty_language(const Alphabet& alphabet) {
    Nfa n(alphabet, 1);
    n.set_initial(0);
    return n;
}

Nfa left_quotient(const Nfa& n, std::size_t symbol) { return with_initial(n, n.step(n.initial(), symbol)); }

Nfa with_initial(const Nfa& n, const IndexSet& initial) {
    Nfa out = n;
    out.set_initial(initial);
    return out;
}

Nfa with_final(const Nfa& n, const IndexSet& final_states) {
    Nfa out = n;
    out.set_final(final_states);
    return out;
}

} // namespace quotlat
