#include "quotlat/regex.hpp"

#include <string>
#include <vector>

#include "quotlat/error.hpp"

namespace quotlat {

namespace {

constexpr int kEpsilon = -1;

struct Fragment {
    std::size_t start;
    std::size_t accept;
};

/// Thompson construction over an automaton with epsilon moves.
class ThompsonBuilder {
public:
    ThompsonBuilder(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    Nfa build() {
        skip_spaces();
        if (at_end()) {
            throw ParseError("empty expression", pos_);
        }
        const Fragment whole = parse_union();
        skip_spaces();
        if (!at_end()) {
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return eliminate_epsilon(whole);
    }

private:
    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
    std::vector<std::vector<std::pair<int, std::size_t>>> edges_;

    bool at_end() const { return pos_ >= text_.size(); }

    void skip_spaces() {
        while (!at_end() && text_[pos_] == ' ') {
            ++pos_;
        }
    }

    std::size_t new_state() {
        edges_.emplace_back();
        return edges_.size() - 1;
    }

    void connect(std::size_t from, int symbol, std::size_t to) { edges_[from].emplace_back(symbol, to); }

    static bool starts_atom(char c) { return c != '|' && c != ')' && c != '*'; }

    Fragment parse_union() {
        Fragment left = parse_concat();
        skip_spaces();
        while (!at_end() && text_[pos_] == '|') {
            ++pos_;
            const Fragment right = parse_concat();
            const Fragment joined{new_state(), new_state()};
            connect(joined.start, kEpsilon, left.start);
            connect(joined.start, kEpsilon, right.start);
            connect(left.accept, kEpsilon, joined.accept);
            connect(right.accept, kEpsilon, joined.accept);
            left = joined;
            skip_spaces();
        }
        return left;
    }

    Fragment parse_concat() {
        skip_spaces();
        if (at_end() || !starts_atom(text_[pos_])) {
            throw ParseError(at_end() ? "unexpected end of expression"
                                      : std::string("expected an operand before '") + text_[pos_] + "'",
                             pos_);
        }
        Fragment result = parse_star();
        skip_spaces();
        while (!at_end() && starts_atom(text_[pos_])) {
            const Fragment next = parse_star();
            connect(result.accept, kEpsilon, next.start);
            result.accept = next.accept;
            skip_spaces();
        }
        return result;
    }

    Fragment parse_star() {
        Fragment inner = parse_atom();
        skip_spaces();
        while (!at_end() && text_[pos_] == '*') {
            ++pos_;
            const Fragment looped{new_state(), new_state()};
            connect(looped.start, kEpsilon, inner.start);
            connect(looped.start, kEpsilon, looped.accept);
            connect(inner.accept, kEpsilon, inner.start);
            connect(inner.accept, kEpsilon, looped.accept);
            inner = looped;
            skip_spaces();
        }
        return inner;
    }

    Fragment parse_atom() {
        skip_spaces();
        if (at_end()) {
            throw ParseError("unexpected end of expression", pos_);
        }
        const char c = text_[pos_];
        if (c == '(') {
            const std::size_t open = pos_++;
            const Fragment inner = parse_union();
            skip_spaces();
            if (at_end() || text_[pos_] != ')') {
                throw ParseError("unbalanced '(' opened at position " + std::to_string(open), pos_);
            }
            ++pos_;
            return inner;
        }
        const Fragment f{new_state(), new_state()};
        if (c == '_') {
            connect(f.start, kEpsilon, f.accept);
        } else if (c == '@') {
            // no path from start to accept
        } else {
            const auto symbol = alphabet_.index_of(c);
            if (!symbol) {
                throw ParseError(std::string("symbol '") + c + "' is not in the alphabet \"" + alphabet_.symbols() +
                                     "\"",
                                 pos_);
            }
            connect(f.start, static_cast<int>(*symbol), f.accept);
        }
        ++pos_;
        return f;
    }

    IndexSet epsilon_closure(std::size_t q) const {
        IndexSet closure(edges_.size());
        closure.insert(q);
        std::vector<std::size_t> stack{q};
        while (!stack.empty()) {
            const std::size_t p = stack.back();
            stack.pop_back();
            for (const auto& [symbol, to] : edges_[p]) {
                if (symbol == kEpsilon && !closure.contains(to)) {
                    closure.insert(to);
                    stack.push_back(to);
                }
            }
        }
        return closure;
    }

    Nfa eliminate_epsilon(const Fragment& whole) const {
        Nfa out(alphabet_, edges_.size());
        for (std::size_t q = 0; q < edges_.size(); ++q) {
            const IndexSet closure = epsilon_closure(q);
            closure.for_each([&](std::size_t r) {
                for (const auto& [symbol, to] : edges_[r]) {
                    if (symbol != kEpsilon) {
                        out.add_transition(q, static_cast<std::size_t>(symbol), to);
                    }
                }
            });
            if (closure.contains(whole.accept)) {
                out.set_final(q);
            }
        }
        out.set_initial(whole.start);
        return trim(out);
    }
};

} // namespace

Nfa parse_regex(std::string_view text, const Alphabet& alphabet) { return ThompsonBuilder(text, alphabet).build(); }

Alphabet infer_alphabet(std::string_view text) {
    std::string symbols;
    for (char c : text) {
        if (c == ' ' || c == '_' || c == '@' || c == '|' || c == '*' || c == '(' || c == ')') {
            continue;
        }
        if (symbols.find(c) == std::string::npos) {
            symbols += c;
        }
    }
    if (symbols.empty()) {
        throw InvalidAlphabet("the expression has no symbols to infer an alphabet from");
    }
    return Alphabet(symbols);
}

} // namespace quotlat
