#pragma once

#include <string_view>

#include "quotlat/automaton.hpp"

namespace quotlat {

/// Parses a regular expression into an NFA.
///
/// Grammar (precedence: star > concatenation > union):
///
///     union  := concat ('|' concat)*
///     concat := star+
///     star   := atom '*'*
///     atom   := symbol | '_' (empty word) | '@' (empty set) | '(' union ')'
///
/// Spaces are ignored. Throws ParseError with the offending position.
Nfa parse_regex(std::string_view text, const Alphabet& alphabet);

/// Alphabet made of the distinct symbols of `text`, in order of first
/// occurrence. Throws InvalidAlphabet when the text has no symbols.
Alphabet infer_alphabet(std::string_view text);

} // namespace quotlat
