#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quotlat {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidAlphabet : public Error {
public:
    using Error::Error;
};

class InvalidAutomaton : public Error {
public:
    using Error::Error;
};

class AlphabetMismatch : public Error {
public:
    using Error::Error;
};

/// Raised by the regex parser; `position()` is the 0-based byte offset of the
/// offending character (or the input length for premature end of input).
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error("parse error at position " + std::to_string(position) + ": " + message), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class EmptyLanguage : public Error {
public:
    EmptyLanguage() : Error("the language is empty; quotients and atoms require a non-empty language") {}
};

class ElementNotInLattice : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

} // namespace quotlat
