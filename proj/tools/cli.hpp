#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "quotlat/lattice.hpp"

namespace quotlat::cli {

enum class Command { quotients, atoms, atomaton, matrix, lattice, duality, pairing, complexity, all };
enum class Format { text, json, dot };

struct CliRequest {
    std::optional<std::string> regex;
    std::optional<std::string> automaton_path;
    std::optional<std::string> alphabet;
    Command command = Command::all;
    std::optional<LatticeKind> lattice_kind;
    Format format = Format::text;
    /// Display truncation for infinite languages; 2(n+m) when unset.
    std::optional<std::size_t> word_bound;
    /// duality: "a" (unions), "b" (intersections), or both when unset.
    std::optional<DualityTheorem> which;
    bool distributive = false;
};

struct ParseOutcome {
    std::optional<CliRequest> request;
    /// Set when no request should run (help, usage errors).
    int exit_code = 0;
};

ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 0 on success, 1 on input errors, 2 when a verification finds a violation.
int run(const CliRequest& request, std::ostream& out, std::ostream& err);

} // namespace quotlat::cli
