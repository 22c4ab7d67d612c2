#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "quotlat/decomposition.hpp"

namespace quotlat {

/// Lattice closures are enumerated only up to this many left quotients;
/// beyond it the counts are predicted from the atom conditions.
inline constexpr std::size_t kMaxEnumeratedQuotients = 20;

struct ComplexityReport {
    std::size_t n = 0;
    std::size_t m = 0;

    /// Element counts of the left lattices (and of the right lattices, which
    /// must agree). Predicted (2^n when maximal, absent otherwise) when
    /// `counts_predicted` is set.
    std::optional<std::uint64_t> union_count;
    std::optional<std::uint64_t> intersection_count;
    std::optional<std::uint64_t> union_count_right;
    std::optional<std::uint64_t> intersection_count_right;
    bool counts_predicted = false;

    bool union_maximal = false;
    bool intersection_maximal = false;
    /// I_{{i}} is non-empty (one uncomplemented quotient).
    std::vector<bool> singleton_atoms_present;
    /// Z_k = I_{{0..n-1} \ {k}} is non-empty (one complemented quotient).
    std::vector<bool> cosingleton_atoms_present;

    /// Whether the 2n-atom criterion is claimed (only for n > 2).
    bool criterion_applies = false;
    /// When counts were enumerated: count == 2^n iff the atom condition holds,
    /// for both unions and intersections, and left/right counts agree.
    bool biconditionals_hold = true;
};

ComplexityReport complexity_report(const LanguageDecomposition& d);

} // namespace quotlat
