#include "quotlat/complexity.hpp"

#include <algorithm>
#include <unordered_set>

#include "quotlat/lattice.hpp"

namespace quotlat {

ComplexityReport complexity_report(const LanguageDecomposition& d) {
    ComplexityReport report;
    report.n = d.n();
    report.m = d.m();
    const std::size_t n = d.n();

    std::unordered_set<IndexSet, IndexSetHash> atom_sets(d.left_atom_sets.begin(), d.left_atom_sets.end());
    report.singleton_atoms_present.resize(n);
    report.cosingleton_atoms_present.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        IndexSet single(n);
        single.insert(i);
        report.singleton_atoms_present[i] = atom_sets.count(single) != 0;
        IndexSet all_but_one = IndexSet::full(n);
        all_but_one.erase(i);
        report.cosingleton_atoms_present[i] = atom_sets.count(all_but_one) != 0;
    }
    const auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
    report.union_maximal = all(report.singleton_atoms_present);
    report.intersection_maximal = all(report.cosingleton_atoms_present);
    report.criterion_applies = n > 2;

    if (n > kMaxEnumeratedQuotients) {
        report.counts_predicted = true;
        if (n < 64) {
            const std::uint64_t maximal = std::uint64_t{1} << n;
            if (report.union_maximal) {
                report.union_count = report.union_count_right = maximal;
            }
            if (report.intersection_maximal) {
                report.intersection_count = report.intersection_count_right = maximal;
            }
        }
        return report;
    }

    const std::uint64_t maximal = std::uint64_t{1} << n;
    report.union_count = build_lattice(d, {LatticeOp::union_of, Side::left}).size();
    report.intersection_count = build_lattice(d, {LatticeOp::intersection_of, Side::left}).size();
    report.union_count_right = build_lattice(d, {LatticeOp::union_of, Side::right}).size();
    report.intersection_count_right = build_lattice(d, {LatticeOp::intersection_of, Side::right}).size();
    report.biconditionals_hold = (*report.union_count == maximal) == report.union_maximal &&
                                 (*report.intersection_count == maximal) == report.intersection_maximal &&
                                 report.union_count == report.union_count_right &&
                                 report.intersection_count == report.intersection_count_right;
    return report;
}

} // namespace quotlat
