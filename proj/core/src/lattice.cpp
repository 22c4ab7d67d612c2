#include "quotlat/lattice.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "quotlat/error.hpp"

namespace quotlat {

namespace {

constexpr std::size_t kMaxWitnesses = 64;

IndexSet identity_for(LatticeOp op, std::size_t atom_count) {
    return op == LatticeOp::union_of ? IndexSet(atom_count) : IndexSet::full(atom_count);
}

IndexSet combine(LatticeOp op, const IndexSet& a, const IndexSet& b) {
    return op == LatticeOp::union_of ? (a | b) : (a & b);
}

void require_member(const QuotientLattice& l, const LatticeElement& e) {
    if (!l.contains(e)) {
        throw ElementNotInLattice("element " + e.atoms.to_string() + " (" + to_string(e.kind) +
                                  ") is not in the lattice " + to_string(l.kind()));
    }
}

void require_kind(const LatticeElement& e, LatticeKind expected, std::size_t universe, const char* map_name) {
    if (!(e.kind == expected) || e.atoms.universe() != universe) {
        throw ElementNotInLattice(std::string(map_name) + " expects an element of " + to_string(expected) + ", got " +
                                  to_string(e.kind));
    }
}

} // namespace

std::string to_string(const LatticeKind& kind) {
    std::string out = kind.op == LatticeOp::union_of ? "union" : "intersection";
    out += kind.side == Side::left ? "-left" : "-right";
    return out;
}

LatticeKind parse_lattice_kind(const std::string& text) {
    for (LatticeOp op : {LatticeOp::union_of, LatticeOp::intersection_of}) {
        for (Side side : {Side::left, Side::right}) {
            if (to_string(LatticeKind{op, side}) == text) {
                return {op, side};
            }
        }
    }
    throw std::invalid_argument("unknown lattice kind '" + text +
                                "' (expected union-left, union-right, intersection-left or intersection-right)");
}

// ---------------------------------------------------------------------------

QuotientLattice::QuotientLattice(LatticeKind kind, std::vector<IndexSet> generators, std::size_t atom_count)
    : kind_(kind), atom_count_(atom_count), generators_(std::move(generators)) {
    std::unordered_set<IndexSet, IndexSetHash> seen;
    std::deque<IndexSet> queue;
    const auto visit = [&](IndexSet s) {
        if (seen.insert(s).second) {
            queue.push_back(std::move(s));
        }
    };
    visit(identity_for(kind_.op, atom_count_));
    for (const auto& g : generators_) {
        visit(g);
    }
    while (!queue.empty()) {
        const IndexSet current = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators_) {
            visit(combine(kind_.op, current, g));
        }
    }
    elements_.assign(seen.begin(), seen.end());
    std::sort(elements_.begin(), elements_.end(), canonical_less);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        index_.emplace(elements_[i], i);
    }
}

std::size_t QuotientLattice::index_of(const IndexSet& atoms) const {
    const auto it = index_.find(atoms);
    if (it == index_.end()) {
        throw ElementNotInLattice("atom set " + atoms.to_string() + " is not in the lattice " + to_string(kind_));
    }
    return it->second;
}

LatticeElement QuotientLattice::bottom() const { return element(0); }

LatticeElement QuotientLattice::top() const { return element(elements_.size() - 1); }

std::vector<std::pair<std::size_t, std::size_t>> QuotientLattice::cover_edges() const {
    // Elements are sorted by cardinality, so strictly smaller elements of an
    // upper element u precede it. Scanning them by decreasing cardinality, a
    // candidate is a cover of u exactly when no cover found so far contains it.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t upper = 0; upper < elements_.size(); ++upper) {
        std::vector<std::size_t> covers;
        for (std::size_t k = upper; k-- > 0;) {
            const IndexSet& candidate = elements_[k];
            if (candidate == elements_[upper] || !candidate.is_subset_of(elements_[upper])) {
                continue;
            }
            const bool dominated = std::any_of(covers.begin(), covers.end(), [&](std::size_t c) {
                return candidate.is_subset_of(elements_[c]);
            });
            if (!dominated) {
                covers.push_back(k);
            }
        }
        for (std::size_t lower : covers) {
            edges.emplace_back(lower, upper);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

QuotientLattice build_lattice(const LanguageDecomposition& d, LatticeKind kind) {
    if (kind.side == Side::left) {
        return QuotientLattice(kind, d.left_quotients, d.m());
    }
    return QuotientLattice(kind, d.right_quotients, d.n());
}

LatticeElement join(const QuotientLattice& l, const LatticeElement& a, const LatticeElement& b) {
    require_member(l, a);
    require_member(l, b);
    const IndexSet both = a.atoms | b.atoms;
    if (l.kind().op == LatticeOp::union_of) {
        return {both, l.kind()};
    }
    IndexSet result = IndexSet::full(l.atom_count());
    for (const auto& g : l.generators()) {
        if (both.is_subset_of(g)) {
            result &= g;
        }
    }
    return {result, l.kind()};
}

LatticeElement meet(const QuotientLattice& l, const LatticeElement& a, const LatticeElement& b) {
    require_member(l, a);
    require_member(l, b);
    const IndexSet common = a.atoms & b.atoms;
    if (l.kind().op == LatticeOp::intersection_of) {
        return {common, l.kind()};
    }
    // Every element is a union of generators, so the union of the generators
    // below a & b is the union of all elements below it.
    IndexSet result(l.atom_count());
    for (const auto& g : l.generators()) {
        if (g.is_subset_of(common)) {
            result |= g;
        }
    }
    return {result, l.kind()};
}

bool is_distributive(const QuotientLattice& l) {
    const std::size_t size = l.size();
    for (std::size_t x = 0; x < size; ++x) {
        for (std::size_t y = 0; y < size; ++y) {
            for (std::size_t z = y; z < size; ++z) {
                const auto ex = l.element(x);
                const auto ey = l.element(y);
                const auto ez = l.element(z);
                if (!(meet(l, ex, join(l, ey, ez)) == join(l, meet(l, ex, ey), meet(l, ex, ez)))) {
                    return false;
                }
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

LatticeElement psi(const LanguageDecomposition& d, const LatticeElement& x) {
    require_kind(x, {LatticeOp::union_of, Side::left}, d.m(), "psi");
    IndexSet result(d.n());
    for (std::size_t i = 0; i < d.m(); ++i) {
        if (!x.atoms.contains(i)) {
            result |= d.right_quotients[i];
        }
    }
    return {result, {LatticeOp::union_of, Side::right}};
}

LatticeElement psi_prime(const LanguageDecomposition& d, const LatticeElement& y) {
    require_kind(y, {LatticeOp::union_of, Side::right}, d.n(), "psi_prime");
    IndexSet result(d.m());
    for (std::size_t i = 0; i < d.n(); ++i) {
        if (!y.atoms.contains(i)) {
            result |= d.left_quotients[i];
        }
    }
    return {result, {LatticeOp::union_of, Side::left}};
}

LatticeElement phi(const LanguageDecomposition& d, const LatticeElement& x) {
    require_kind(x, {LatticeOp::intersection_of, Side::left}, d.m(), "phi");
    IndexSet result = IndexSet::full(d.n());
    x.atoms.for_each([&](std::size_t j) { result &= d.right_quotients[j]; });
    return {result, {LatticeOp::intersection_of, Side::right}};
}

LatticeElement phi_prime(const LanguageDecomposition& d, const LatticeElement& y) {
    require_kind(y, {LatticeOp::intersection_of, Side::right}, d.n(), "phi_prime");
    IndexSet result = IndexSet::full(d.m());
    y.atoms.for_each([&](std::size_t j) { result &= d.left_quotients[j]; });
    return {result, {LatticeOp::intersection_of, Side::left}};
}

DualityReport verify_duality(const LanguageDecomposition& d, DualityTheorem which) {
    const LatticeOp op = which == DualityTheorem::unions ? LatticeOp::union_of : LatticeOp::intersection_of;
    const QuotientLattice left = build_lattice(d, {op, Side::left});
    const QuotientLattice right = build_lattice(d, {op, Side::right});
    const auto forward = [&](const LatticeElement& x) { return op == LatticeOp::union_of ? psi(d, x) : phi(d, x); };
    const auto backward = [&](const LatticeElement& y) {
        return op == LatticeOp::union_of ? psi_prime(d, y) : phi_prime(d, y);
    };
    const char* name = op == LatticeOp::union_of ? "Psi" : "Phi";

    DualityReport report;
    report.which = which;
    report.left_size = left.size();
    report.right_size = right.size();
    const auto witness = [&](std::string text) {
        if (report.witnesses.size() < kMaxWitnesses) {
            report.witnesses.push_back(std::move(text));
        }
    };

    std::vector<LatticeElement> images;
    images.reserve(left.size());
    std::unordered_set<IndexSet, IndexSetHash> hit;
    bool bijective = left.size() == right.size();
    if (!bijective) {
        witness("lattice sizes differ: " + std::to_string(left.size()) + " vs " + std::to_string(right.size()));
    }
    for (std::size_t k = 0; k < left.size(); ++k) {
        const LatticeElement x = left.element(k);
        LatticeElement image = forward(x);
        if (!right.contains(image)) {
            bijective = false;
            witness(std::string(name) + "(" + x.atoms.to_string() + ") = " + image.atoms.to_string() +
                    " is not in the right lattice");
        } else if (!hit.insert(image.atoms).second) {
            bijective = false;
            witness(std::string(name) + " is not injective at " + x.atoms.to_string());
        }
        if (!(backward(image) == x)) {
            bijective = false;
            witness(std::string(name) + "' does not invert " + name + " at " + x.atoms.to_string());
        }
        images.push_back(std::move(image));
    }
    for (std::size_t k = 0; k < right.size(); ++k) {
        const LatticeElement y = right.element(k);
        if (!(forward(backward(y)) == y)) {
            bijective = false;
            witness(std::string(name) + " does not invert " + name + "' at " + y.atoms.to_string());
        }
    }
    report.bijective = bijective;

    bool order_reversing = true;
    bool exchanges = bijective;
    for (std::size_t a = 0; a < left.size(); ++a) {
        for (std::size_t b = 0; b < left.size(); ++b) {
            const IndexSet& u1 = left.elements()[a];
            const IndexSet& u2 = left.elements()[b];
            if (u1.is_subset_of(u2) != images[b].atoms.is_subset_of(images[a].atoms)) {
                order_reversing = false;
                witness("inclusion not reversed for " + u1.to_string() + ", " + u2.to_string());
            }
            if (!bijective || b < a) {
                continue;
            }
            const LatticeElement x1 = left.element(a);
            const LatticeElement x2 = left.element(b);
            if (!(forward(join(left, x1, x2)) == meet(right, images[a], images[b]))) {
                exchanges = false;
                witness(std::string(name) + " of the join of " + u1.to_string() + ", " + u2.to_string() +
                        " is not the meet of the images");
            }
            if (!(forward(meet(left, x1, x2)) == join(right, images[a], images[b]))) {
                exchanges = false;
                witness(std::string(name) + " of the meet of " + u1.to_string() + ", " + u2.to_string() +
                        " is not the join of the images");
            }
        }
    }
    report.order_reversing = order_reversing;
    report.exchanges_meet_join = exchanges;
    return report;
}

} // namespace quotlat
