#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "generators.hpp"
#include "quotlat/error.hpp"
#include "quotlat/lattice.hpp"
#include "quotlat/regex.hpp"

using namespace quotlat;
using oracle::ExplicitLanguage;
using quotlat::testing::cofinite_set;
using quotlat::testing::finite_set;

namespace {

const LatticeKind kUnionLeft{LatticeOp::union_of, Side::left};
const LatticeKind kUnionRight{LatticeOp::union_of, Side::right};
const LatticeKind kInterLeft{LatticeOp::intersection_of, Side::left};
const LatticeKind kInterRight{LatticeOp::intersection_of, Side::right};

const ExplicitLanguage kL = finite_set({"", "a", "aa", "ba"});
const ExplicitLanguage kSigmaStar = cofinite_set({});

ExplicitLanguage language_of(const LanguageDecomposition& d, const LatticeElement& e) {
    return testing::explicit_language(e.kind.side == Side::left ? left_atoms_union_automaton(d, e.atoms)
                                                                : right_atoms_union_automaton(d, e.atoms));
}

std::set<ExplicitLanguage> languages(const LanguageDecomposition& d, const QuotientLattice& l) {
    std::set<ExplicitLanguage> out;
    for (std::size_t k = 0; k < l.size(); ++k) {
        out.insert(language_of(d, l.element(k)));
    }
    return out;
}

std::set<std::pair<ExplicitLanguage, ExplicitLanguage>> covers(const LanguageDecomposition& d,
                                                               const QuotientLattice& l) {
    std::set<std::pair<ExplicitLanguage, ExplicitLanguage>> out;
    for (const auto& [lower, upper] : l.cover_edges()) {
        out.emplace(language_of(d, l.element(lower)), language_of(d, l.element(upper)));
    }
    return out;
}

LatticeElement find(const LanguageDecomposition& d, const QuotientLattice& l, const ExplicitLanguage& lang) {
    for (std::size_t k = 0; k < l.size(); ++k) {
        if (language_of(d, l.element(k)) == lang) {
            return l.element(k);
        }
    }
    FAIL("no lattice element with the requested language");
    return l.bottom();
}

IndexSet subset_from_bits(std::size_t universe, std::uint64_t bits) {
    IndexSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) {
        if ((bits >> i) & 1U) {
            s.insert(i);
        }
    }
    return s;
}

} // namespace

TEST_CASE("kind names") {
    for (const auto& kind : {kUnionLeft, kUnionRight, kInterLeft, kInterRight}) {
        CHECK(parse_lattice_kind(to_string(kind)) == kind);
    }
    CHECK(to_string(kInterRight) == "intersection-right");
    CHECK_THROWS_AS(parse_lattice_kind("union"), std::invalid_argument);
}

TEST_CASE("running example: the four lattices") {
    const auto d = testing::golden_decomposition();
    const ExplicitLanguage empty = finite_set({});
    const ExplicitLanguage eps = finite_set({""});
    const ExplicitLanguage a = finite_set({"a"});
    const ExplicitLanguage eps_a = finite_set({"", "a"});
    const ExplicitLanguage eps_a_b = finite_set({"", "a", "b"});
    const ExplicitLanguage union_right_top = finite_set({"", "a", "aa", "b", "ba"});

    const auto ul = build_lattice(d, kUnionLeft);
    CHECK(ul.size() == 5);
    CHECK(languages(d, ul) == std::set<ExplicitLanguage>{empty, eps, a, eps_a, kL});
    CHECK(covers(d, ul) == std::set<std::pair<ExplicitLanguage, ExplicitLanguage>>{
                               {empty, eps}, {empty, a}, {eps, eps_a}, {a, eps_a}, {eps_a, kL}});

    const auto ur = build_lattice(d, kUnionRight);
    CHECK(ur.size() == 5);
    CHECK(covers(d, ur) == std::set<std::pair<ExplicitLanguage, ExplicitLanguage>>{
                               {empty, eps}, {eps, eps_a_b}, {eps, kL}, {eps_a_b, union_right_top}, {kL, union_right_top}});

    const auto il = build_lattice(d, kInterLeft);
    CHECK(il.size() == 6);
    CHECK(covers(d, il) == std::set<std::pair<ExplicitLanguage, ExplicitLanguage>>{
                               {empty, eps}, {empty, a}, {eps, eps_a}, {a, eps_a}, {eps_a, kL}, {kL, kSigmaStar}});

    const auto ir = build_lattice(d, kInterRight);
    CHECK(ir.size() == 6);
    CHECK(languages(d, ir) == std::set<ExplicitLanguage>{empty, eps, eps_a, eps_a_b, kL, kSigmaStar});
    CHECK(covers(d, ir) == std::set<std::pair<ExplicitLanguage, ExplicitLanguage>>{
                               {empty, eps}, {eps, eps_a}, {eps_a, eps_a_b}, {eps_a, kL}, {eps_a_b, kSigmaStar},
                               {kL, kSigmaStar}});

    CHECK(language_of(d, ul.bottom()) == empty);
    CHECK(language_of(d, ul.top()) == kL);
    CHECK(language_of(d, il.top()) == kSigmaStar);
    CHECK(language_of(d, il.bottom()) == empty);
}

TEST_CASE("running example: join and meet") {
    const auto d = testing::golden_decomposition();
    const auto ul = build_lattice(d, kUnionLeft);
    const auto eps = find(d, ul, finite_set({""}));
    const auto a = find(d, ul, finite_set({"a"}));
    CHECK(language_of(d, join(ul, eps, a)) == finite_set({"", "a"}));
    CHECK(language_of(d, meet(ul, eps, a)) == finite_set({}));

    const auto il = build_lattice(d, kInterLeft);
    CHECK(language_of(d, join(il, find(d, il, finite_set({""})), find(d, il, finite_set({"a"})))) ==
          finite_set({"", "a"}));

    const auto ur = build_lattice(d, kUnionRight);
    CHECK(language_of(d, meet(ur, find(d, ur, finite_set({"", "a", "b"})), find(d, ur, kL))) == finite_set({""}));

    const LatticeElement stranger{IndexSet(d.m(), {0}), kUnionLeft};
    CHECK_THROWS_AS(join(ul, stranger, eps), ElementNotInLattice);
    CHECK_THROWS_AS(meet(ul, eps, ur.top()), ElementNotInLattice);
    CHECK_THROWS_AS(ul.index_of(IndexSet(d.m(), {0})), ElementNotInLattice);
}

TEST_CASE("running example: psi") {
    const auto d = testing::golden_decomposition();
    const auto ul = build_lattice(d, kUnionLeft);
    const auto ur = build_lattice(d, kUnionRight);
    const auto psi_of = [&](const ExplicitLanguage& x) { return language_of(d, psi(d, find(d, ul, x))); };
    CHECK(psi_of(finite_set({})) == finite_set({"", "a", "aa", "b", "ba"}));
    CHECK(psi_of(finite_set({""})) == finite_set({"", "a", "b"}));
    CHECK(psi_of(finite_set({"a"})) == kL);
    CHECK(psi_of(finite_set({"", "a"})) == finite_set({""}));
    CHECK(psi_of(kL) == finite_set({}));

    CHECK(language_of(d, psi_prime(d, find(d, ur, finite_set({""})))) == finite_set({"", "a"}));
    CHECK(psi_prime(d, ur.bottom()) == ul.top());
    for (std::size_t k = 0; k < ul.size(); ++k) {
        CHECK(psi_prime(d, psi(d, ul.element(k))) == ul.element(k));
    }
    CHECK_THROWS_AS(psi(d, ur.top()), ElementNotInLattice);
}

TEST_CASE("running example: phi") {
    const auto d = testing::golden_decomposition();
    const auto il = build_lattice(d, kInterLeft);
    const auto ir = build_lattice(d, kInterRight);
    CHECK(language_of(d, phi(d, il.top())) == finite_set({}));
    CHECK(language_of(d, phi(d, find(d, il, finite_set({""})))) == kL);
    CHECK(phi_prime(d, ir.top()) == il.bottom());
    CHECK(language_of(d, phi_prime(d, ir.bottom())) == kSigmaStar);
    for (std::size_t k = 0; k < ir.size(); ++k) {
        CHECK(phi(d, phi_prime(d, ir.element(k))) == ir.element(k));
    }
    for (std::size_t k = 0; k < il.size(); ++k) {
        CHECK(phi_prime(d, phi(d, il.element(k))) == il.element(k));
    }
    CHECK_THROWS_AS(phi(d, build_lattice(d, kUnionLeft).top()), ElementNotInLattice);
}

TEST_CASE("running example: duality") {
    const auto d = testing::golden_decomposition();
    const auto a = verify_duality(d, DualityTheorem::unions);
    CHECK(a.ok());
    CHECK(a.left_size == 5);
    CHECK(a.right_size == 5);
    const auto b = verify_duality(d, DualityTheorem::intersections);
    CHECK(b.ok());
    CHECK(b.left_size == 6);
}

TEST_CASE("universal language") {
    const auto d = decompose(universal(Alphabet("ab")));
    CHECK(build_lattice(d, kUnionLeft).size() == 2);
    CHECK(build_lattice(d, kUnionRight).size() == 2);
    CHECK(build_lattice(d, kInterLeft).size() == 1);
    CHECK(build_lattice(d, kInterRight).size() == 1);
    CHECK(build_lattice(d, kInterLeft).cover_edges().empty());
    CHECK(verify_duality(d, DualityTheorem::unions).ok());
    CHECK(verify_duality(d, DualityTheorem::intersections).ok());
}

TEST_CASE("lattice properties on random languages") {
    const auto corpus = testing::standard_corpus(80, 4242);
    for (const auto& entry : corpus) {
        CAPTURE(entry.description);
        const auto d = decompose(entry.nfa);
        for (const auto& kind : {kUnionLeft, kUnionRight, kInterLeft, kInterRight}) {
            const auto l = build_lattice(d, kind);
            const std::size_t atoms = kind.side == Side::left ? d.m() : d.n();
            const bool unions = kind.op == LatticeOp::union_of;

            CHECK(l.size() <= (std::size_t{1} << std::min(d.m(), d.n())));
            CHECK(std::is_sorted(l.elements().begin(), l.elements().end(), canonical_less));
            CHECK(l.contains(unions ? IndexSet(atoms) : IndexSet::full(atoms)));
            for (const auto& g : l.generators()) {
                CHECK(l.contains(g));
            }

            // Closure under the generating operation and the lattice laws.
            const bool exhaustive = l.size() <= 64;
            for (std::size_t x = 0; x < l.size() && exhaustive; ++x) {
                const auto ex = l.element(x);
                CHECK(join(l, ex, ex) == ex);
                CHECK(meet(l, ex, ex) == ex);
                CHECK(meet(l, ex, l.top()) == ex);
                CHECK(join(l, ex, l.bottom()) == ex);
                for (std::size_t y = 0; y < l.size(); ++y) {
                    const auto ey = l.element(y);
                    CHECK(l.contains(unions ? (ex.atoms | ey.atoms) : (ex.atoms & ey.atoms)));
                    const auto j = join(l, ex, ey);
                    const auto m = meet(l, ex, ey);
                    CHECK(j == join(l, ey, ex));
                    CHECK(m == meet(l, ey, ex));
                    CHECK(join(l, ex, m) == ex);
                    CHECK(meet(l, ex, j) == ex);
                    CHECK(ex.atoms.is_subset_of(j.atoms));
                    CHECK(m.atoms.is_subset_of(ex.atoms));
                    if (l.size() <= 16) {
                        for (std::size_t z = 0; z < l.size(); ++z) {
                            const auto ez = l.element(z);
                            CHECK(join(l, join(l, ex, ey), ez) == join(l, ex, join(l, ey, ez)));
                            CHECK(meet(l, meet(l, ex, ey), ez) == meet(l, ex, meet(l, ey, ez)));
                        }
                    }
                }
            }

            // Cover edges are the transitive reduction of inclusion.
            std::set<std::pair<std::size_t, std::size_t>> expected;
            for (std::size_t x = 0; x < l.size(); ++x) {
                for (std::size_t y = 0; y < l.size(); ++y) {
                    if (x == y || !l.elements()[x].is_subset_of(l.elements()[y])) {
                        continue;
                    }
                    bool direct = true;
                    for (std::size_t z = 0; z < l.size() && direct; ++z) {
                        direct = z == x || z == y || !l.elements()[x].is_subset_of(l.elements()[z]) ||
                                 !l.elements()[z].is_subset_of(l.elements()[y]);
                    }
                    if (direct) {
                        expected.emplace(x, y);
                    }
                }
            }
            const auto edges = l.cover_edges();
            CHECK(std::set<std::pair<std::size_t, std::size_t>>(edges.begin(), edges.end()) == expected);
        }

        const auto ul = build_lattice(d, kUnionLeft);
        const auto ur = build_lattice(d, kUnionRight);
        const auto il = build_lattice(d, kInterLeft);
        const auto ir = build_lattice(d, kInterRight);
        CHECK(ul.size() == ur.size());
        CHECK(il.size() == ir.size());
        for (std::size_t k = 0; k < ul.size(); ++k) {
            const auto x = ul.element(k);
            CHECK(psi_prime(d, psi(d, x)) == x);
            // Psi(X) is also the union of the right atoms B_j with L_j not inside X.
            IndexSet via_quotients(d.n());
            for (std::size_t j = 0; j < d.n(); ++j) {
                if (!d.left_quotients[j].is_subset_of(x.atoms)) {
                    via_quotients.insert(j);
                }
            }
            CHECK(psi(d, x).atoms == via_quotients);
        }
        for (std::size_t k = 0; k < ur.size(); ++k) {
            CHECK(psi(d, psi_prime(d, ur.element(k))) == ur.element(k));
        }
        for (std::size_t k = 0; k < il.size(); ++k) {
            CHECK(phi_prime(d, phi(d, il.element(k))) == il.element(k));
        }
        for (std::size_t k = 0; k < ir.size(); ++k) {
            CHECK(phi(d, phi_prime(d, ir.element(k))) == ir.element(k));
        }
        CHECK(verify_duality(d, DualityTheorem::unions).ok());
        CHECK(verify_duality(d, DualityTheorem::intersections).ok());
    }
}

TEST_CASE("union closure matches enumeration of all quotient subsets") {
    const auto corpus = testing::standard_corpus(40, 777);
    for (const auto& entry : corpus) {
        const auto d = decompose(entry.nfa);
        std::set<IndexSet, bool (*)(const IndexSet&, const IndexSet&)> unions(canonical_less), meets(canonical_less);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d.n()); ++bits) {
            const IndexSet chosen = subset_from_bits(d.n(), bits);
            IndexSet u(d.m());
            IndexSet v = IndexSet::full(d.m());
            chosen.for_each([&](std::size_t j) {
                u |= d.left_quotients[j];
                v &= d.left_quotients[j];
            });
            unions.insert(u);
            meets.insert(v);
        }
        CHECK(build_lattice(d, kUnionLeft).elements() == std::vector<IndexSet>(unions.begin(), unions.end()));
        CHECK(build_lattice(d, kInterLeft).elements() == std::vector<IndexSet>(meets.begin(), meets.end()));
    }
}

TEST_CASE("distributivity diagnostic agrees with a direct triple check") {
    const auto corpus = testing::standard_corpus(60, 31337);
    std::size_t non_distributive = 0;
    for (const auto& entry : corpus) {
        const auto d = decompose(entry.nfa);
        for (const auto& kind : {kUnionLeft, kInterLeft}) {
            const auto l = build_lattice(d, kind);
            if (l.size() > 24) {
                continue;
            }
            bool expected = true;
            for (std::size_t x = 0; x < l.size() && expected; ++x) {
                for (std::size_t y = 0; y < l.size() && expected; ++y) {
                    for (std::size_t z = 0; z < l.size() && expected; ++z) {
                        const auto ex = l.element(x), ey = l.element(y), ez = l.element(z);
                        expected = meet(l, ex, join(l, ey, ez)) == join(l, meet(l, ex, ey), meet(l, ex, ez));
                    }
                }
            }
            CHECK(is_distributive(l) == expected);
            non_distributive += expected ? 0 : 1;
        }
    }
    MESSAGE("non-distributive lattices seen: " << non_distributive);
    CHECK(is_distributive(build_lattice(testing::golden_decomposition(), kUnionLeft)));
}
