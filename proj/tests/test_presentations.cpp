#include "oracles.hpp"
#include "stonework/corpus.hpp"
#include "stonework/duality.hpp"
#include "stonework/presentations.hpp"
#include "stonework/spectra.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

using namespace stonework;

namespace {

FiniteFrame boolean(int atoms) { return lower_sets(antichain(atoms)); }

std::vector<std::string> names(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

// Every map a -> b as value vectors, in lexicographic order.
std::vector<std::vector<int>> all_maps(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(n, 0);
    while (true) {
        out.push_back(v);
        int i = 0;
        while (i < n && ++v[i] == m) v[i++] = 0;
        if (i == n) break;
    }
    return out;
}

// Direct evaluation of a term in a lattice, independent of the library's evaluator.
int eval_in(const FiniteFrame& l, const Term& t, const std::vector<int>& g) {
    switch (t.op) {
        case Term::Op::Gen: return g[t.gen];
        case Term::Op::Top: return l.top;
        case Term::Op::Bottom: return l.bot;
        case Term::Op::Meet: {
            int acc = l.top;
            for (const auto& a : t.args) acc = l.meet(acc, eval_in(l, a, g));
            return acc;
        }
        case Term::Op::Join: {
            int acc = l.bot;
            for (const auto& a : t.args) acc = l.join(acc, eval_in(l, a, g));
            return acc;
        }
    }
    return -1;
}

Term random_term(std::mt19937_64& rng, int gens, int depth, bool horn) {
    std::uniform_int_distribution<int> pick(0, horn ? 3 : 6);
    const int k = depth == 0 ? pick(rng) % 3 : pick(rng);
    if (k <= 1 || gens == 0) {
        if (gens == 0 || k == 2) return horn || rng() % 2 ? Term::top() : Term::bottom();
        return Term::generator(static_cast<int>(rng() % gens));
    }
    if (k == 2) return horn || rng() % 2 ? Term::top() : Term::bottom();
    std::vector<Term> args{random_term(rng, gens, depth - 1, horn), random_term(rng, gens, depth - 1, horn)};
    return horn || k <= 4 ? Term::meet(std::move(args)) : Term::join(std::move(args));
}

Presentation random_presentation(std::mt19937_64& rng, int gens, int relations, Logic logic) {
    Presentation p;
    p.logic = logic;
    p.generators = names(gens);
    for (int i = 0; i < relations; ++i) {
        Relation r;
        r.lhs = random_term(rng, gens, 2, logic == Logic::Horn);
        r.rhs = random_term(rng, gens, 2, logic == Logic::Horn);
        r.equality = rng() % 3 == 0;
        p.relations.push_back(r);
    }
    return p;
}

// Does lhs ≤ rhs hold under every assignment into every distributive lattice with at
// most six elements that satisfies the relations?
bool semantic_entails(const Presentation& p, const Term& lhs, const Term& rhs) {
    static const auto frames = distributive_lattices_up_to(6);
    const int n = static_cast<int>(p.generators.size());
    for (const FiniteFrame& l : frames)
        for (const auto& g : all_maps(n, l.size())) {
            bool model = true;
            for (const auto& r : p.relations) {
                const int a = eval_in(l, r.lhs, g), b = eval_in(l, r.rhs, g);
                if (r.equality ? a != b : !l.leq(a, b)) model = false;
            }
            if (model && !l.leq(eval_in(l, lhs, g), eval_in(l, rhs, g))) return false;
        }
    return true;
}

std::string zmod_presentation(int n) {
    std::string out = "logic coherent\ngenerators";
    for (int x = 0; x < n; ++x) out += " D(" + std::to_string(x) + ")";
    out += "\nD(" + std::to_string(1 % n) + ") = 1\nD(0) = 0\n";
    auto d = [](int x) { return "D(" + std::to_string(x) + ")"; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            out += d(a * b % n) + " = " + d(a) + " & " + d(b) + "\n";
            out += d((a + b) % n) + " <= " + d(a) + " | " + d(b) + "\n";
        }
    return out;
}

// Both structures are generated by the generator images; match them element by element.
bool generated_iso(const PresentedLattice& a, const PresentedLattice& b) {
    const FiniteFrame& x = a.structure;
    const FiniteFrame& y = b.structure;
    if (x.size() != y.size()) return false;
    std::vector<int> to(x.size(), -1);
    std::vector<int> queue;
    auto link = [&](int u, int v) {
        if (to[u] == -1) {
            to[u] = v;
            queue.push_back(u);
        }
        return to[u] == v;
    };
    bool ok = link(x.bot, y.bot) && link(x.top, y.top);
    for (std::size_t g = 0; g < a.generator_images.size(); ++g)
        ok = ok && link(a.generator_images[g], b.generator_images[g]);
    for (std::size_t i = 0; i < queue.size() && ok; ++i)
        for (std::size_t j = 0; j <= i && ok; ++j) {
            const int u = queue[i], v = queue[j];
            ok = link(x.meet(u, v), y.meet(to[u], to[v])) && link(x.join(u, v), y.join(to[u], to[v]));
        }
    return ok && std::find(to.begin(), to.end(), -1) == to.end() && is_order_iso(x.carrier, y.carrier, to);
}

}  // namespace

// ---------------------------------------------------------------------------
// text format

TEST(Dsl, ParsesHeaderCommentsAndOperators) {
    auto p = parse_presentation(
        "# two generators\n"
        "logic geometric\n"
        "generators a, b D(2)\n"
        "a ∧ b ≤ D(2)   # trailing comment\n"
        "a /\\ 1 = a\n"
        "join(a, b, 0) >= a \\/ b\n"
        "⋁(a, b) = ⋀(a, D(2)) | b\n");
    EXPECT_EQ(p.logic, Logic::Geometric);
    EXPECT_EQ(p.generators, (std::vector<std::string>{"a", "b", "D(2)"}));
    ASSERT_EQ(p.relations.size(), 4u);
    EXPECT_EQ(p.relations[0].lhs.op, Term::Op::Meet);
    EXPECT_EQ(p.relations[0].rhs.gen, 2);
    EXPECT_TRUE(p.relations[1].equality);
    // >= swaps the sides
    EXPECT_EQ(p.relations[2].lhs.op, Term::Op::Join);
    EXPECT_EQ(p.relations[2].lhs.args.size(), 2u);
    EXPECT_EQ(p.relations[2].rhs.args.size(), 3u);
    EXPECT_EQ(p.relations[3].line, 7);
}

TEST(Dsl, MeetBindsTighterThanJoin) {
    auto gens = names(3);
    Term t = parse_term("a | b & c", gens);
    ASSERT_EQ(t.op, Term::Op::Join);
    EXPECT_EQ(t.args[1].op, Term::Op::Meet);
    EXPECT_EQ(term_string(parse_term("(a | b) & c", gens), gens), "(a | b) & c");
}

TEST(Dsl, RoundTripsThroughText) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto p = random_presentation(rng, 3, 4, i % 2 ? Logic::Coherent : Logic::Horn);
        const std::string text = presentation_string(p);
        EXPECT_EQ(presentation_string(parse_presentation(text)), text);
    }
}

TEST(Dsl, Errors) {
    EXPECT_THROW(parse_presentation("generators a\na <= b\n"), DomainError);
    EXPECT_THROW(parse_presentation("a <= a\n"), DomainError);
    EXPECT_THROW(parse_presentation("generators a a\n"), DomainError);
    EXPECT_THROW(parse_presentation("logic modal\n"), DomainError);
    EXPECT_THROW(parse_presentation("generators a b\na & <= b\n"), DomainError);
    EXPECT_THROW(parse_presentation("generators a b\na b\n"), DomainError);
    try {
        parse_presentation("logic horn\ngenerators a b\na <= b\na | b <= a\n");
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
    }
    EXPECT_THROW(parse_presentation("logic horn\ngenerators a\n0 <= a\n"), DomainError);
}

// ---------------------------------------------------------------------------
// filtering maps

TEST(Filtering, TrivialTopologyMeansMeetHom) {
    for (const FiniteFrame& src : lattices_up_to(5)) {
        GrothendieckTopology j = trivial_topology(src.carrier);
        for (const FiniteFrame& l : distributive_lattices_up_to(4)) {
            auto meet_homs = enumerate_homs(src, l, kMeetHom);
            std::set<std::vector<int>> homs(meet_homs.begin(), meet_homs.end());
            for (const auto& f : all_maps(src.size(), l.size()))
                EXPECT_EQ(is_j_filtering({j, l, f}), homs.count(f) == 1);
        }
    }
}

TEST(Filtering, EtaIsFilteringAndConstantZeroIsNot) {
    for (const Poset& p : posets_up_to(3))
        for (const auto& j : all_topologies(p)) {
            FilteringMap eta = eta_map(j);
            EXPECT_EQ(filtering_violation(eta), "");
            FrameHom id = extend_filtering(eta);
            EXPECT_EQ(id.f, identity_hom(eta.cod).f);
        }
    Poset p = chain(2);
    FilteringMap zero{trivial_topology(p), boolean(1), {0, 0}};
    EXPECT_EQ(filtering_violation(zero).substr(0, 5), "unit:");
}

TEST(Filtering, ExtensionIsTheUniqueFactorization) {
    int sites = 0;
    for (const Poset& p : posets_up_to(3))
        for (const auto& j : all_topologies(p)) {
            FilteringMap eta = eta_map(j);
            if (eta.cod.size() > 12) continue;
            ++sites;
            for (const FiniteFrame& l : distributive_lattices_up_to(4)) {
                std::map<std::vector<int>, int> factor;
                for (const auto& h : enumerate_homs(eta.cod, l)) {
                    std::vector<int> g(p.n);
                    for (int c = 0; c < p.n; ++c) g[c] = h[eta.f[c]];
                    EXPECT_TRUE(is_j_filtering({j, l, g}));
                    ++factor[g];
                }
                for (const auto& f : all_maps(p.n, l.size())) {
                    FilteringMap m{j, l, f};
                    if (!is_j_filtering(m)) {
                        EXPECT_EQ(factor.count(f), 0u);
                        EXPECT_THROW(extend_filtering(m), DomainError);
                        continue;
                    }
                    ASSERT_EQ(factor[f], 1);
                    FrameHom ext = extend_filtering(m);
                    std::vector<int> back(p.n);
                    for (int c = 0; c < p.n; ++c) back[c] = ext.f[eta.f[c]];
                    EXPECT_EQ(back, f);
                }
            }
        }
    EXPECT_GT(sites, 20);
}

TEST(Filtering, PrimeFilterCharacteristicMap) {
    const FiniteFrame two = boolean(1);
    for (const Poset& p : posets_up_to(3))
        for (const auto& j : all_topologies(p)) {
            for (const Subset& f : j_prime_filters(j)) {
                std::vector<int> chi(p.n);
                for (int c = 0; c < p.n; ++c) chi[c] = f[c] ? two.top : two.bot;
                FrameHom ext = extend_filtering({j, two, chi});
                for (int i = 0; i < ext.dom.size(); ++i)
                    EXPECT_EQ(ext.f[i] == two.top, ext.dom.sets[i].intersects(f));
            }
        }
}

// ---------------------------------------------------------------------------
// free structures

TEST(FreeStructures, MeetSemilatticeSizesAndUniversality) {
    EXPECT_EQ(free_meet_semilattice({}).n, 1);
    EXPECT_TRUE(is_order_iso(free_meet_semilattice({"a"}), chain(2), {1, 0}));
    Poset m2 = free_meet_semilattice({"a", "b"});
    ASSERT_EQ(m2.n, 4);
    EXPECT_TRUE(m2.leq(3, 1) && m2.leq(1, 0) && !m2.leq(1, 2));
    // Maps {a, b} -> M extend uniquely to top-preserving meet homs.
    FiniteFrame free = lattice_from_poset(m2);
    for (const FiniteFrame& m : lattices_up_to(5)) {
        std::map<std::pair<int, int>, int> seen;
        for (const auto& h : enumerate_homs(free, m, kMeetHom)) ++seen[{h[1], h[2]}];
        EXPECT_EQ(seen.size(), static_cast<std::size_t>(m.size() * m.size()));
        for (const auto& [k, v] : seen) EXPECT_EQ(v, 1);
    }
}

TEST(FreeStructures, FrameOnSetSizes) {
    const int expected[] = {2, 3, 6, 20, 168};
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(free_frame_on_set(names(n)).frame.size(), expected[n]);
    FreeFrame one = free_frame_on_set({"a"});
    EXPECT_TRUE(iso_search(one.frame, lower_sets(chain(2))).has_value());
}

TEST(FreeStructures, FrameOnSetIsUniversal) {
    FreeFrame f = free_frame_on_set(names(2));
    for (const FiniteFrame& l : distributive_lattices_up_to(6)) {
        std::map<std::pair<int, int>, int> seen;
        for (const auto& h : enumerate_homs(f.frame, l)) ++seen[{h[f.eta[0]], h[f.eta[1]]}];
        EXPECT_EQ(seen.size(), static_cast<std::size_t>(l.size() * l.size()));
        for (const auto& [k, v] : seen) EXPECT_EQ(v, 1);
    }
}

TEST(FreeStructures, FrameOnSetMatchesElementalOpens) {
    for (int n = 0; n <= 4; ++n)
        EXPECT_TRUE(iso_search(free_frame_on_set(names(n)).frame, open_frame(elemental_space(n))).has_value()) << n;
}

TEST(FreeStructures, CjslMatchesCoverageIdeals) {
    for (const FiniteFrame& a : lattices_up_to(4)) {
        FreeFrame l = free_frame_on_cjsl(a);
        auto ideals = coverage_ideals(cjsl_coverage(a));
        std::sort(ideals.begin(), ideals.end(), SubsetLess{});
        EXPECT_EQ(ideals, l.frame.sets);
    }
}

TEST(FreeStructures, CjslEtaMeetsThePrincipalDownset) {
    for (const FiniteFrame& a : lattices_up_to(5)) {
        FreeFrame l = free_frame_on_cjsl(a);
        const int size = 1 << a.size();
        for (int x = 0; x < a.size(); ++x) {
            Subset expect(size);
            for (int u = 0; u < size; ++u)
                for (int b = 0; b < a.size(); ++b)
                    if ((u >> b & 1) && a.leq(b, x)) expect.set(u);
            EXPECT_EQ(l.frame.sets[l.eta[x]], expect);
        }
    }
}

TEST(FreeStructures, CjslEtaInjectiveAndJoinPreserving) {
    auto check = [](const FiniteFrame& a) {
        FreeFrame l = free_frame_on_cjsl(a);
        std::set<int> image(l.eta.begin(), l.eta.end());
        EXPECT_EQ(image.size(), static_cast<std::size_t>(a.size()));
        EXPECT_EQ(l.eta[a.bot], l.frame.bot);
        for (int x = 0; x < a.size(); ++x)
            for (int y = 0; y < a.size(); ++y)
                EXPECT_EQ(l.eta[a.join(x, y)], l.frame.join(l.eta[x], l.eta[y]));
    };
    for (const FiniteFrame& a : lattices_up_to(4)) check(a);
    std::mt19937_64 rng(5);
    auto six = lattices_up_to(6);
    std::shuffle(six.begin(), six.end(), rng);
    for (std::size_t i = 0; i < std::min<std::size_t>(six.size(), 8); ++i) check(six[i]);
}

TEST(FreeStructures, CjslUniversalProperty) {
    auto frames = distributive_lattices_up_to(8);
    for (const FiniteFrame& a : {boolean(0), lower_sets(chain(1)), lower_sets(chain(2)), boolean(2)}) {
        FreeFrame l = free_frame_on_cjsl(a);
        for (const FiniteFrame& f : frames) {
            if (a.size() == 4 && f.size() > 6) continue;
            std::map<std::vector<int>, int> factor;
            for (const auto& h : enumerate_homs(l.frame, f)) {
                std::vector<int> g(a.size());
                for (int x = 0; x < a.size(); ++x) g[x] = h[l.eta[x]];
                ++factor[g];
            }
            for (const auto& g : enumerate_homs(a, f, kJoinHom)) {
                ASSERT_EQ(factor[g], 1);
                auto ext = cjsl_extension(l, a, f, g);
                EXPECT_EQ(frame_hom_violation(l.frame, f, ext), "");
                for (int x = 0; x < a.size(); ++x) EXPECT_EQ(ext[l.eta[x]], g[x]);
            }
            EXPECT_EQ(factor.size(), enumerate_homs(a, f, kJoinHom).size());
        }
    }
}

TEST(FreeStructures, JslAgreesWithSpatialDescription) {
    EXPECT_EQ(free_frame_on_jsl(boolean(0)).frame.size(), 2);
    EXPECT_EQ(jsl_spatial_frame(boolean(0)).size(), 2);
    EXPECT_TRUE(iso_search(free_frame_on_jsl(lower_sets(chain(1))).frame,
                           jsl_spatial_frame(lower_sets(chain(1)))).has_value());
    EXPECT_TRUE(iso_search(free_frame_on_jsl(boolean(2)).frame, jsl_spatial_frame(boolean(2))).has_value());
    for (const FiniteFrame& a : lattices_up_to(5))
        EXPECT_TRUE(iso_search(free_frame_on_jsl(a).frame, jsl_spatial_frame(a)).has_value())
            << a.size() << " " << free_frame_on_jsl(a).frame.size() << " " << jsl_spatial_frame(a).size();
}

// ---------------------------------------------------------------------------
// presented lattices

TEST(Present, HornWithoutRelationsIsFree) {
    for (int n = 0; n <= 3; ++n) {
        Presentation p;
        p.logic = Logic::Horn;
        p.generators = names(n);
        auto pl = present_lattice(p);
        EXPECT_TRUE(iso_search(pl.structure.carrier, free_meet_semilattice(p.generators)).has_value());
        EXPECT_THROW(pl.evaluate(Term::bottom()), DomainError);
    }
}

TEST(Present, CoherentWithoutRelationsIsFree) {
    const int expected[] = {2, 3, 6, 20, 168};
    for (int n = 0; n <= 4; ++n) {
        Presentation p;
        p.generators = names(n);
        auto pl = present_lattice(p);
        EXPECT_EQ(pl.structure.size(), expected[n]);
        EXPECT_TRUE(is_distributive(pl.structure));
    }
}

TEST(Present, ZariskiOfZ4) {
    auto pl = present_lattice(parse_presentation(zmod_presentation(4)));
    EXPECT_EQ(pl.structure.size(), 2);
    EXPECT_TRUE(pl.entails("D(2) = 0"));
    EXPECT_TRUE(pl.entails("D(3) = 1"));
    EXPECT_EQ(pl.labels[pl.structure.bot], "0");
}

TEST(Present, IdentifiedGenerators) {
    auto pl = present_lattice(parse_presentation("generators a b\na = b\n"));
    EXPECT_EQ(pl.structure.size(), 3);
    EXPECT_EQ(pl.generator_images[0], pl.generator_images[1]);
    // hom-counting: maps into the 2-element lattice respecting a = b
    EXPECT_EQ(enumerate_homs(pl.structure, boolean(1)).size(), 2u);
}

TEST(Present, GeneratorBound) {
    Presentation p;
    p.generators = names(5);
    EXPECT_THROW(present_lattice(p), DomainError);
    for (int i = 0; i + 1 < 5; ++i)
        p.relations.push_back(parse_relation(p.generators[i] + " <= " + p.generators[i + 1], p.generators));
    auto pl = present_lattice(p, {4, true});
    EXPECT_EQ(pl.route, "models");
    EXPECT_EQ(pl.models, 6);
    EXPECT_TRUE(iso_search(pl.structure, lower_sets(chain(6))).has_value());
}

TEST(Present, EntailmentMatchesSemanticOracle) {
    std::mt19937_64 rng(21);
    int checked = 0;
    for (int i = 0; i < 40; ++i) {
        const int gens = 1 + static_cast<int>(rng() % 3);
        const Logic logic = i % 3 == 0 ? Logic::Horn : Logic::Coherent;
        Presentation p = random_presentation(rng, gens, 1 + static_cast<int>(rng() % 3), logic);
        auto pl = present_lattice(p);
        for (int q = 0; q < 6; ++q) {
            Term a = random_term(rng, gens, 2, logic == Logic::Horn);
            Term b = random_term(rng, gens, 2, logic == Logic::Horn);
            EXPECT_EQ(pl.entails(a, b), semantic_entails(p, a, b)) << presentation_string(p);
            ++checked;
        }
        for (const auto& r : p.relations) EXPECT_TRUE(pl.holds(r));
    }
    EXPECT_EQ(checked, 240);
}

TEST(Present, CongruenceAndModelRoutesAgree) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 40; ++i) {
        const int gens = static_cast<int>(rng() % 5);
        const Logic logic = i % 4 == 0 ? Logic::Horn : Logic::Coherent;
        Presentation p = random_presentation(rng, gens, static_cast<int>(rng() % 4), logic);
        auto a = present_lattice(p);
        PresentOptions semantic{-1, true};
        auto b = logic == Logic::Horn ? a : present_lattice(p, semantic);
        if (logic == Logic::Coherent) EXPECT_EQ(b.route, "models");
        EXPECT_TRUE(generated_iso(a, b)) << presentation_string(p);
    }
}

TEST(Present, ZariskiByModelsMatchesCongruence) {
    for (int n : {1, 2, 3, 4}) {
        auto p = parse_presentation(zmod_presentation(n));
        auto a = present_lattice(p);
        auto b = present_lattice(p, {0, true});
        EXPECT_TRUE(iso_search(a.structure, b.structure).has_value()) << n;
    }
    auto z6 = present_lattice(parse_presentation(zmod_presentation(6)), {4, true});
    EXPECT_EQ(z6.structure.size(), 4);
    EXPECT_TRUE(z6.entails("D(2) & D(3) = 0"));
    EXPECT_TRUE(z6.entails("D(2) | D(3) = 1"));
}

// ---------------------------------------------------------------------------
// reflections

TEST(Reflection, MeetSemilatticesAndLattices) {
    for (const Poset& p : {chain(1), chain(3), boolean(2).carrier, opposite(with_bounds(antichain(2)))}) {
        auto r = reflection_unit("mslat", p, 5);
        EXPECT_TRUE(r.unit_ok);
        EXPECT_TRUE(r.universal) << r.detail;
        EXPECT_GT(r.arrows_checked, 0);
    }
    for (const FiniteFrame& d : distributive_lattices_up_to(5)) {
        auto r = reflection_unit("dlat", d.carrier, 5);
        EXPECT_TRUE(r.universal);
        EXPECT_TRUE(iso_search(r.target, d).has_value());
    }
    EXPECT_THROW(reflection_unit("mslat", antichain(2), 4), DomainError);
    EXPECT_THROW(reflection_unit("dlat", with_bounds(antichain(3)), 4), DomainError);
}

TEST(Reflection, BooleanAdjunction) {
    for (const FiniteFrame& l : distributive_lattices_up_to(6)) {
        auto r = reflection_unit("bool", l.carrier, 8);
        EXPECT_TRUE(r.unit_ok);
        EXPECT_TRUE(r.universal) << r.detail;
        EXPECT_EQ(r.target.size(), static_cast<int>(complemented_elements(l).count()));
    }
}

TEST(Reflection, AtomicUnitIsIsoExactlyOnAtomicFrames) {
    for (const FiniteFrame& l : distributive_lattices_up_to(8)) {
        auto r = reflection_unit("atomic", l.carrier, 4);
        EXPECT_TRUE(r.unit_ok);
        EXPECT_TRUE(r.universal) << r.detail;
        const bool boolean_frame = complemented_elements(l).count() == static_cast<std::size_t>(l.size());
        EXPECT_EQ(r.detail.rfind("unit is an isomorphism", 0) == 0, boolean_frame);
    }
}

TEST(Reflection, DisjunctiveUnit) {
    for (const FiniteFrame& l : distributive_lattices_up_to(7)) {
        auto r = reflection_unit("disjunctive", l.carrier, 5);
        EXPECT_TRUE(r.unit_ok) << r.detail;
        EXPECT_TRUE(r.universal);
        EXPECT_EQ(r.detail.rfind("unit is an isomorphism", 0), 0u);
    }
}

TEST(Reflection, FiniteSpacesAreLocallyConnected) {
    // Every finite space is locally connected, so the disjunctive unit on its opens is an iso.
    for (int n = 0; n <= 3; ++n)
        for (const TopSpace& x : all_spaces(n)) {
            auto r = reflection_unit("disjunctive", open_frame(x).carrier, 2);
            EXPECT_TRUE(r.unit_ok);
            EXPECT_EQ(r.detail.rfind("unit is an isomorphism", 0), 0u);
        }
}
