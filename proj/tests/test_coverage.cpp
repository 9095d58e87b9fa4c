#include "oracles.hpp"
#include "stonework/corpus.hpp"
#include "stonework/coverage.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace stonework;

namespace stonework {
void PrintTo(const GrothendieckTopology& j, std::ostream* os) {
    for (int c = 0; c < j.base.n; ++c) {
        *os << j.base.label(c) << ":";
        for (const Subset& s : j.sieves[c]) *os << " " << subset_string(s);
        *os << "; ";
    }
}
}  // namespace stonework

namespace {

Poset diamond() { return with_bounds(antichain(2)); }  // 0 bot, 1 a, 2 b, 3 top

Subset set(int n, std::vector<int> xs) { return subset_of(n, xs); }

oracle::Topology to_oracle(const GrothendieckTopology& j) {
    oracle::Topology t(j.base.n);
    for (int c = 0; c < j.base.n; ++c) {
        for (const Subset& s : j.sieves[c]) t[c].push_back(oracle::bits(s));
        std::sort(t[c].begin(), t[c].end());
    }
    return t;
}

Coverage random_coverage(const Poset& p, std::mt19937_64& rng, double density = 0.3) {
    std::bernoulli_distribution coin(density);
    std::vector<std::vector<Subset>> covers(p.n);
    for (int c = 0; c < p.n; ++c) {
        auto below = members(p.down[c]);
        for (int k = 0; k < 2; ++k) {
            if (!coin(rng)) continue;
            Subset s(p.n);
            for (int x : below)
                if (x != c && coin(rng)) s.set(x);
            covers[c].push_back(s);
        }
    }
    return make_coverage(p, covers);
}

}  // namespace

TEST(NamedCoverage, CoherentOnBooleanCoversTopByAtoms) {
    auto cov = named_coverage(diamond(), "coherent");
    const auto& top = cov.covers[3];
    EXPECT_TRUE(std::find(top.begin(), top.end(), set(4, {1, 2})) != top.end());
    EXPECT_TRUE(std::find(top.begin(), top.end(), set(4, {3})) != top.end());
    // The empty family joins to the bottom.
    EXPECT_TRUE(std::find(cov.covers[0].begin(), cov.covers[0].end(), Subset(4)) != cov.covers[0].end());
}

TEST(NamedCoverage, TrivialIsMaximalSieveOnly) {
    for (const Poset& p : posets_up_to(4)) {
        auto j = saturate(named_coverage(p, "trivial"));
        for (int c = 0; c < p.n; ++c) {
            ASSERT_EQ(j.sieves[c].size(), 1u);
            EXPECT_EQ(j.sieves[c][0], p.down[c]);
        }
        EXPECT_EQ(j, trivial_topology(p));
    }
}

TEST(NamedCoverage, DirectedSaturatesToTrivial) {
    for (const auto& l : lattices_up_to(6)) {
        auto j = saturate(named_coverage(l.carrier, "directed"));
        EXPECT_EQ(j, trivial_topology(l.carrier));
    }
}

TEST(NamedCoverage, StructureChecksReportMissingProperty) {
    Poset m3 = with_bounds(antichain(3));
    try {
        named_coverage(m3, "coherent");
        FAIL() << "M3 is not distributive";
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("distributiv"), std::string::npos);
    }
    try {
        named_coverage(antichain(2), "k:2");
        FAIL() << "an antichain has no top";
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("top"), std::string::npos);
    }
    EXPECT_THROW(named_coverage(chain(2), "k:1"), DomainError);
    EXPECT_THROW(named_coverage(chain(2), "bogus"), DomainError);
}

TEST(NamedCoverage, DisjunctiveOnChainIsTrivialAboveBottom) {
    for (int n = 1; n <= 5; ++n) {
        auto j = saturate(named_coverage(chain(n), "disjunctive"));
        auto t = trivial_topology(chain(n));
        // The empty family is disjoint and joins to 0, so it also covers the bottom.
        t.sieves[0].insert(t.sieves[0].begin(), Subset(n));
        EXPECT_EQ(j, t) << "chain of " << n;
    }
}

TEST(NamedCoverage, DisjunctiveOnBooleanIsCoherent) {
    for (int k = 0; k <= 3; ++k) {
        Poset b = lower_sets(antichain(k)).carrier;
        EXPECT_EQ(saturate(named_coverage(b, "disjunctive")), saturate(named_coverage(b, "coherent")));
    }
}

TEST(NamedCoverage, KCoveringBoundsFamilySize) {
    Poset b8 = lower_sets(antichain(3)).carrier;
    auto k3 = named_coverage(b8, "k:3");
    for (const auto& fams : k3.covers)
        for (const Subset& f : fams) EXPECT_LT(f.count(), 3u);
    // With pairs allowed the three atoms still cover the top after saturation.
    auto j = saturate(k3);
    EXPECT_EQ(j, saturate(named_coverage(b8, "coherent")));
}

TEST(Saturate, CoherentBooleanCoversTopBySieve) {
    auto j = saturate(named_coverage(diamond(), "coherent"));
    EXPECT_TRUE(j.covers(3, set(4, {0, 1, 2})));
    EXPECT_FALSE(j.covers(3, set(4, {0, 1})));
    EXPECT_TRUE(j.covers(0, Subset(4)));
}

TEST(Saturate, CanonicalOnFramesIsJoinCondition) {
    for (const auto& l : distributive_lattices_up_to(7)) {
        auto j = saturate(named_coverage(l.carrier, "canonical"));
        auto r = oracle::from(l.carrier);
        for (int c = 0; c < l.size(); ++c) {
            std::vector<oracle::Mask> expected;
            for (auto s : oracle::lower_sets_in(r, r.down(c)))
                if (oracle::sup(r, s) == c) expected.push_back(s);
            EXPECT_EQ(to_oracle(j)[c], expected);
        }
    }
}

TEST(Saturate, LeastTopologyAgainstBruteForce) {
    std::mt19937_64 rng(19);
    for (const Poset& p : posets_up_to(4)) {
        auto r = oracle::from(p);
        for (int trial = 0; trial < 4; ++trial) {
            Coverage cov = random_coverage(p, rng);
            std::vector<std::vector<oracle::Mask>> fams(p.n);
            for (int c = 0; c < p.n; ++c)
                for (const Subset& s : cov.covers[c]) fams[c].push_back(oracle::bits(s));
            auto j = saturate(cov);
            EXPECT_EQ(to_oracle(j), oracle::least_topology(r, fams));
            EXPECT_EQ(j, saturate_by_rules(cov));
            EXPECT_EQ(topology_axiom_violation(j), "");
        }
    }
}

TEST(Topologies, EnumerationMatchesBruteForce) {
    for (const Poset& p : posets_up_to(4)) {
        auto mine = all_topologies(p);
        auto expected = oracle::all_topologies(oracle::from(p));
        std::vector<oracle::Topology> got;
        for (const auto& j : mine) got.push_back(to_oracle(j));
        std::sort(got.begin(), got.end());
        ASSERT_EQ(got, expected) << hasse_dot(p);
    }
}

TEST(Topologies, EmptyPosetHasExactlyOne) {
    auto ts = all_topologies(antichain(0));
    ASSERT_EQ(ts.size(), 1u);
    EXPECT_EQ(ideal_frame(ts[0]).size(), 1);
}

TEST(JClosure, Examples) {
    Poset c2 = chain(2);
    auto triv = trivial_topology(c2);
    EXPECT_EQ(j_closure(triv, Subset(2)), Subset(2));
    auto coh = saturate(named_coverage(diamond(), "coherent"));
    EXPECT_EQ(j_closure(coh, set(4, {0, 1, 2})), full_set(4));
    for (const Subset& i : j_ideals(coh)) EXPECT_EQ(j_closure(coh, i), i);
}

TEST(JClosure, ClosureOperatorOnRandomSites) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        Poset p = random_poset(1 + trial % 6, 0.4, rng);
        auto j = saturate(random_coverage(p, rng));
        auto r = oracle::from(p);
        auto lows = all_lower_sets(p);
        for (const Subset& a : lows) {
            Subset ca = j_closure(j, a);
            EXPECT_TRUE(a.is_subset_of(ca));
            EXPECT_EQ(j_closure(j, ca), ca);
            EXPECT_EQ(oracle::bits(ca), oracle::closure_of(r, to_oracle(j), oracle::bits(a)));
            for (const Subset& b : lows)
                if (a.is_subset_of(b)) EXPECT_TRUE(ca.is_subset_of(j_closure(j, b)));
        }
    }
}

TEST(IdealFrame, Examples) {
    EXPECT_TRUE(iso_search(ideal_frame(trivial_topology(chain(2))).carrier, chain(3)).has_value());
    FiniteFrame b = ideal_frame(trivial_topology(antichain(2)));
    EXPECT_TRUE(iso_search(b.carrier, diamond()).has_value());
    for (const auto& d : distributive_lattices_up_to(8)) {
        FiniteFrame l = ideal_frame(saturate(named_coverage(d.carrier, "coherent")));
        EXPECT_TRUE(iso_search(l, d).has_value());
        EXPECT_NO_THROW(verify_frame(l));
    }
}

TEST(IdealFrame, IdealsMatchLiteralDefinition) {
    for (const Poset& p : posets_up_to(3))
        for (const auto& j : all_topologies(p)) {
            std::vector<oracle::Mask> got;
            for (const Subset& s : j_ideals(j)) got.push_back(oracle::bits(s));
            EXPECT_EQ(got, oracle::ideals(oracle::from(p), to_oracle(j)));
            EXPECT_NO_THROW(verify_frame(ideal_frame(j)));
        }
}

TEST(PrincipalIdeal, TrivialAndSubcanonical) {
    for (const Poset& p : posets_up_to(4)) {
        auto triv = trivial_topology(p);
        for (int c = 0; c < p.n; ++c) EXPECT_EQ(principal_j_ideal(triv, c), p.down[c]);
        for (const auto& j : all_topologies(p)) {
            if (!is_subcanonical(j)) continue;
            for (int c = 0; c < p.n; ++c) EXPECT_EQ(principal_j_ideal(j, c), p.down[c]);
            // c ↦ (c)↓_J is an order embedding.
            for (int a = 0; a < p.n; ++a)
                for (int b = 0; b < p.n; ++b)
                    EXPECT_EQ(p.leq(a, b), principal_j_ideal(j, a).is_subset_of(principal_j_ideal(j, b)));
        }
    }
}

TEST(PrincipalIdeal, EmptyCoverOfNonBottom) {
    Poset c3 = chain(3);
    std::vector<std::vector<Subset>> covers(3);
    covers[1].push_back(Subset(3));  // ∅ covers the middle element
    auto j = saturate(make_coverage(c3, covers));
    EXPECT_FALSE(is_subcanonical(j));
    auto r = oracle::from(c3);
    for (int c = 0; c < 3; ++c)
        EXPECT_EQ(oracle::bits(principal_j_ideal(j, c)), oracle::closure_of(r, to_oracle(j), r.down(c)));
    EXPECT_EQ(principal_j_ideal(j, 0), set(3, {0, 1}));
    EXPECT_EQ(principal_j_ideal(j, 2), full_set(3));
}

TEST(Subcanonical, NamedTopologies) {
    for (const auto& d : distributive_lattices_up_to(8)) {
        EXPECT_TRUE(is_subcanonical(saturate(named_coverage(d.carrier, "coherent"))));
        EXPECT_TRUE(is_subcanonical(trivial_topology(d.carrier)));
    }
}

TEST(UniqueTopology, IdealsDetermineTopologyExhaustively) {
    for (const Poset& p : posets_up_to(4)) {
        auto ts = all_topologies(p);
        std::vector<std::vector<Subset>> ideals;
        for (const auto& j : ts) ideals.push_back(j_ideals(j));
        for (std::size_t a = 0; a < ts.size(); ++a)
            for (std::size_t b = 0; b < ts.size(); ++b) EXPECT_EQ(ideals[a] == ideals[b], a == b);
        EXPECT_TRUE(topologies_equal_by_ideals(ts.front(), ts.front()));
    }
}

TEST(UniqueTopology, Examples) {
    Poset d = diamond();
    auto triv = trivial_topology(d);
    auto coh = saturate(named_coverage(d, "coherent"));
    EXPECT_FALSE(topologies_equal_by_ideals(triv, coh));
    EXPECT_TRUE(is_j_ideal(triv, set(4, {0, 1, 2})));
    EXPECT_FALSE(is_j_ideal(coh, set(4, {0, 1, 2})));
    // Same topology from two different generating presentations.
    auto again = saturate(make_coverage(d, {{Subset(4)}, {}, {}, {set(4, {1, 2})}}));
    EXPECT_TRUE(topologies_equal_by_ideals(coh, again));
    EXPECT_EQ(coh, again);
}

TEST(Comparison, WholeBaseIsIdentity) {
    for (const auto& d : distributive_lattices_up_to(6)) {
        auto j = saturate(named_coverage(d.carrier, "coherent"));
        std::vector<int> all(d.size());
        std::iota(all.begin(), all.end(), 0);
        auto iso = comparison_iso(j, all);
        for (int i = 0; i < iso.phi.dom.size(); ++i) {
            EXPECT_EQ(iso.phi.f[i], i);
            EXPECT_EQ(iso.psi.f[i], i);
        }
    }
}

TEST(Comparison, BasesOfFiniteFrames) {
    std::mt19937_64 rng(29);
    for (const auto& l : distributive_lattices_up_to(8)) {
        auto j = saturate(named_coverage(l.carrier, "canonical"));
        auto base = join_irreducibles(l);
        std::vector<std::vector<int>> candidates{base};
        std::vector<int> extra = base;
        for (int x = 0; x < l.size(); ++x)
            if (std::find(base.begin(), base.end(), x) == base.end() && rng() % 2) extra.push_back(x);
        std::sort(extra.begin(), extra.end());
        candidates.push_back(extra);
        for (const auto& dense : candidates) {
            auto iso = comparison_iso(j, dense);
            EXPECT_TRUE(is_frame_hom(iso.phi));
            EXPECT_TRUE(is_frame_hom(iso.psi));
            for (int i = 0; i < iso.phi.dom.size(); ++i) EXPECT_EQ(iso.psi.f[iso.phi.f[i]], i);
            for (int i = 0; i < iso.psi.dom.size(); ++i) EXPECT_EQ(iso.phi.f[iso.psi.f[i]], i);
            EXPECT_TRUE(iso_search(iso.psi.dom, l).has_value());
        }
    }
}

TEST(Comparison, AtomsOfBooleanFrame) {
    for (int k = 1; k <= 3; ++k) {
        FiniteFrame b = lower_sets(antichain(k));
        auto j = saturate(named_coverage(b.carrier, "canonical"));
        auto site = induced_topology(j, atoms(b));
        EXPECT_EQ(site.topology, trivial_topology(site.topology.base));
        EXPECT_EQ(ideal_frame(site.topology).size(), 1 << k);
    }
}

TEST(Comparison, NonDenseReportsWitness) {
    auto j = trivial_topology(chain(2));
    try {
        comparison_iso(j, {0});
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("1"), std::string::npos);
    }
}

TEST(Subtopology, IdentityGivesSameTopology) {
    auto j = saturate(named_coverage(diamond(), "coherent"));
    FiniteFrame l = ideal_frame(j);
    EXPECT_EQ(subtopology_from_surjection(j, identity_hom(l)), j);
}

TEST(Subtopology, CollapsingChain) {
    auto j = trivial_topology(chain(2));
    FiniteFrame l = ideal_frame(j);  // ∅ < {0} < {0,1}
    FiniteFrame two = lower_sets(chain(1));
    FrameHom f{l, two, {0, 1, 1}};
    auto jp = subtopology_from_surjection(j, f);
    EXPECT_TRUE(jp.covers(1, set(2, {0})));
    EXPECT_FALSE(jp.covers(0, Subset(2)));
    // Agrees with the brute-force search over topologies containing J.
    auto r = oracle::from(chain(2));
    int matches = 0;
    for (const auto& t : oracle::all_topologies(r)) {
        auto ideals = oracle::ideals(r, t);
        if (ideals.size() == 2 && t == to_oracle(jp)) ++matches;
    }
    EXPECT_EQ(matches, 1);
}

TEST(Subtopology, TerminalFrameMakesEverythingCover) {
    auto j = trivial_topology(chain(3));
    FiniteFrame l = ideal_frame(j);
    FiniteFrame one = lower_sets(antichain(0));
    FrameHom f{l, one, std::vector<int>(l.size(), 0)};
    auto jp = subtopology_from_surjection(j, f);
    for (int c = 0; c < 3; ++c) EXPECT_TRUE(jp.covers(c, Subset(3)));
}

TEST(Subtopology, EverySurjectionOnSmallSites) {
    auto targets = distributive_lattices_up_to(5);
    for (const Poset& p : posets_up_to(3))
        for (const auto& j : all_topologies(p)) {
            FiniteFrame l = ideal_frame(j);
            for (const auto& t : targets)
                for (const auto& f : enumerate_homs(l, t)) {
                    FrameHom h{l, t, f};
                    if (!is_surjective(h)) {
                        EXPECT_THROW(subtopology_from_surjection(j, h), DomainError);
                        continue;
                    }
                    auto jp = subtopology_from_surjection(j, h);
                    for (int c = 0; c < p.n; ++c)
                        for (const Subset& s : j.sieves[c]) EXPECT_TRUE(jp.covers(c, s));
                    EXPECT_TRUE(iso_search(ideal_frame(jp), t).has_value());
                }
        }
}
