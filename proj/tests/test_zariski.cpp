#include "stonework/zariski.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

using namespace stonework;

namespace {

std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int p = 2; p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    return out;
}

bool is_prime(int p) { return p >= 2 && prime_divisors(p) == std::vector<int>{p}; }

// Which prime divisors of n divide a.
unsigned signature(int n, int a) {
    unsigned m = 0;
    const auto ps = prime_divisors(n);
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (a % ps[i] == 0) m |= 1u << i;
    return m;
}

// a ∈ rad(bs) in Z/n iff every prime of n dividing all of bs divides a.
bool radical_oracle(int n, int a, const std::vector<int>& bs) {
    for (int p : prime_divisors(n)) {
        bool all = true;
        for (int b : bs) all = all && b % p == 0;
        if (all && a % p != 0) return false;
    }
    return true;
}

int divisor_count(int n) {
    int c = 0;
    for (int d = 1; d <= n; ++d) c += n % d == 0;
    return c;
}

bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if ((a[i] == a[j]) != (b[i] == b[j])) return false;
    return true;
}

// Rings Z/p1 × ... × Z/pk with k ≥ 2 and at most `bound` elements.
std::vector<std::vector<int>> prime_products(int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int min_p, int size) {
        if (cur.size() >= 2) out.push_back(cur);
        for (int p = min_p; size * p <= bound; ++p) {
            if (!is_prime(p)) continue;
            cur.push_back(p);
            go(p, size * p);
            cur.pop_back();
        }
    };
    go(2, 1);
    return out;
}

FiniteCommRing product_of(const std::vector<int>& ps) {
    FiniteCommRing r = ring_zmod(ps[0]);
    for (std::size_t i = 1; i < ps.size(); ++i) r = ring_product(r, ring_zmod(ps[i]));
    return r;
}

}  // namespace

TEST(Rings, ZmodAndProducts) {
    const auto z6 = ring_zmod(6);
    EXPECT_EQ(z6.zero, 0);
    EXPECT_EQ(z6.one, 1);
    EXPECT_EQ(z6.times(4, 5), 2);
    const auto p = ring_product(ring_zmod(2), ring_zmod(3));
    EXPECT_EQ(p.n, 6);
    EXPECT_EQ(p.label(p.one), "(1,1)");
    EXPECT_TRUE(ring_iso(p, z6).has_value());
    EXPECT_FALSE(ring_iso(ring_product(ring_zmod(2), ring_zmod(2)), ring_zmod(4)).has_value());
    EXPECT_EQ(parse_ring_spec("zmod:2*zmod:3").n, 6);
    EXPECT_EQ(parse_ring_spec("zmod:2 x zmod:2").n, 4);
    EXPECT_THROW(parse_ring_spec("poly:3"), DomainError);
    EXPECT_THROW(parse_ring_spec("zmod:0"), DomainError);
}

TEST(Rings, TableValidation) {
    // Z/2 with a broken multiplication (1·1 = 0).
    EXPECT_THROW(make_ring(2, {0, 1, 1, 0}, {0, 0, 0, 0}), DomainError);
    EXPECT_THROW(make_ring(2, {0, 1, 1}, {0, 0, 0, 1}), DomainError);
    EXPECT_THROW(make_ring(2, {0, 1, 1, 0}, {0, 0, 1, 1}), DomainError);  // not commutative
    EXPECT_NO_THROW(make_ring(2, {0, 1, 1, 0}, {0, 0, 0, 1}));
}

TEST(Rings, IdealsMatchDivisors) {
    for (int n = 1; n <= 60; ++n) {
        const auto r = ring_zmod(n);
        EXPECT_EQ(static_cast<int>(ring_ideals(r).size()), divisor_count(n)) << n;
        const auto primes = prime_ideals(r);
        ASSERT_EQ(primes.size(), prime_divisors(n).size()) << n;
        std::vector<Subset> expected;
        for (int q : prime_divisors(n)) expected.push_back(ideal_generated(r, {q % n}));
        normalize_family(expected);
        EXPECT_EQ(primes, expected) << n;
    }
}

TEST(Rings, SpecExamples) {
    auto labels = [](const TopSpace& x) {
        auto l = x.labels;
        std::sort(l.begin(), l.end());
        return l;
    };
    EXPECT_EQ(labels(spec_space(ring_zmod(6))), (std::vector<std::string>{"(2)", "(3)"}));
    EXPECT_TRUE(is_discrete(spec_space(ring_zmod(6))));
    EXPECT_EQ(labels(spec_space(ring_zmod(4))), std::vector<std::string>{"(2)"});
    for (int p : {2, 3, 5, 7, 11}) EXPECT_EQ(labels(spec_space(ring_zmod(p))), std::vector<std::string>{"(0)"});
    EXPECT_EQ(spec_space(ring_zmod(1)).n, 0);
}

TEST(SMonoid, PairMergingMatchesRelationClosure) {
    for (int n = 1; n <= 60; ++n) {
        const auto r = ring_zmod(n);
        const auto s = s_monoid(r);
        EXPECT_TRUE(same_partition(s.pi, s_congruence_by_relation(r))) << n;
        std::vector<int> sig;
        for (int a = 0; a < n; ++a) sig.push_back(static_cast<int>(signature(n, a)));
        EXPECT_TRUE(same_partition(s.pi, sig)) << n;
        EXPECT_EQ(s.order.n, n == 1 ? 1 : 1 << prime_divisors(n).size());
    }
    for (const auto& ps : prime_products(36)) {
        const auto r = product_of(ps);
        EXPECT_TRUE(same_partition(s_monoid(r).pi, s_congruence_by_relation(r)));
    }
}

TEST(SMonoid, IsAMeetSemilattice) {
    const auto s = s_monoid(ring_zmod(12));
    EXPECT_TRUE(check_meet_semilattice(s.order).ok);
    for (int x = 0; x < s.order.n; ++x) EXPECT_EQ(s.times(x, x), x);
}

TEST(Coverage, Examples) {
    const auto r2 = ring_zmod(2);
    const auto s2 = s_monoid(r2);
    const auto c2 = zariski_coverage(r2, s2);
    EXPECT_EQ(c2.covers[s2.pi[0]], std::vector<Subset>{s2.order.none()});

    const auto r = ring_zmod(6);
    const auto s = s_monoid(r);
    const auto j = saturate(zariski_coverage(r, s));
    const Subset sieve = s.order.down_closure(subset_of(s.order.n, {s.pi[2], s.pi[3]}));
    EXPECT_EQ(s.pi[5], s.pi[1]);
    EXPECT_TRUE(j.covers(s.pi[1], sieve));
    EXPECT_FALSE(j.covers(s.pi[1], s.order.down[s.pi[2]]));
}

TEST(Coverage, SaturationMatchesPowerCriterion) {
    for (int n = 1; n <= 30; ++n) {
        const auto r = ring_zmod(n);
        const auto s = s_monoid(r);
        const auto j = saturate(zariski_coverage(r, s));
        for (int x = 0; x < s.order.n; ++x)
            for (const auto& sieve : lower_sets_within(s.order, s.order.down[x]))
                EXPECT_EQ(j.covers(x, sieve), topc_covers(r, s, x, sieve)) << "Z/" << n << " x=" << x;
    }
}

TEST(Lattice, Examples) {
    const auto z4 = zariski_lattice(ring_zmod(4));
    EXPECT_EQ(z4.lattice.size(), 2);
    EXPECT_EQ(z4.d[2], z4.lattice.bot);
    EXPECT_EQ(z4.d[3], z4.lattice.top);

    const auto z6 = zariski_lattice(ring_zmod(6));
    EXPECT_EQ(z6.lattice.size(), 4);
    EXPECT_EQ(complemented_elements(z6.lattice).count(), 4u);
    EXPECT_EQ(z6.lattice.meet(z6.d[2], z6.d[3]), z6.lattice.bot);
    EXPECT_EQ(z6.lattice.join(z6.d[2], z6.d[3]), z6.lattice.top);

    EXPECT_EQ(zariski_lattice(ring_zmod(1)).lattice.size(), 1);
}

TEST(Lattice, TwoConstructionsAgree) {
    for (int n = 1; n <= 30; ++n) {
        const auto z = zariski_lattice(ring_zmod(n));  // throws on mismatch
        EXPECT_EQ(z.lattice.size(), n == 1 ? 1 : 1 << prime_divisors(n).size()) << n;
        for (int a = 0; a < n; ++a) EXPECT_EQ(z.iso[z.d[a]], z.compact_d[a]);
    }
    for (const auto& ps : prime_products(12)) EXPECT_NO_THROW(zariski_lattice(product_of(ps)));
}

TEST(Spectra, PrimeFiltersAreComplementsOfPrimes) {
    for (int n = 1; n <= 60; ++n) {
        const auto r = ring_zmod(n);
        std::vector<Subset> complements;
        for (auto p : prime_ideals(r)) complements.push_back(~p);
        normalize_family(complements);
        EXPECT_EQ(prime_filters_ring(r), complements) << n;
    }
}

TEST(Spectra, Homeomorphism) {
    const auto h6 = spectra_homeomorphism(ring_zmod(6));
    EXPECT_EQ(h6.points.size(), 2u);
    EXPECT_EQ(spectra_homeomorphism(ring_zmod(4)).points.size(), 1u);
    const auto h12 = spectra_homeomorphism(ring_zmod(12));
    EXPECT_EQ(h12.zariski.labels, (std::vector<std::string>{"(3)", "(2)"}));  // numeric order of the ideals
    for (int n = 1; n <= 60; ++n) {
        const auto h = spectra_homeomorphism(ring_zmod(n));
        EXPECT_EQ(h.points.size(), prime_divisors(n).size()) << n;
        EXPECT_TRUE(homeomorphism(h.subterminal, h.zariski).has_value()) << n;
    }
}

TEST(Spectra, HomeomorphismOnPrimeProducts) {
    for (const auto& ps : prime_products(36)) {
        const auto h = spectra_homeomorphism(product_of(ps));
        EXPECT_EQ(h.points.size(), ps.size());
        EXPECT_TRUE(is_discrete(h.zariski));
    }
}

TEST(Radical, Examples) {
    const auto r = ring_zmod(12);
    EXPECT_TRUE(radical_membership(r, 2, {4, 6}));
    EXPECT_FALSE(radical_membership(r, 1, {}));
    EXPECT_TRUE(radical_membership(r, 0, {}));
    EXPECT_TRUE(radical_membership(r, 0, {5}));
    EXPECT_FALSE(radical_membership(r, 2, {3}));
    const auto z = zariski_lattice(r);
    EXPECT_TRUE(radical_membership_lattice(z, 2, {4, 6}));
    EXPECT_FALSE(radical_membership_lattice(z, 1, {}));
}

TEST(Radical, RingSideMatchesLatticeSide) {
    for (int n = 1; n <= 30; ++n) {
        const auto r = ring_zmod(n);
        const auto z = zariski_lattice(r);
        for (int a = 0; a < n; ++a) {
            const bool none = radical_membership(r, a, {});
            EXPECT_EQ(none, radical_membership_lattice(z, a, {}));
            EXPECT_EQ(none, radical_oracle(n, a, {}));
            for (int b1 = 0; b1 < n; ++b1)
                for (int b2 = b1; b2 < n; ++b2) {
                    const std::vector<int> bs{b1, b2};
                    const bool ring = radical_membership(r, a, bs);
                    ASSERT_EQ(ring, radical_membership_lattice(z, a, bs)) << n << " " << a << " " << b1 << " " << b2;
                    ASSERT_EQ(ring, radical_oracle(n, a, bs)) << n << " " << a << " " << b1 << " " << b2;
                }
        }
    }
}

TEST(OpIdeals, Examples) {
    const auto x4 = op_ideal_space(ring_zmod(4));
    EXPECT_EQ(x4.labels, (std::vector<std::string>{"(0)", "(2)"}));
    for (int p : {2, 3, 5, 7}) EXPECT_EQ(op_ideal_space(ring_zmod(p)).labels, std::vector<std::string>{"(0)"});
    EXPECT_EQ(op_ideal_space(ring_zmod(1)).n, 0);
}

TEST(OpIdeals, PresentedLatticeIsTheOpenFrame) {
    for (int n = 1; n <= 16; ++n) {
        const auto r = ring_zmod(n);
        const auto x = op_ideal_space(r);
        EXPECT_EQ(x.n, divisor_count(n) - 1) << n;
        const auto o = op_ideal_lattice(r);  // throws on mismatch
        EXPECT_EQ(o.presented.structure.size(), o.opens.size()) << n;
    }
}

TEST(OpIdeals, ElementalTopologyIsTheSpecializationOrderOfInclusion) {
    // For finitely many ideals the sub-basis {I : a ∉ I} generates the opens that are
    // down-closed under inclusion of ideals.
    const auto r = ring_zmod(12);
    const auto x = op_ideal_space(r);
    const auto spec = specialization_order(x);
    std::vector<Subset> proper;
    for (const auto& i : ring_ideals(r))
        if (!i[r.one]) proper.push_back(i);
    for (int a = 0; a < x.n; ++a)
        for (int b = 0; b < x.n; ++b) EXPECT_EQ(spec.leq(a, b), proper[b].is_subset_of(proper[a]));
}
