#pragma once

#include "stonework/coverage.hpp"
#include "stonework/presentations.hpp"
#include "stonework/spectra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stonework {

struct FiniteCommRing {
    int n = 0;
    std::vector<int> add;  // n×n, row-major
    std::vector<int> mul;
    int zero = 0;
    int one = 0;
    std::vector<std::string> labels;

    int plus(int a, int b) const { return add[static_cast<std::size_t>(a) * n + b]; }
    int times(int a, int b) const { return mul[static_cast<std::size_t>(a) * n + b]; }
    int power(int a, int k) const;  // k ≥ 1
    std::string label(int a) const;
};

// Validates the commutative unital ring axioms on all tuples and locates 0 and 1.
FiniteCommRing make_ring(int n, std::vector<int> add, std::vector<int> mul, std::vector<std::string> labels = {});
FiniteCommRing ring_zmod(int n);
FiniteCommRing ring_product(const FiniteCommRing& a, const FiniteCommRing& b);
// "zmod:6", "zmod:2*zmod:3" (also x or × between factors).
FiniteCommRing parse_ring_spec(const std::string& spec);
std::optional<std::vector<int>> ring_iso(const FiniteCommRing& a, const FiniteCommRing& b);

Subset ideal_generated(const FiniteCommRing& r, const std::vector<int>& gens);
bool is_ideal(const FiniteCommRing& r, const Subset& s);
bool is_prime_ideal(const FiniteCommRing& r, const Subset& s);
std::vector<Subset> ring_ideals(const FiniteCommRing& r);  // numeric order
std::vector<Subset> prime_ideals(const FiniteCommRing& r);
std::string ideal_label(const FiniteCommRing& r, const Subset& ideal);  // "(g)" when principal

struct SMonoid {
    Poset order;              // a ≤ b iff a·b = a; a meet-semilattice
    std::vector<int> pi;      // ring element -> class
    std::vector<int> rep;     // class -> least representative
    std::vector<int> mul;     // class multiplication table

    int times(int x, int y) const { return mul[static_cast<std::size_t>(x) * order.n + y]; }
};

// Least monoid congruence on (A,·) identifying a with a², by pair merging.
SMonoid s_monoid(const FiniteCommRing& r);
// The same congruence as the transitive closure of R: a R b iff a = cⁿd and b = cᵐd, n,m ≥ 1.
std::vector<int> s_congruence_by_relation(const FiniteCommRing& r);

// ∅ covers π(0); {π(a_i)} covers x when each π(a_i) ≤ x and some sum of the a_i lies in x.
Coverage zariski_coverage(const FiniteCommRing& r, const SMonoid& s);
// S covers x iff aᵏ ∈ (b : π(b) ∈ S) for some a with π(a) = x and k ≥ 1.
bool topc_covers(const FiniteCommRing& r, const SMonoid& s, int x, const Subset& sieve);

// D(1) = 1, D(0) = 0, D(ab) = D(a) ∧ D(b), D(a+b) ≤ D(a) ∨ D(b).
Presentation zariski_presentation(const FiniteCommRing& r);
// D(0) = 0, D(1) = 1, D(ab) ≤ D(a) ∧ D(b), D(a+b) ≤ D(a) ∨ D(b).
Presentation op_ideal_presentation(const FiniteCommRing& r);

struct ZariskiLattice {
    FiniteFrame lattice;             // presented by generators and relations
    std::vector<int> d;              // ring element -> D(a)
    std::string route;               // how the presentation was evaluated
    FiniteFrame compact;             // compact elements of Id_C(S(A))
    std::vector<int> compact_d;      // ring element -> its principal C-ideal
    std::vector<int> iso;            // lattice -> compact
};

// Both constructions are built and matched; a mismatch throws std::logic_error.
ZariskiLattice zariski_lattice(const FiniteCommRing& r);

// Prime ideals with closed sets V(I) = {P : P ⊇ I}.
TopSpace spec_space(const FiniteCommRing& r);
// 1 ∈ S, 0 ∉ S, ab ∈ S iff a, b ∈ S, a+b ∈ S implies a ∈ S or b ∈ S. Numeric order.
std::vector<Subset> prime_filters_ring(const FiniteCommRing& r);

struct SpectraHomeomorphism {
    TopSpace subterminal;     // points: C-prime filters on S(A)
    TopSpace zariski;         // points: prime ideals
    std::vector<int> points;  // subterminal point -> prime ideal
};

// Filter F ↦ A \ π⁻¹(F); verified open for open. Failure throws std::logic_error.
SpectraHomeomorphism spectra_homeomorphism(const FiniteCommRing& r);

// ∃ k ≥ 1 with aᵏ ∈ (b_1, ..., b_r); stops at the first repeated power.
bool radical_membership(const FiniteCommRing& r, int a, const std::vector<int>& bs);
// D(a) ≤ D(b_1) ∨ ... ∨ D(b_r) in the Zariski lattice.
bool radical_membership_lattice(const ZariskiLattice& z, int a, const std::vector<int>& bs);

// Points: proper ideals, via their complements (op-ideals); sub-basis {I : a ∉ I}.
TopSpace op_ideal_space(const FiniteCommRing& r);

struct OpIdealLattice {
    PresentedLattice presented;
    FiniteFrame opens;     // open_frame(op_ideal_space)
    std::vector<int> iso;  // presented -> opens, D(a) ↦ {I : a ∉ I}
};

OpIdealLattice op_ideal_lattice(const FiniteCommRing& r);

}  // namespace stonework
