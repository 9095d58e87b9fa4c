#pragma once

#include "stonework/frame.hpp"

#include <string>
#include <vector>

namespace stonework {

// Generating families per element; each family is a subset of (c)↓.
struct Coverage {
    Preorder base;
    std::vector<std::vector<Subset>> covers;
};

// Full sets of covering sieves (down-closed subsets of (c)↓), numeric order per element.
struct GrothendieckTopology {
    Preorder base;
    std::vector<std::vector<Subset>> sieves;

    bool covers(int c, const Subset& sieve) const;
    bool operator==(const GrothendieckTopology& o) const { return sieves == o.sieves; }
};

Coverage make_coverage(const Preorder& base, std::vector<std::vector<Subset>> covers);

// kind: trivial | canonical | coherent | disjunctive | atomic | supercompact | directed | k:<n>
Coverage named_coverage(const Preorder& p, const std::string& kind);

// Structural preconditions used by named_coverage; `missing` names the failed property.
StructureCheck check_meet_semilattice(const Preorder& p);  // binary meets and a top
StructureCheck check_disjunctively_distributive(const Preorder& p);
StructureCheck check_weakly_atomic(const Preorder& p);
StructureCheck check_weakly_supercompact(const Preorder& p);
std::vector<int> supercompact_elements(const Preorder& p);  // c ∈ S whenever sup S = c

// Least lower set containing `s` closed under the coverage's families and their
// pullbacks; these are the ideals of saturate(cov).
Subset coverage_closure(const Coverage& cov, const Subset& s);
bool is_coverage_ideal(const Coverage& cov, const Subset& s);
std::vector<Subset> coverage_ideals(const Coverage& cov);

GrothendieckTopology saturate(const Coverage& cov);
// Literal fixpoint of the maximality, stability and transitivity rules (small bases only).
GrothendieckTopology saturate_by_rules(const Coverage& cov);
Coverage as_coverage(const GrothendieckTopology& j);
GrothendieckTopology trivial_topology(const Preorder& p);

// Empty when the axioms hold, otherwise a description of the first failure.
std::string topology_axiom_violation(const GrothendieckTopology& j);

Subset j_closure(const GrothendieckTopology& j, const Subset& lower);
bool is_j_ideal(const GrothendieckTopology& j, const Subset& s);
std::vector<Subset> j_ideals(const GrothendieckTopology& j);
FiniteFrame ideal_frame(const GrothendieckTopology& j);
Subset principal_j_ideal(const GrothendieckTopology& j, int c);
bool is_subcanonical(const GrothendieckTopology& j);

// Every Grothendieck topology on p, found by saturating one extra sieve at a time
// from the trivial topology. Ordered by their sieve lists.
std::vector<GrothendieckTopology> all_topologies(const Preorder& p);

struct InducedSite {
    std::vector<int> embedding;  // positions of D inside the base
    GrothendieckTopology topology;
};

// Density: every c has a covering sieve generated by elements of D. Throws with a witness.
InducedSite induced_topology(const GrothendieckTopology& j, const std::vector<int>& dense);
Coverage induced_coverage(const GrothendieckTopology& j, const std::vector<int>& dense);

struct ComparisonIso {
    FrameHom phi;  // I ↦ I ∩ D
    FrameHom psi;  // J-closure of the generated lower set
};

ComparisonIso comparison_iso(const GrothendieckTopology& j, const std::vector<int>& dense);

// f must be a surjective frame hom out of ideal_frame(j). The result is validated by
// rebuilding its ideal frame and matching it against f's codomain.
GrothendieckTopology subtopology_from_surjection(const GrothendieckTopology& j, const FrameHom& f);

bool topologies_equal_by_ideals(const GrothendieckTopology& a, const GrothendieckTopology& b);

}  // namespace stonework
