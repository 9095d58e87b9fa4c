#pragma once

#include "stonework/coverage.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stonework {

enum class CompactTag {
    All,
    Singleton,
    Finite,
    CardinalityLT,
    FiniteDisjoint,
    Disjoint,
    AtomicFinite,
    Atomic,
    SupercompactFinite,
    Supercompact,
    Directed,
};

struct CompactnessInvariant {
    CompactTag tag = CompactTag::Finite;
    int k = 0;  // only for CardinalityLT
};

// all | singleton | finite | lt:<k> | finite-disjoint | disjoint | atomic-finite | atomic |
// supercompact-finite | supercompact | directed
CompactnessInvariant parse_invariant(const std::string& name);
std::string invariant_name(const CompactnessInvariant& c);
std::vector<CompactnessInvariant> builtin_invariants(int max_k = 4);

// The predicate C itself on a finite family of elements of l.
bool family_satisfies(const FiniteFrame& l, const CompactnessInvariant& c, const Subset& family);
// Every covering family of x has a refinement (or subcover, per tag) satisfying C.
bool is_c_compact(const FiniteFrame& l, const CompactnessInvariant& c, int x);

struct CompactPart {
    Poset poset;                // induced order
    std::vector<int> elements;  // positions in the frame
};

CompactPart c_compact_elements(const FiniteFrame& l, const CompactnessInvariant& c);
CompactPart recover_structure(const FiniteFrame& l, const CompactnessInvariant& c);
// Arrow action of the inverse functor: restriction of h to C-compact elements.
MonotoneMap restrict_to_compact(const FrameHom& h, const CompactnessInvariant& c);

bool multicomposition_check(const FiniteFrame& l, const CompactnessInvariant& c, const Subset& family);

// I ↦ K-closure of the lower set generated by f(I), between the ideal frames.
// Throws with a witness when f is not flat or not cover-preserving.
FrameHom a_on_map(const MonotoneMap& f, const GrothendieckTopology& j, const GrothendieckTopology& k);
std::string cover_preservation_violation(const MonotoneMap& f, const GrothendieckTopology& j,
                                         const GrothendieckTopology& k);

// Preimage, lower_sets(cod) -> lower_sets(dom).
FrameHom b_on_map(const MonotoneMap& f);

struct Adjoint {
    std::optional<std::vector<int>> map;
    std::string reason;  // why no adjoint exists
};

// Left adjoint b ↦ ∧{a : b ≤ h(a)} when h preserves all meets; unit and counit are verified.
Adjoint left_adjoint(const FrameHom& h);
// For h : lower_sets(Q) -> lower_sets(P), the monotone g : P -> Q with h = b_on_map(g).
std::optional<MonotoneMap> recover_monotone(const FrameHom& h, const Poset& p, const Poset& q);

// kind: atoms | join-irreducible | supercompact | indecomposable | directedly-irreducible
Subset irreducible_elements(const FiniteFrame& l, const std::string& kind);

struct DualityReport {
    std::string kind;
    Poset original;
    FiniteFrame frame;          // locale side
    Poset dual;                 // object produced by the inverse functor side
    Poset recovered;            // rebuilt from the dual side
    std::vector<int> witness;   // original -> recovered
    bool ok = false;
};

// kind: stone | birkhoff | alexandrov | lindenbaum | mslat | mslatstar | atomdlat | disjunctive
DualityReport check_duality(const std::string& kind, const Poset& x);
std::vector<std::string> duality_kinds();

}  // namespace stonework
