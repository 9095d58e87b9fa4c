#pragma once

#include "stonework/coverage.hpp"
#include "stonework/dsl.hpp"

#include <string>
#include <vector>

namespace stonework {

// A monotone assignment from a site into a finite frame.
struct FilteringMap {
    GrothendieckTopology site;
    FiniteFrame cod;
    std::vector<int> f;
};

// Empty when f is J-filtering: ⋁f(c) = 1, f(c)∧f(c') = ⋁{f(b) : b ≤ c, c'}, and
// every covering sieve S on c has f(c) ≤ ⋁f(S). Otherwise names the failed clause.
std::string filtering_violation(const FilteringMap& m);
bool is_j_filtering(const FilteringMap& m);

// c ↦ the J-ideal generated by c, into ideal_frame(j).
FilteringMap eta_map(const GrothendieckTopology& j);

// I ↦ ⋁_{c∈I} f(c) out of ideal_frame(site); throws DomainError unless f is filtering.
FrameHom extend_filtering(const FilteringMap& m);

// P_fin(A) under reverse inclusion. Element i is the subset with bit mask i.
Poset free_meet_semilattice(const std::vector<std::string>& generators);

struct FreeFrame {
    FiniteFrame frame;
    std::vector<int> eta;  // generator (or element of A) -> frame element
};

// Upper sets of P_fin(A) under inclusion; eta(a) = {U : a ∈ U}.
FreeFrame free_frame_on_set(const std::vector<std::string>& generators);

// The coverage on P_fin(A)^op whose ideals form L(A): U is covered by {U ∪ {s} : s ∈ S}
// for each antichain S of A outside U with ⋁S ∈ U, and by {U ∪ {a}} when some b ∈ U
// has b ≤ a. Base element i is the mask i.
Coverage cjsl_coverage(const FiniteFrame& a);
// Up-closed ℐ ⊆ P_fin(A) closed under the covering rules above; the frame members are
// masks of P_fin(A). eta(a) = {U : some b ∈ U has b ≤ a}.
FreeFrame free_frame_on_cjsl(const FiniteFrame& a);
// Finitary variant; on a finite A every family is finite, so this agrees with the above.
FreeFrame free_frame_on_jsl(const FiniteFrame& a);
// Opens of the space of subsets U ⊆ A with 0 ∉ U and a∨b ∈ U iff a ∈ U or b ∈ U,
// sub-basis {U : a ∈ U}.
FiniteFrame jsl_spatial_frame(const FiniteFrame& a);
// g(I) = ⋁_{U∈I} ⋀_{a∈U} f(a) for a join-preserving f : A -> target.
std::vector<int> cjsl_extension(const FreeFrame& l, const FiniteFrame& a, const FiniteFrame& target,
                                const std::vector<int>& f);

struct PresentOptions {
    int max_free_generators = 4;  // bound for materializing the free structure
    bool semantic_route = false;  // past the bound, build from 2-valued models instead
};

struct PresentedLattice {
    Presentation presentation;
    FiniteFrame structure;          // a bounded lattice; horn structures only use meets and 1
    std::vector<int> generator_images;
    std::vector<std::string> labels;  // a term naming each element
    std::string route;                // "congruence" or "models"
    int free_size = 0;                // materialized free structure, 0 on the model route
    int models = 0;                   // 2-valued models, model route only

    int evaluate(const Term& t) const;  // throws DomainError on ill-typed terms
    bool entails(const Term& lhs, const Term& rhs) const;  // lhs ≤ rhs
    bool holds(const Relation& r) const;
    bool entails(const std::string& relation) const;  // "t1 <= t2" or "t1 = t2"
};

PresentedLattice present_lattice(const Presentation& p, const PresentOptions& options = {});

struct ReflectionReport {
    std::string kind;
    FiniteFrame source;
    FiniteFrame target;
    std::vector<int> unit;     // source -> target (bool: L_c -> L inclusion)
    bool unit_ok = false;      // unit has the required preservation properties
    bool universal = false;    // unique factorization held for every checked arrow
    int targets_checked = 0;
    int arrows_checked = 0;
    std::string detail;
};

// kind: mslat | dlat | bool | disjunctive | atomic. Universal properties are checked
// against every suitable frame with at most max_target elements.
ReflectionReport reflection_unit(const std::string& kind, const Poset& x, int max_target = 6);
std::vector<std::string> reflection_kinds();

}  // namespace stonework
