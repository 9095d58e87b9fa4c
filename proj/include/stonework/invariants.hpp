#pragma once

#include "stonework/coverage.hpp"

#include <string>
#include <vector>

namespace stonework {

struct HeytingOps {
    FiniteFrame frame;
    std::vector<int> imp;  // a⇒b = ⋁{c : c∧a ≤ b}
    std::vector<int> neg;  // ¬a = a⇒0

    int implies(int a, int b) const { return imp[static_cast<std::size_t>(a) * frame.size() + b]; }
    int negation(int a) const { return neg[a]; }
};

// Verifies c ≤ (a⇒b) iff c∧a ≤ b on all triples; throws DomainError when it fails.
HeytingOps heyting(const FiniteFrame& l);

bool is_almost_discrete(const FiniteFrame& l);  // every element complemented
bool is_de_morgan(const FiniteFrame& l);        // ¬a ∨ ¬¬a = 1
bool is_two_valued(const FiniteFrame& l);       // exactly 0 and 1, distinct
bool godel_dummett_frame(const FiniteFrame& l); // (a⇒b) ∨ (b⇒a) = 1

struct Condition {
    std::string name;
    bool value = false;
};

// Equivalent conditions evaluated independently. `recorded` holds values that are
// reported beside them but are not expected to agree.
struct ConditionReport {
    std::string invariant;
    std::string kind;
    std::vector<Condition> conditions;
    std::vector<Condition> recorded;

    bool agree() const;
    bool value() const;  // the first condition
};

// Ideals of a distributive lattice: nonempty lower sets closed under binary joins.
std::vector<Subset> lattice_ideals(const FiniteFrame& d);
// Ideals of D with the coherent topology, as a frame.
FiniteFrame stone_frame(const FiniteFrame& d);

ConditionReport almost_discrete_conditions(const FiniteFrame& d);
ConditionReport extremally_disconnected_conditions(const FiniteFrame& d);

bool mslat_ideal_frame_demorgan(const Poset& m);  // M must be a meet-semilattice
bool alexandrov_demorgan(const Preorder& p);
// c ≤ a, b implies a, b ≤ d for some d.
bool amalgamation(const Preorder& p);

// kind: dlat | mslat | preorder (frame and dlat share the lattice conditions).
ConditionReport boolean_conditions(const std::string& kind, const Poset& x);
ConditionReport demorgan_conditions(const std::string& kind, const Poset& x);
// kind: dlat | mslat | preorder | frame
ConditionReport two_valued_conditions(const std::string& kind, const Poset& x);
ConditionReport godel_dummett_conditions(const std::string& kind, const Poset& x);

GrothendieckTopology canonical_topology(const FiniteFrame& l);
// {I ∩ (c)↓ : I a J-ideal}; these are exactly the J-closed sieves on c.
std::vector<Subset> j_closed_sieves(const GrothendieckTopology& j, int c);
// For J-closed R, S on c, the sieve of d ≤ c where R and S restrict comparably covers c.
// Empty when that holds everywhere, otherwise names c, R and S.
std::string godel_dummett_site_violation(const GrothendieckTopology& j);
bool godel_dummett_site(const GrothendieckTopology& j);
// The finitely-closed-sets formulation on a distributive lattice with its coherent topology.
bool godel_dummett_dlat(const FiniteFrame& d);

enum class ForestDirection { Upper, Lower };
// Any two elements with a common upper (lower) bound are comparable.
bool forest_check(const Preorder& p, ForestDirection direction);

std::vector<std::string> invariant_names();  // boolean, demorgan, twovalued, gd
ConditionReport check_invariant(const std::string& invariant, const std::string& kind, const Poset& x);

}  // namespace stonework
