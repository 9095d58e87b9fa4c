#pragma once

#include "stonework/order.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace stonework {

// A finite bounded lattice with meet/join tables. As a frame it must also be
// distributive; lattice_from_poset builds the tables without that requirement.
struct FiniteFrame {
    Poset carrier;
    int bot = 0;
    int top = 0;
    std::vector<int> meet_tab;
    std::vector<int> join_tab;
    std::vector<Subset> sets;  // concrete members when built from a set family

    int size() const { return carrier.n; }
    int meet(int a, int b) const { return meet_tab[static_cast<std::size_t>(a) * carrier.n + b]; }
    int join(int a, int b) const { return join_tab[static_cast<std::size_t>(a) * carrier.n + b]; }
    bool leq(int a, int b) const { return carrier.leq(a, b); }
    int join_all(const Subset& s) const;
    int meet_all(const Subset& s) const;
    int find(const Subset& s) const;  // index of a concrete member or -1
};

struct StructureCheck {
    bool ok = true;
    std::string missing;  // names the failed property
    explicit operator bool() const { return ok; }
};

StructureCheck check_bounded_lattice(const Poset& p);
StructureCheck check_distributive(const FiniteFrame& l);
bool is_distributive(const FiniteFrame& l);
void verify_frame(const FiniteFrame& l);  // throws DomainError naming the failure

FiniteFrame lattice_from_poset(const Poset& p);  // throws if not a bounded lattice
FiniteFrame frame_from_poset(const Poset& p);    // also requires distributivity

// Family of subsets of an n-element set closed under intersection and containing
// the full set; join(a,b) = closure(a ∪ b). Members are sorted numerically.
FiniteFrame frame_from_family(std::vector<Subset> family,
                              const std::function<Subset(const Subset&)>& closure);
FiniteFrame frame_from_union_family(std::vector<Subset> family);

FiniteFrame lower_sets(const Preorder& p);
FiniteFrame upper_sets(const Preorder& p);

std::optional<std::vector<int>> iso_search(const FiniteFrame& a, const FiniteFrame& b);

struct FrameHom {
    FiniteFrame dom;
    FiniteFrame cod;
    std::vector<int> f;
};

// Empty string when f preserves 0, 1, binary meets and binary joins.
std::string frame_hom_violation(const FiniteFrame& a, const FiniteFrame& b, const std::vector<int>& f);
bool is_frame_hom(const FrameHom& h);
FrameHom compose(const FrameHom& g, const FrameHom& f);  // g after f
FrameHom identity_hom(const FiniteFrame& l);
bool is_surjective(const FrameHom& h);

struct HomKind {
    bool top = true;
    bool bot = true;
    bool meets = true;
    bool joins = true;
};

constexpr HomKind kFrameHom{};
constexpr HomKind kMeetHom{true, false, true, false};
constexpr HomKind kJoinHom{false, true, false, true};

// Every map a -> b preserving the selected operations, lexicographic order.
std::vector<std::vector<int>> enumerate_homs(const FiniteFrame& a, const FiniteFrame& b,
                                             HomKind kind = kFrameHom);

std::vector<int> atoms(const FiniteFrame& l);
std::vector<int> join_irreducibles(const FiniteFrame& l);  // excludes 0
Subset complemented_elements(const FiniteFrame& l);

std::string frame_dot(const FiniteFrame& l, const std::string& name = "L");

}  // namespace stonework
