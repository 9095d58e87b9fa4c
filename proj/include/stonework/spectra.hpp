#pragma once

#include "stonework/coverage.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stonework {

// Finite topological space with its full open family, sorted numerically.
struct TopSpace {
    int n = 0;
    std::vector<std::string> labels;
    std::vector<Subset> opens;

    bool is_open(const Subset& s) const;
    std::string label(int x) const;
};

// Closes a sub-basis under finite unions and intersections (adding ∅ and the whole set).
TopSpace space_from_subbasis(int n, const std::vector<Subset>& subbasis, std::vector<std::string> labels = {});
void validate_space(const TopSpace& x);  // throws naming the failed axiom
FiniteFrame open_frame(const TopSpace& x);

// Nonempty, up-closed, downward directed and J-prime.
bool is_j_prime_filter(const GrothendieckTopology& j, const Subset& f);
std::vector<Subset> j_prime_filters(const GrothendieckTopology& j);  // numeric order

// Filters on the frame given as sets of element positions; principal on a join-prime.
bool is_completely_prime_filter(const FiniteFrame& l, const Subset& f);
std::vector<Subset> completely_prime_filters(const FiniteFrame& l);

struct FilterBijection {
    FiniteFrame frame;                  // ideal_frame(J)
    std::vector<Subset> frame_filters;  // completely prime filters on frame
    std::vector<Subset> site_filters;   // J-prime filters on the base
    std::vector<int> forward;           // frame_filters -> site_filters
    std::vector<int> backward;
};

FilterBijection filter_bijection(const GrothendieckTopology& j);

// Points: J-prime filters. Opens: {F : F meets I} for J-ideals I.
TopSpace subterminal_space(const GrothendieckTopology& j);
// Empty when I ↦ {F : F meets I} separates the J-ideals, else names two ideals it identifies.
std::string enough_points_violation(const GrothendieckTopology& j);

// Points are indices; point x carries the J-prime filter filters[x]. Gamma must be a
// subframe of the J-ideals.
TopSpace gamma_subterminal_space(const GrothendieckTopology& j, const std::vector<Subset>& gamma,
                                 const std::vector<Subset>& filters);
std::string subframe_violation(const GrothendieckTopology& j, const std::vector<Subset>& gamma);
bool gamma_separates(const GrothendieckTopology& j, const std::vector<Subset>& gamma,
                     const std::vector<Subset>& filters);

struct ContinuousMap {
    TopSpace dom;
    TopSpace cod;
    std::vector<int> f;
};

bool is_continuous(const ContinuousMap& m);
// The map G ↦ f⁻¹(G) from the space of (D, K) to the space of (C, J).
ContinuousMap induced_map(const MonotoneMap& f, const GrothendieckTopology& j, const GrothendieckTopology& k);

// x ↦ {U : x ∈ U} as a filter on open_frame(x).
std::vector<Subset> point_filters(const TopSpace& x);
bool is_sober(const TopSpace& x);
TopSpace sobrification(const TopSpace& x);

TopSpace alexandrov_space(const Preorder& p);  // opens = upper sets
Preorder specialization_order(const TopSpace& x);  // x ≤ y iff every open containing x contains y
TopSpace elemental_space(int atoms);  // points are subsets of {0..atoms-1} as bit masks

std::optional<std::vector<int>> homeomorphism(const TopSpace& a, const TopSpace& b);
bool is_discrete(const TopSpace& x);
// Every open is a union of atoms of the open frame.
bool has_atomic_basis(const TopSpace& x);
// Every topology on n points (n ≤ 4), as spaces; brute force over open families.
std::vector<TopSpace> all_spaces(int n);

}  // namespace stonework
