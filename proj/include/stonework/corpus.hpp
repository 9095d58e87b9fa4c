#pragma once

#include "stonework/frame.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace stonework {

// Isomorphism-invariant key of a poset: least adjacency encoding over all
// orderings compatible with the element signatures.
std::string canonical_form(const Poset& p);

// Posets with exactly / at most n elements, one per isomorphism class, in a fixed order.
// `keep` must be hereditary under deleting a maximal element.
std::vector<Poset> posets_of_size(int n, const std::function<bool(const Poset&)>& keep = {});
std::vector<Poset> posets_up_to(int max_n, const std::function<bool(const Poset&)>& keep = {});

// Finite distributive lattices with at most max_size elements, as lower_sets of posets.
std::vector<FiniteFrame> distributive_lattices_up_to(int max_size);

// Bounded lattices with at most max_size elements (not necessarily distributive).
std::vector<FiniteFrame> lattices_up_to(int max_size);

// Random poset on n elements: each pair i<j related with probability `density`.
Poset random_poset(int n, double density, std::mt19937_64& rng);

}  // namespace stonework
