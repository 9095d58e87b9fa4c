#pragma once

#include "stonework/subset.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stonework {

// A structured domain failure: bad input, failed structure check, exceeded guard.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GuardError : public DomainError {
public:
    using DomainError::DomainError;
};

// Frame-size guard; defaults to 2^20, overridden by STONEWORK_GUARD or set_frame_guard.
std::size_t frame_guard();
void set_frame_guard(std::size_t bound);
void check_guard(std::size_t count, const char* what);

struct Preorder {
    int n = 0;
    std::vector<std::string> labels;
    std::vector<Subset> up;    // up[i] = {j : i <= j}
    std::vector<Subset> down;  // down[i] = {j : j <= i}

    bool leq(int a, int b) const { return up[a][b]; }
    bool less(int a, int b) const { return up[a][b] && !up[b][a]; }
    std::string label(int i) const;
    Subset none() const { return Subset(n); }
    Subset all() const { return full_set(n); }
    bool is_poset() const;
    Subset down_closure(const Subset& s) const;
    Subset up_closure(const Subset& s) const;
    bool is_down_closed(const Subset& s) const;
    bool is_up_closed(const Subset& s) const;
    int index_of(const std::string& label) const;
};

// Posets are preorders passing is_poset(); the type is shared.
using Poset = Preorder;

Preorder make_preorder(int n, const std::vector<std::pair<int, int>>& generators,
                       std::vector<std::string> labels = {});
// up[i] must already be reflexive and transitive.
Preorder preorder_from_up_sets(std::vector<Subset> up, std::vector<std::string> labels = {});
Preorder chain(int n);
Preorder antichain(int n);
Preorder opposite(const Preorder& p);
Preorder suborder(const Preorder& p, const std::vector<int>& elements);
Preorder with_bounds(const Preorder& p);  // fresh bottom and top around p

struct ValidatedPreorder {
    Preorder order;
    bool changed = false;
};

ValidatedPreorder validate_preorder(const std::vector<std::vector<bool>>& raw,
                                    std::vector<std::string> labels = {});

struct Quotient {
    Poset poset;
    std::vector<int> map;  // element -> class
};

Quotient poset_quotient(const Preorder& p);

struct MonotoneMap {
    Preorder dom;
    Preorder cod;
    std::vector<int> f;
};

bool is_monotone(const MonotoneMap& m);
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);  // g after f
MonotoneMap identity_map(const Preorder& p);

struct FlatReport {
    bool cond_i = true;
    bool cond_ii = true;
    std::string witness;
    bool flat() const { return cond_i && cond_ii; }
};

FlatReport flat_conditions(const MonotoneMap& m);
bool is_flat(const MonotoneMap& m);

// Bounds in a preorder; nullopt when they do not exist.
std::optional<int> sup_of(const Preorder& p, const Subset& s);
std::optional<int> inf_of(const Preorder& p, const Subset& s);

// Longest strict chain ending at each element.
std::vector<int> heights(const Preorder& p);
std::vector<std::pair<int, int>> hasse_edges(const Preorder& p);

std::optional<std::vector<int>> iso_search(const Preorder& a, const Preorder& b);
bool is_order_iso(const Preorder& a, const Preorder& b, const std::vector<int>& f);

// Every down-closed subset of p inside `within` (itself down-closed), numeric order.
// With a nonzero limit the enumeration stops after limit+1 results instead of
// enforcing the frame guard.
std::vector<Subset> lower_sets_within(const Preorder& p, const Subset& within,
                                      std::size_t limit = 0);
std::vector<Subset> all_lower_sets(const Preorder& p);
// Antichains inside `within`, in backtracking order over ascending indices; guarded.
void for_each_antichain(const Preorder& p, const Subset& within,
                        const std::function<void(const Subset&)>& f);
std::vector<Subset> all_upper_sets(const Preorder& p);

std::string hasse_dot(const Preorder& p, const std::string& name = "P");

}  // namespace stonework
