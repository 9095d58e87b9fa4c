#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace stonework {

using Subset = boost::dynamic_bitset<std::uint64_t>;

// Numeric order: the subset read as a binary number, bit 0 least significant.
inline bool numeric_less(const Subset& a, const Subset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return b[i];
    }
    return false;
}

struct SubsetLess {
    bool operator()(const Subset& a, const Subset& b) const { return numeric_less(a, b); }
};

inline Subset empty_set(std::size_t n) { return Subset(n); }

inline Subset full_set(std::size_t n) {
    Subset s(n);
    s.set();
    return s;
}

inline Subset singleton(std::size_t n, std::size_t i) {
    Subset s(n);
    s.set(i);
    return s;
}

inline Subset subset_of(std::size_t n, const std::vector<int>& xs) {
    Subset s(n);
    for (int x : xs) s.set(static_cast<std::size_t>(x));
    return s;
}

inline std::vector<int> members(const Subset& s) {
    std::vector<int> out;
    for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out.push_back(static_cast<int>(i));
    return out;
}

template <class F>
void for_each_member(const Subset& s, F&& f) {
    for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) f(static_cast<int>(i));
}

inline bool subset_le(const Subset& a, const Subset& b) { return a.is_subset_of(b); }

inline std::string subset_string(const Subset& s) {
    std::string out = "{";
    bool first = true;
    for_each_member(s, [&](int i) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    });
    return out + "}";
}

// Sorts and deduplicates a family in numeric order.
inline void normalize_family(std::vector<Subset>& fam) {
    std::sort(fam.begin(), fam.end(), SubsetLess{});
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
}

}  // namespace stonework
