#include "stonework/spectra.hpp"

#include "stonework/duality.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>

namespace stonework {

namespace {

int index_in(const std::vector<Subset>& sorted, const Subset& s) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), s, SubsetLess{});
    return it != sorted.end() && *it == s ? static_cast<int>(it - sorted.begin()) : -1;
}

std::string members_label(const Preorder& p, const Subset& s) {
    std::string out = "{";
    bool first = true;
    for_each_member(s, [&](int x) {
        if (!first) out += ",";
        out += p.label(x);
        first = false;
    });
    return out + "}";
}

Subset mask_subset(int n, std::uint64_t m) {
    Subset s(n);
    for (int i = 0; i < n; ++i)
        if (m >> i & 1) s.set(i);
    return s;
}

std::string list_string(const std::vector<Subset>& fam) {
    std::string out;
    for (const auto& s : fam) out += subset_string(s) + " ";
    return out;
}

}  // namespace

bool TopSpace::is_open(const Subset& s) const { return index_in(opens, s) >= 0; }

std::string TopSpace::label(int x) const {
    return x < static_cast<int>(labels.size()) && !labels[x].empty() ? labels[x] : std::to_string(x);
}

TopSpace space_from_subbasis(int n, const std::vector<Subset>& subbasis, std::vector<std::string> labels) {
    std::set<Subset, SubsetLess> seen{Subset(n), Subset(n).set()};
    for (const auto& s : subbasis) {
        if (static_cast<int>(s.size()) != n) throw DomainError("sub-basis member has the wrong size");
        seen.insert(s);
    }
    std::vector<Subset> all(seen.begin(), seen.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t k = 0; k <= i; ++k)
            for (const Subset& t : {all[i] | all[k], all[i] & all[k]})
                if (seen.insert(t).second) {
                    all.push_back(t);
                    check_guard(all.size(), "open family");
                }
    TopSpace x;
    x.n = n;
    x.labels = std::move(labels);
    x.opens = std::move(all);
    normalize_family(x.opens);
    return x;
}

void validate_space(const TopSpace& x) {
    for (const auto& u : x.opens)
        if (static_cast<int>(u.size()) != x.n) throw DomainError("open set has the wrong size");
    if (!std::is_sorted(x.opens.begin(), x.opens.end(), SubsetLess{}) ||
        std::adjacent_find(x.opens.begin(), x.opens.end()) != x.opens.end())
        throw DomainError("open family is not sorted and duplicate free");
    if (!x.is_open(Subset(x.n))) throw DomainError("the empty set is not open");
    if (!x.is_open(Subset(x.n).set())) throw DomainError("the whole space is not open");
    for (const auto& u : x.opens)
        for (const auto& v : x.opens) {
            if (!x.is_open(u | v)) throw DomainError("union of " + subset_string(u) + " and " + subset_string(v) + " is not open");
            if (!x.is_open(u & v))
                throw DomainError("intersection of " + subset_string(u) + " and " + subset_string(v) + " is not open");
        }
}

FiniteFrame open_frame(const TopSpace& x) { return frame_from_union_family(x.opens); }

bool is_j_prime_filter(const GrothendieckTopology& j, const Subset& f) {
    const Preorder& p = j.base;
    if (f.none() || !p.is_up_closed(f)) return false;
    auto xs = members(f);
    for (int a : xs)
        for (int b : xs)
            if ((p.down[a] & p.down[b] & f).none()) return false;
    for (int c : xs)
        for (const auto& s : j.sieves[c])
            if ((s & f).none()) return false;
    return true;
}

std::vector<Subset> j_prime_filters(const GrothendieckTopology& j) {
    std::vector<Subset> out;
    for (const auto& u : all_upper_sets(j.base))
        if (is_j_prime_filter(j, u)) out.push_back(u);
    normalize_family(out);
    return out;
}

bool is_completely_prime_filter(const FiniteFrame& l, const Subset& f) {
    if (!f[l.top] || f[l.bot] || !l.carrier.is_up_closed(f)) return false;
    for (int a = 0; a < l.size(); ++a)
        for (int b = a; b < l.size(); ++b) {
            if (f[a] && f[b] && !f[l.meet(a, b)]) return false;
            if (f[l.join(a, b)] && !f[a] && !f[b]) return false;
        }
    return true;
}

std::vector<Subset> completely_prime_filters(const FiniteFrame& l) {
    // A filter on a finite lattice is principal, so testing every ↑p is exhaustive.
    std::vector<Subset> out;
    for (int p = 0; p < l.size(); ++p)
        if (is_completely_prime_filter(l, l.carrier.up[p])) out.push_back(l.carrier.up[p]);
    normalize_family(out);
    return out;
}

FilterBijection filter_bijection(const GrothendieckTopology& j) {
    FilterBijection b;
    b.frame = ideal_frame(j);
    b.frame_filters = completely_prime_filters(b.frame);
    b.site_filters = j_prime_filters(j);
    const int n = j.base.n;
    std::vector<int> principal(n);
    for (int c = 0; c < n; ++c) principal[c] = b.frame.find(principal_j_ideal(j, c));
    auto fail = [&](const std::string& what) {
        throw std::logic_error("filter bijection failed (" + what + "); frame filters: " + list_string(b.frame_filters) +
                               "; site filters: " + list_string(b.site_filters));
    };
    for (const auto& f : b.frame_filters) {
        Subset g(n);
        for (int c = 0; c < n; ++c)
            if (f[principal[c]]) g.set(c);
        int i = index_in(b.site_filters, g);
        if (i < 0) fail("image " + subset_string(g) + " is not J-prime");
        b.forward.push_back(i);
    }
    for (const auto& g : b.site_filters) {
        Subset f(b.frame.size());
        for (int i = 0; i < b.frame.size(); ++i)
            if ((b.frame.sets[i] & g).any()) f.set(i);
        int i = index_in(b.frame_filters, f);
        if (i < 0) fail("filter " + subset_string(g) + " has no completely prime counterpart");
        b.backward.push_back(i);
    }
    for (std::size_t i = 0; i < b.forward.size(); ++i)
        if (b.backward[b.forward[i]] != static_cast<int>(i)) fail("maps are not mutually inverse");
    if (b.forward.size() != b.backward.size()) fail("sizes differ");
    return b;
}

TopSpace subterminal_space(const GrothendieckTopology& j) {
    auto filters = j_prime_filters(j);
    const int n = static_cast<int>(filters.size());
    TopSpace x;
    x.n = n;
    for (const auto& f : filters) x.labels.push_back(members_label(j.base, f));
    for (const auto& ideal : j_ideals(j)) {
        Subset u(n);
        for (int i = 0; i < n; ++i)
            if ((filters[i] & ideal).any()) u.set(i);
        x.opens.push_back(u);
    }
    normalize_family(x.opens);
    std::vector<Subset> subbasis;
    for (int c = 0; c < j.base.n; ++c) {
        Subset u(n);
        for (int i = 0; i < n; ++i)
            if (filters[i][c]) u.set(i);
        subbasis.push_back(u);
    }
    if (space_from_subbasis(n, subbasis).opens != x.opens)
        throw std::logic_error("principal opens do not generate the subterminal topology");
    return x;
}

std::string enough_points_violation(const GrothendieckTopology& j) {
    auto filters = j_prime_filters(j);
    std::vector<std::pair<Subset, Subset>> seen;
    for (const auto& ideal : j_ideals(j)) {
        Subset u(filters.size());
        for (std::size_t i = 0; i < filters.size(); ++i)
            if ((filters[i] & ideal).any()) u.set(i);
        for (const auto& [open, other] : seen)
            if (open == u)
                return "not enough points: ideals " + subset_string(other) + " and " + subset_string(ideal) +
                       " have the same points";
        seen.emplace_back(u, ideal);
    }
    return {};
}

std::string subframe_violation(const GrothendieckTopology& j, const std::vector<Subset>& gamma) {
    std::set<Subset, SubsetLess> g(gamma.begin(), gamma.end());
    for (const auto& u : gamma)
        if (static_cast<int>(u.size()) != j.base.n || !is_j_ideal(j, u)) return subset_string(u) + " is not a J-ideal";
    const Subset bottom = j_closure(j, Subset(j.base.n));
    if (!g.count(bottom)) return "missing the least ideal";
    if (!g.count(j.base.all())) return "missing the greatest ideal";
    for (const auto& u : gamma)
        for (const auto& v : gamma) {
            if (!g.count(u & v)) return "not closed under the meet of " + subset_string(u) + " and " + subset_string(v);
            if (!g.count(j_closure(j, u | v)))
                return "not closed under the join of " + subset_string(u) + " and " + subset_string(v);
        }
    return {};
}

namespace {

Subset phi(const std::vector<Subset>& filters, const Subset& u) {
    Subset out(filters.size());
    for (std::size_t i = 0; i < filters.size(); ++i)
        if ((filters[i] & u).any()) out.set(i);
    return out;
}

}  // namespace

TopSpace gamma_subterminal_space(const GrothendieckTopology& j, const std::vector<Subset>& gamma,
                                 const std::vector<Subset>& filters) {
    if (auto v = subframe_violation(j, gamma); !v.empty()) throw DomainError("gamma is not a subframe: " + v);
    for (const auto& f : filters)
        if (static_cast<int>(f.size()) != j.base.n || !is_j_prime_filter(j, f))
            throw DomainError("indexing names " + subset_string(f) + ", which is not a J-prime filter");
    TopSpace x;
    x.n = static_cast<int>(filters.size());
    for (const auto& f : filters) x.labels.push_back(members_label(j.base, f));
    for (const auto& u : gamma) x.opens.push_back(phi(filters, u));
    normalize_family(x.opens);
    validate_space(x);
    return x;
}

bool gamma_separates(const GrothendieckTopology& j, const std::vector<Subset>& gamma,
                     const std::vector<Subset>& filters) {
    (void)j;
    std::set<Subset, SubsetLess> images;
    std::set<Subset, SubsetLess> distinct(gamma.begin(), gamma.end());
    for (const auto& u : distinct) images.insert(phi(filters, u));
    return images.size() == distinct.size();
}

bool is_continuous(const ContinuousMap& m) {
    for (const auto& v : m.cod.opens) {
        Subset pre(m.dom.n);
        for (int x = 0; x < m.dom.n; ++x)
            if (v[m.f[x]]) pre.set(x);
        if (!m.dom.is_open(pre)) return false;
    }
    return true;
}

ContinuousMap induced_map(const MonotoneMap& f, const GrothendieckTopology& j, const GrothendieckTopology& k) {
    if (!is_monotone(f)) throw DomainError("induced_map: map is not monotone");
    auto flat = flat_conditions(f);
    if (!flat.flat()) throw DomainError("induced_map: map is not flat: " + flat.witness);
    if (auto v = cover_preservation_violation(f, j, k); !v.empty()) throw DomainError("induced_map: " + v);
    auto from = j_prime_filters(k);
    auto to = j_prime_filters(j);
    ContinuousMap m{subterminal_space(k), subterminal_space(j), {}};
    for (const auto& g : from) {
        Subset pre(f.dom.n);
        for (int c = 0; c < f.dom.n; ++c)
            if (g[f.f[c]]) pre.set(c);
        int i = index_in(to, pre);
        if (i < 0) throw DomainError("preimage " + subset_string(pre) + " of a prime filter is not J-prime");
        m.f.push_back(i);
    }
    if (!is_continuous(m)) throw std::logic_error("induced map is not continuous");
    return m;
}

std::vector<Subset> point_filters(const TopSpace& x) {
    FiniteFrame l = open_frame(x);
    std::vector<Subset> out;
    for (int p = 0; p < x.n; ++p) {
        Subset f(l.size());
        for (int i = 0; i < l.size(); ++i)
            if (l.sets[i][p]) f.set(i);
        out.push_back(f);
    }
    return out;
}

bool is_sober(const TopSpace& x) {
    auto pts = point_filters(x);
    auto cp = completely_prime_filters(open_frame(x));
    std::vector<Subset> sorted = pts;
    normalize_family(sorted);
    return sorted.size() == pts.size() && sorted == cp;
}

TopSpace sobrification(const TopSpace& x) {
    FiniteFrame l = open_frame(x);
    auto cp = completely_prime_filters(l);
    auto pts = point_filters(x);
    TopSpace s;
    s.n = static_cast<int>(cp.size());
    for (std::size_t i = 0; i < cp.size(); ++i) {
        auto it = std::find(pts.begin(), pts.end(), cp[i]);
        s.labels.push_back(it == pts.end() ? "p" + std::to_string(i) : x.label(static_cast<int>(it - pts.begin())));
    }
    for (int u = 0; u < l.size(); ++u) {
        Subset open(s.n);
        for (int i = 0; i < s.n; ++i)
            if (cp[i][u]) open.set(i);
        s.opens.push_back(open);
    }
    normalize_family(s.opens);
    return s;
}

TopSpace alexandrov_space(const Preorder& p) {
    TopSpace x;
    x.n = p.n;
    x.labels = p.labels;
    x.opens = all_upper_sets(p);
    normalize_family(x.opens);
    return x;
}

Preorder specialization_order(const TopSpace& x) {
    std::vector<Subset> up(x.n, Subset(x.n).set());
    for (const auto& u : x.opens)
        for_each_member(u, [&](int p) { up[p] &= u; });
    std::vector<std::string> labels(x.n);
    for (int p = 0; p < x.n; ++p) labels[p] = x.label(p);
    return preorder_from_up_sets(std::move(up), std::move(labels));
}

TopSpace elemental_space(int atoms) {
    if (atoms < 0 || atoms > 20) throw DomainError("elemental space needs between 0 and 20 atoms");
    check_guard(std::size_t{1} << atoms, "elemental space points");
    const int n = 1 << atoms;
    std::vector<Subset> up(n, Subset(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if ((a & b) == a) up[a].set(b);
        labels[a] = subset_string(mask_subset(atoms, a));
    }
    return alexandrov_space(preorder_from_up_sets(std::move(up), std::move(labels)));
}

std::optional<std::vector<int>> homeomorphism(const TopSpace& a, const TopSpace& b) {
    if (a.n != b.n || a.opens.size() != b.opens.size()) return std::nullopt;
    const int n = a.n;
    auto degrees = [](const TopSpace& x) {
        std::vector<int> d(x.n, 0);
        for (const auto& u : x.opens) for_each_member(u, [&](int p) { ++d[p]; });
        return d;
    };
    auto da = degrees(a), db = degrees(b);
    Preorder sa = specialization_order(a), sb = specialization_order(b);
    std::vector<int> f(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> go = [&](int i) {
        if (i == n) {
            for (const auto& u : a.opens) {
                Subset image(n);
                for_each_member(u, [&](int p) { image.set(f[p]); });
                if (!b.is_open(image)) return false;
            }
            return true;
        }
        for (int y = 0; y < n; ++y) {
            if (used[y] || da[i] != db[y]) continue;
            bool ok = true;
            for (int k = 0; k < i && ok; ++k)
                ok = sa.leq(i, k) == sb.leq(y, f[k]) && sa.leq(k, i) == sb.leq(f[k], y);
            if (!ok) continue;
            used[y] = true;
            f[i] = y;
            if (go(i + 1)) return true;
            used[y] = false;
        }
        return false;
    };
    if (go(0)) return f;
    return std::nullopt;
}

bool is_discrete(const TopSpace& x) {
    for (int p = 0; p < x.n; ++p) {
        Subset s(x.n);
        s.set(p);
        if (!x.is_open(s)) return false;
    }
    return true;
}

bool has_atomic_basis(const TopSpace& x) {
    std::vector<Subset> atoms;
    for (const auto& u : x.opens) {
        if (u.none()) continue;
        bool minimal = true;
        for (const auto& v : x.opens)
            if (v.any() && v != u && v.is_subset_of(u)) minimal = false;
        if (minimal) atoms.push_back(u);
    }
    for (const auto& u : x.opens) {
        Subset cover(x.n);
        for (const auto& a : atoms)
            if (a.is_subset_of(u)) cover |= a;
        if (cover != u) return false;
    }
    return true;
}

std::vector<TopSpace> all_spaces(int n) {
    if (n < 0 || n > 4) throw DomainError("all_spaces enumerates at most 4 points");
    std::vector<Subset> middle;
    for (unsigned m = 1; m + 1 < (1u << n); ++m) middle.push_back(mask_subset(n, m));
    std::vector<TopSpace> out;
    const std::size_t k = middle.size();
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << k); ++choice) {
        TopSpace x;
        x.n = n;
        x.opens.push_back(Subset(n));
        if (n > 0) x.opens.push_back(Subset(n).set());
        for (std::size_t i = 0; i < k; ++i)
            if (choice >> i & 1) x.opens.push_back(middle[i]);
        normalize_family(x.opens);
        bool closed = true;
        for (std::size_t a = 0; a < x.opens.size() && closed; ++a)
            for (std::size_t b = a + 1; b < x.opens.size() && closed; ++b)
                closed = x.is_open(x.opens[a] | x.opens[b]) && x.is_open(x.opens[a] & x.opens[b]);
        if (closed) out.push_back(std::move(x));
    }
    return out;
}

}  // namespace stonework
