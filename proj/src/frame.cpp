#include "stonework/frame.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace stonework {

int FiniteFrame::join_all(const Subset& s) const {
    int acc = bot;
    for_each_member(s, [&](int i) { acc = join(acc, i); });
    return acc;
}

int FiniteFrame::meet_all(const Subset& s) const {
    int acc = top;
    for_each_member(s, [&](int i) { acc = meet(acc, i); });
    return acc;
}

int FiniteFrame::find(const Subset& s) const {
    auto it = std::lower_bound(sets.begin(), sets.end(), s, SubsetLess{});
    if (it == sets.end() || *it != s) return -1;
    return static_cast<int>(it - sets.begin());
}

StructureCheck check_bounded_lattice(const Poset& p) {
    if (!p.is_poset()) return {false, "order is not antisymmetric"};
    if (p.n == 0) return {false, "empty carrier has no top or bottom"};
    for (int a = 0; a < p.n; ++a) {
        for (int b = a + 1; b < p.n; ++b) {
            Subset pair = singleton(p.n, a);
            pair.set(b);
            if (!inf_of(p, pair)) return {false, "no meet of " + p.label(a) + " and " + p.label(b)};
            if (!sup_of(p, pair)) return {false, "no join of " + p.label(a) + " and " + p.label(b)};
        }
    }
    return {};
}

StructureCheck check_distributive(const FiniteFrame& l) {
    const int n = l.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
                    return {false, "distributivity fails at " + l.carrier.label(a) + "," +
                                       l.carrier.label(b) + "," + l.carrier.label(c)};
    return {};
}

bool is_distributive(const FiniteFrame& l) { return check_distributive(l).ok; }

void verify_frame(const FiniteFrame& l) {
    auto lat = check_bounded_lattice(l.carrier);
    if (!lat) throw DomainError("not a bounded lattice: " + lat.missing);
    const int n = l.size();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            Subset pair = singleton(n, a);
            pair.set(b);
            if (l.meet(a, b) != *inf_of(l.carrier, pair)) throw DomainError("meet table disagrees with order");
            if (l.join(a, b) != *sup_of(l.carrier, pair)) throw DomainError("join table disagrees with order");
        }
    }
    if (l.bot != *sup_of(l.carrier, l.carrier.none()) || l.top != *inf_of(l.carrier, l.carrier.none()))
        throw DomainError("bounds disagree with order");
    auto d = check_distributive(l);
    if (!d) throw DomainError(d.missing);
}

FiniteFrame lattice_from_poset(const Poset& p) {
    auto chk = check_bounded_lattice(p);
    if (!chk) throw DomainError("not a bounded lattice: " + chk.missing);
    FiniteFrame l;
    l.carrier = p;
    const std::size_t n = p.n;
    l.meet_tab.assign(n * n, 0);
    l.join_tab.assign(n * n, 0);
    for (int a = 0; a < p.n; ++a) {
        for (int b = a; b < p.n; ++b) {
            Subset pair = singleton(n, a);
            pair.set(b);
            int m = *inf_of(p, pair);
            int j = *sup_of(p, pair);
            l.meet_tab[a * n + b] = l.meet_tab[b * n + a] = m;
            l.join_tab[a * n + b] = l.join_tab[b * n + a] = j;
        }
    }
    l.bot = *sup_of(p, p.none());
    l.top = *inf_of(p, p.none());
    return l;
}

FiniteFrame frame_from_poset(const Poset& p) {
    FiniteFrame l = lattice_from_poset(p);
    auto d = check_distributive(l);
    if (!d) throw DomainError("not a frame: " + d.missing);
    return l;
}

FiniteFrame frame_from_family(std::vector<Subset> family,
                              const std::function<Subset(const Subset&)>& closure) {
    normalize_family(family);
    check_guard(family.size(), "frame construction");
    if (family.empty()) throw DomainError("a frame needs at least one element");
    FiniteFrame l;
    const int m = static_cast<int>(family.size());
    l.sets = std::move(family);
    std::vector<Subset> up(m, Subset(m));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            if (l.sets[i].is_subset_of(l.sets[j])) up[i].set(j);
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) labels[i] = subset_string(l.sets[i]);
    l.carrier = preorder_from_up_sets(std::move(up), std::move(labels));
    const std::size_t n = m;
    l.meet_tab.assign(n * n, 0);
    l.join_tab.assign(n * n, 0);
    for (int a = 0; a < m; ++a) {
        for (int b = a; b < m; ++b) {
            int mi = l.find(l.sets[a] & l.sets[b]);
            if (mi < 0) throw DomainError("family is not closed under intersection");
            int jo = l.find(closure(l.sets[a] | l.sets[b]));
            if (jo < 0) throw DomainError("closure of a union left the family");
            l.meet_tab[a * n + b] = l.meet_tab[b * n + a] = mi;
            l.join_tab[a * n + b] = l.join_tab[b * n + a] = jo;
        }
    }
    l.bot = 0;
    l.top = m - 1;
    for (int i = 0; i < m; ++i)
        if (!l.sets[i].is_subset_of(l.sets[l.top]) || !l.sets[l.bot].is_subset_of(l.sets[i]))
            throw DomainError("family has no bounds");
    return l;
}

FiniteFrame frame_from_union_family(std::vector<Subset> family) {
    return frame_from_family(std::move(family), [](const Subset& s) { return s; });
}

FiniteFrame lower_sets(const Preorder& p) { return frame_from_union_family(all_lower_sets(p)); }

FiniteFrame upper_sets(const Preorder& p) { return frame_from_union_family(all_upper_sets(p)); }

std::optional<std::vector<int>> iso_search(const FiniteFrame& a, const FiniteFrame& b) {
    return iso_search(a.carrier, b.carrier);
}

std::string frame_hom_violation(const FiniteFrame& a, const FiniteFrame& b, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != a.size()) return "assignment has wrong length";
    for (int v : f)
        if (v < 0 || v >= b.size()) return "assignment leaves the codomain";
    if (f[a.bot] != b.bot) return "bottom not preserved";
    if (f[a.top] != b.top) return "top not preserved";
    for (int x = 0; x < a.size(); ++x) {
        for (int y = x + 1; y < a.size(); ++y) {
            if (f[a.meet(x, y)] != b.meet(f[x], f[y]))
                return "meet of " + a.carrier.label(x) + " and " + a.carrier.label(y) + " not preserved";
            if (f[a.join(x, y)] != b.join(f[x], f[y]))
                return "join of " + a.carrier.label(x) + " and " + a.carrier.label(y) + " not preserved";
        }
    }
    return {};
}

bool is_frame_hom(const FrameHom& h) { return frame_hom_violation(h.dom, h.cod, h.f).empty(); }

FrameHom compose(const FrameHom& g, const FrameHom& f) {
    FrameHom out{f.dom, g.cod, std::vector<int>(f.dom.size())};
    for (int i = 0; i < f.dom.size(); ++i) out.f[i] = g.f[f.f[i]];
    return out;
}

FrameHom identity_hom(const FiniteFrame& l) {
    FrameHom h{l, l, std::vector<int>(l.size())};
    std::iota(h.f.begin(), h.f.end(), 0);
    return h;
}

bool is_surjective(const FrameHom& h) {
    Subset hit(h.cod.size());
    for (int v : h.f) hit.set(v);
    return hit.all();
}

std::vector<std::vector<int>> enumerate_homs(const FiniteFrame& a, const FiniteFrame& b, HomKind kind) {
    const int n = a.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return a.carrier.down[x].count() < a.carrier.down[y].count();
    });
    std::vector<std::vector<std::pair<int, int>>> join_pairs(n);
    std::vector<int> forced_from(n, -1);
    if (kind.joins) {
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                int w = a.join(x, y);
                if (w != x && w != y) join_pairs[w].emplace_back(x, y);
            }
        for (int w = 0; w < n; ++w)
            if (!join_pairs[w].empty()) forced_from[w] = 0;
    }
    std::vector<int> f(n, -1);
    std::vector<std::vector<int>> out;
    std::function<void(int)> go = [&](int k) {
        if (k == n) {
            out.push_back(f);
            return;
        }
        const int z = order[k];
        auto consistent = [&](int v) {
            if (kind.bot && z == a.bot && v != b.bot) return false;
            if (kind.top && z == a.top && v != b.top) return false;
            for (int i = 0; i < k; ++i) {
                const int x = order[i];
                if (a.leq(x, z) && !b.leq(f[x], v)) return false;
                if (a.leq(z, x) && !b.leq(v, f[x])) return false;
                if (kind.meets) {
                    const int m = a.meet(x, z);
                    const int fm = (m == z) ? v : f[m];
                    if (fm >= 0 && fm != b.meet(f[x], v)) return false;
                }
            }
            if (kind.joins)
                for (auto [x, y] : join_pairs[z])
                    if (b.join(f[x], f[y]) != v) return false;
            return true;
        };
        if (forced_from[z] >= 0) {
            auto [x, y] = join_pairs[z].front();
            const int v = b.join(f[x], f[y]);
            if (consistent(v)) {
                f[z] = v;
                go(k + 1);
                f[z] = -1;
            }
            return;
        }
        for (int v = 0; v < b.size(); ++v) {
            if (!consistent(v)) continue;
            f[z] = v;
            go(k + 1);
            f[z] = -1;
        }
    };
    go(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> atoms(const FiniteFrame& l) {
    std::vector<int> out;
    for (int x = 0; x < l.size(); ++x) {
        if (x == l.bot) continue;
        Subset below = l.carrier.down[x];
        below.reset(x);
        if (below.count() == 1 && below[l.bot]) out.push_back(x);
    }
    return out;
}

std::vector<int> join_irreducibles(const FiniteFrame& l) {
    std::vector<int> out;
    for (int x = 0; x < l.size(); ++x) {
        if (x == l.bot) continue;
        Subset below = l.carrier.down[x];
        below.reset(x);
        if (l.join_all(below) != x) out.push_back(x);
    }
    return out;
}

Subset complemented_elements(const FiniteFrame& l) {
    Subset out(l.size());
    for (int x = 0; x < l.size(); ++x)
        for (int y = 0; y < l.size(); ++y)
            if (l.meet(x, y) == l.bot && l.join(x, y) == l.top) {
                out.set(x);
                break;
            }
    return out;
}

std::string frame_dot(const FiniteFrame& l, const std::string& name) { return hasse_dot(l.carrier, name); }

}  // namespace stonework
