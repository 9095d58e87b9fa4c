#include "stonework/order.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <tuple>

namespace stonework {

namespace {

std::size_t& guard_override() {
    static std::size_t value = 0;
    return value;
}

void close_transitively(std::vector<Subset>& up) {
    const int n = static_cast<int>(up.size());
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (up[i][k]) up[i] |= up[k];
}

std::vector<Subset> transpose(const std::vector<Subset>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<Subset> cols(n, Subset(n));
    for (int i = 0; i < n; ++i)
        for_each_member(rows[i], [&](int j) { cols[j].set(i); });
    return cols;
}

}  // namespace

Preorder preorder_from_up_sets(std::vector<Subset> up, std::vector<std::string> labels) {
    Preorder p;
    p.n = static_cast<int>(up.size());
    p.down = transpose(up);
    p.up = std::move(up);
    p.labels = std::move(labels);
    return p;
}

namespace {

Preorder from_up(std::vector<Subset> up, std::vector<std::string> labels) {
    return preorder_from_up_sets(std::move(up), std::move(labels));
}

}  // namespace

std::size_t frame_guard() {
    if (guard_override() != 0) return guard_override();
    if (const char* env = std::getenv("STONEWORK_GUARD")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1} << 20;
}

void set_frame_guard(std::size_t bound) { guard_override() = bound; }

void check_guard(std::size_t count, const char* what) {
    if (count > frame_guard()) {
        throw GuardError(std::string(what) + " exceeds the frame-size guard of " +
                         std::to_string(frame_guard()) + " elements");
    }
}

std::string Preorder::label(int i) const {
    if (i >= 0 && i < static_cast<int>(labels.size()) && !labels[i].empty()) return labels[i];
    return std::to_string(i);
}

bool Preorder::is_poset() const {
    for (int i = 0; i < n; ++i)
        if ((up[i] & down[i]).count() != 1) return false;
    return true;
}

Subset Preorder::down_closure(const Subset& s) const {
    Subset out(n);
    for_each_member(s, [&](int i) { out |= down[i]; });
    return out;
}

Subset Preorder::up_closure(const Subset& s) const {
    Subset out(n);
    for_each_member(s, [&](int i) { out |= up[i]; });
    return out;
}

bool Preorder::is_down_closed(const Subset& s) const {
    for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i))
        if (!down[i].is_subset_of(s)) return false;
    return true;
}

bool Preorder::is_up_closed(const Subset& s) const {
    for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i))
        if (!up[i].is_subset_of(s)) return false;
    return true;
}

int Preorder::index_of(const std::string& name) const {
    for (int i = 0; i < n; ++i)
        if (label(i) == name) return i;
    return -1;
}

Preorder make_preorder(int n, const std::vector<std::pair<int, int>>& generators,
                       std::vector<std::string> labels) {
    std::vector<Subset> up(n, Subset(n));
    for (int i = 0; i < n; ++i) up[i].set(i);
    for (auto [a, b] : generators) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw DomainError("order pair out of range");
        up[a].set(b);
    }
    close_transitively(up);
    return from_up(std::move(up), std::move(labels));
}

Preorder chain(int n) {
    std::vector<std::pair<int, int>> g;
    for (int i = 0; i + 1 < n; ++i) g.emplace_back(i, i + 1);
    return make_preorder(n, g);
}

Preorder antichain(int n) { return make_preorder(n, {}); }

Preorder opposite(const Preorder& p) {
    Preorder q = p;
    std::swap(q.up, q.down);
    return q;
}

Preorder suborder(const Preorder& p, const std::vector<int>& elements) {
    const int m = static_cast<int>(elements.size());
    std::vector<Subset> up(m, Subset(m));
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i) {
        labels.push_back(p.label(elements[i]));
        for (int j = 0; j < m; ++j)
            if (p.leq(elements[i], elements[j])) up[i].set(j);
    }
    return from_up(std::move(up), std::move(labels));
}

Preorder with_bounds(const Preorder& p) {
    const int m = p.n + 2;
    std::vector<std::pair<int, int>> g;
    std::vector<std::string> labels{"bot"};
    for (int i = 0; i < p.n; ++i) {
        labels.push_back(p.label(i));
        g.emplace_back(0, i + 1);
        g.emplace_back(i + 1, m - 1);
        for_each_member(p.up[i], [&](int j) { g.emplace_back(i + 1, j + 1); });
    }
    g.emplace_back(0, m - 1);
    labels.push_back("top");
    return make_preorder(m, g, labels);
}

ValidatedPreorder validate_preorder(const std::vector<std::vector<bool>>& raw,
                                    std::vector<std::string> labels) {
    const int n = static_cast<int>(raw.size());
    for (const auto& row : raw)
        if (static_cast<int>(row.size()) != n) throw DomainError("relation matrix is not square");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw DomainError("label count does not match relation size");
    std::vector<Subset> up(n, Subset(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (raw[i][j]) up[i].set(j);
    std::vector<Subset> before = up;
    for (int i = 0; i < n; ++i) up[i].set(i);
    close_transitively(up);
    ValidatedPreorder out;
    out.changed = (before != up);
    out.order = from_up(std::move(up), std::move(labels));
    return out;
}

Quotient poset_quotient(const Preorder& p) {
    Quotient q;
    q.map.assign(p.n, -1);
    std::vector<int> reps;
    for (int i = 0; i < p.n; ++i) {
        if (q.map[i] >= 0) continue;
        const int cls = static_cast<int>(reps.size());
        reps.push_back(i);
        for_each_member(p.up[i] & p.down[i], [&](int j) { q.map[j] = cls; });
    }
    const int m = static_cast<int>(reps.size());
    std::vector<Subset> up(m, Subset(m));
    std::vector<std::string> labels;
    for (int a = 0; a < m; ++a) {
        labels.push_back(p.label(reps[a]));
        for (int b = 0; b < m; ++b)
            if (p.leq(reps[a], reps[b])) up[a].set(b);
    }
    q.poset = from_up(std::move(up), std::move(labels));
    return q;
}

bool is_monotone(const MonotoneMap& m) {
    if (static_cast<int>(m.f.size()) != m.dom.n) return false;
    for (int v : m.f)
        if (v < 0 || v >= m.cod.n) return false;
    for (int i = 0; i < m.dom.n; ++i) {
        for (auto j = m.dom.up[i].find_first(); j != Subset::npos; j = m.dom.up[i].find_next(j))
            if (!m.cod.leq(m.f[i], m.f[j])) return false;
    }
    return true;
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
    MonotoneMap out{f.dom, g.cod, std::vector<int>(f.dom.n)};
    for (int i = 0; i < f.dom.n; ++i) out.f[i] = g.f[f.f[i]];
    return out;
}

MonotoneMap identity_map(const Preorder& p) {
    MonotoneMap m{p, p, std::vector<int>(p.n)};
    std::iota(m.f.begin(), m.f.end(), 0);
    return m;
}

FlatReport flat_conditions(const MonotoneMap& m) {
    FlatReport r;
    const Preorder& C = m.dom;
    const Preorder& D = m.cod;
    Subset image(D.n);
    for (int v : m.f) image.set(v);
    Subset covered = D.down_closure(image);
    if (covered != D.all()) {
        r.cond_i = false;
        auto d = (~covered).find_first();
        r.witness = "element " + D.label(static_cast<int>(d)) + " lies below no image";
    }
    for (int c = 0; c < C.n && r.cond_ii; ++c) {
        for (int c2 = 0; c2 < C.n; ++c2) {
            Subset lower = D.down[m.f[c]] & D.down[m.f[c2]];
            Subset common = C.down[c] & C.down[c2];
            Subset reach(D.n);
            for_each_member(common, [&](int x) { reach |= D.down[m.f[x]]; });
            Subset missing = lower - reach;
            if (missing.any()) {
                r.cond_ii = false;
                if (!r.witness.empty()) r.witness += "; ";
                r.witness += "element " + D.label(static_cast<int>(missing.find_first())) + " below f(" +
                             C.label(c) + ") and f(" + C.label(c2) + ") has no common factorization";
                break;
            }
        }
    }
    return r;
}

bool is_flat(const MonotoneMap& m) { return flat_conditions(m).flat(); }

std::optional<int> sup_of(const Preorder& p, const Subset& s) {
    Subset ub = p.all();
    for_each_member(s, [&](int i) { ub &= p.up[i]; });
    for (auto u = ub.find_first(); u != Subset::npos; u = ub.find_next(u))
        if (ub.is_subset_of(p.up[u])) return static_cast<int>(u);
    return std::nullopt;
}

std::optional<int> inf_of(const Preorder& p, const Subset& s) {
    Subset lb = p.all();
    for_each_member(s, [&](int i) { lb &= p.down[i]; });
    for (auto u = lb.find_first(); u != Subset::npos; u = lb.find_next(u))
        if (lb.is_subset_of(p.down[u])) return static_cast<int>(u);
    return std::nullopt;
}

std::vector<int> heights(const Preorder& p) {
    std::vector<int> order(p.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return p.down[a].count() < p.down[b].count(); });
    std::vector<int> h(p.n, 0);
    for (int x : order)
        for (int y : order)
            if (p.less(y, x)) h[x] = std::max(h[x], h[y] + 1);
    return h;
}

std::vector<std::pair<int, int>> hasse_edges(const Preorder& p) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < p.n; ++a) {
        for (int b = 0; b < p.n; ++b) {
            if (!p.less(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < p.n && cover; ++c)
                if (p.less(a, c) && p.less(c, b)) cover = false;
            if (cover) edges.emplace_back(a, b);
        }
    }
    return edges;
}

namespace {

struct Signature {
    std::size_t down, up;
    int in_deg, out_deg, height;
    bool operator==(const Signature&) const = default;
};

std::vector<Signature> signatures(const Preorder& p) {
    std::vector<Signature> s(p.n);
    auto h = heights(p);
    for (int i = 0; i < p.n; ++i) s[i] = {p.down[i].count(), p.up[i].count(), 0, 0, h[i]};
    for (auto [a, b] : hasse_edges(p)) {
        s[a].out_deg++;
        s[b].in_deg++;
    }
    return s;
}

}  // namespace

bool is_order_iso(const Preorder& a, const Preorder& b, const std::vector<int>& f) {
    if (a.n != b.n || static_cast<int>(f.size()) != a.n) return false;
    Subset seen(b.n);
    for (int v : f) {
        if (v < 0 || v >= b.n || seen[v]) return false;
        seen.set(v);
    }
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            if (a.leq(i, j) != b.leq(f[i], f[j])) return false;
    return true;
}

std::optional<std::vector<int>> iso_search(const Preorder& a, const Preorder& b) {
    if (a.n != b.n) return std::nullopt;
    const int n = a.n;
    auto sa = signatures(a);
    auto sb = signatures(b);
    {
        auto key = [](const Signature& s) {
            return std::make_tuple(s.down, s.up, s.in_deg, s.out_deg, s.height);
        };
        std::vector<std::tuple<std::size_t, std::size_t, int, int, int>> ka, kb;
        for (auto& s : sa) ka.push_back(key(s));
        for (auto& s : sb) kb.push_back(key(s));
        std::sort(ka.begin(), ka.end());
        std::sort(kb.begin(), kb.end());
        if (ka != kb) return std::nullopt;
    }
    std::vector<int> f(n, -1);
    Subset used(n);
    // Elements of `a` are assigned in index order and candidates tried in increasing
    // order, so the first complete assignment is the lexicographically least.
    std::function<bool(int)> go = [&](int i) {
        if (i == n) return true;
        for (int c = 0; c < n; ++c) {
            if (used[c] || !(sa[i] == sb[c])) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = a.leq(i, j) == b.leq(c, f[j]) && a.leq(j, i) == b.leq(f[j], c);
            if (!ok) continue;
            f[i] = c;
            used.set(c);
            if (go(i + 1)) return true;
            used.reset(c);
        }
        f[i] = -1;
        return false;
    };
    if (go(0)) return f;
    return std::nullopt;
}

std::vector<Subset> lower_sets_within(const Preorder& p, const Subset& within, std::size_t limit) {
    // Work over the quotient so equivalent elements enter together.
    Quotient q = poset_quotient(p);
    const Poset& P = q.poset;
    std::vector<Subset> members_of(P.n, Subset(p.n));
    for (int i = 0; i < p.n; ++i) members_of[q.map[i]].set(i);
    std::vector<int> order;
    for (int c = 0; c < P.n; ++c)
        if (members_of[c].is_subset_of(within)) order.push_back(c);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return P.down[x].count() < P.down[y].count(); });
    std::vector<Subset> out;
    Subset cur(P.n);
    bool stop = false;
    std::function<void(std::size_t)> go = [&](std::size_t k) {
        if (stop) return;
        if (k == order.size()) {
            Subset s(p.n);
            for_each_member(cur, [&](int c) { s |= members_of[c]; });
            out.push_back(std::move(s));
            if (limit == 0) {
                check_guard(out.size(), "lower-set enumeration");
            } else if (out.size() > limit) {
                stop = true;
            }
            return;
        }
        const int c = order[k];
        go(k + 1);
        Subset below = P.down[c];
        below.reset(c);
        if (below.is_subset_of(cur)) {
            cur.set(c);
            go(k + 1);
            cur.reset(c);
        }
    };
    go(0);
    normalize_family(out);
    return out;
}

void for_each_antichain(const Preorder& p, const Subset& within,
                        const std::function<void(const Subset&)>& f) {
    auto pool = members(within);
    Subset cur(p.n);
    std::size_t seen = 0;
    std::function<void(std::size_t)> go = [&](std::size_t k) {
        if (k == pool.size()) {
            check_guard(++seen, "antichain enumeration");
            f(cur);
            return;
        }
        go(k + 1);
        const int x = pool[k];
        Subset comparable = p.up[x] | p.down[x];
        if ((comparable & cur).none()) {
            cur.set(x);
            go(k + 1);
            cur.reset(x);
        }
    };
    go(0);
}

std::vector<Subset> all_lower_sets(const Preorder& p) { return lower_sets_within(p, p.all()); }

std::vector<Subset> all_upper_sets(const Preorder& p) { return lower_sets_within(opposite(p), p.all()); }

std::string hasse_dot(const Preorder& p, const std::string& name) {
    Quotient q = poset_quotient(p);
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=BT;\n";
    for (int i = 0; i < q.poset.n; ++i) os << "  n" << i << " [label=\"" << q.poset.label(i) << "\"];\n";
    for (auto [a, b] : hasse_edges(q.poset)) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace stonework
