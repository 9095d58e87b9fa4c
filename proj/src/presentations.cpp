#include "stonework/presentations.hpp"

#include "stonework/corpus.hpp"
#include "stonework/duality.hpp"
#include "stonework/spectra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace stonework {

namespace {

int join_of(const FiniteFrame& l, const std::vector<int>& f, const Subset& s) {
    int acc = l.bot;
    for_each_member(s, [&](int c) { acc = l.join(acc, f[c]); });
    return acc;
}

std::vector<int> composite(const std::vector<int>& h, const std::vector<int>& eta) {
    std::vector<int> out(eta.size());
    for (std::size_t i = 0; i < eta.size(); ++i) out[i] = h[eta[i]];
    return out;
}

std::string set_label(unsigned mask, const std::vector<std::string>& names) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (mask >> i & 1u) {
            if (!first) out += ",";
            out += names[i];
            first = false;
        }
    return out + "}";
}

}  // namespace

// ---------------------------------------------------------------------------
// filtering maps

std::string filtering_violation(const FilteringMap& m) {
    const Preorder& p = m.site.base;
    const FiniteFrame& l = m.cod;
    if (static_cast<int>(m.f.size()) != p.n) return "assignment has the wrong length";
    for (int v : m.f)
        if (v < 0 || v >= l.size()) return "assignment leaves the codomain";
    for (int a = 0; a < p.n; ++a) {
        std::string bad;
        for_each_member(p.up[a], [&](int b) {
            if (bad.empty() && !l.leq(m.f[a], m.f[b])) bad = p.label(a) + " <= " + p.label(b);
        });
        if (!bad.empty()) return "not monotone: " + bad;
    }
    if (join_of(l, m.f, p.all()) != l.top) return "unit: the join of all values is not 1";
    for (int a = 0; a < p.n; ++a)
        for (int b = a; b < p.n; ++b) {
            const int lhs = l.meet(m.f[a], m.f[b]);
            const int rhs = join_of(l, m.f, p.down[a] & p.down[b]);
            if (lhs != rhs)
                return "meets: f(" + p.label(a) + ") ∧ f(" + p.label(b) + ") differs from the join over common lower bounds";
        }
    for (int c = 0; c < p.n; ++c)
        for (const Subset& s : m.site.sieves[c])
            if (!l.leq(m.f[c], join_of(l, m.f, s)))
                return "covers: covering sieve " + subset_string(s) + " on " + p.label(c) + " is not sent to a cover";
    return {};
}

bool is_j_filtering(const FilteringMap& m) { return filtering_violation(m).empty(); }

FilteringMap eta_map(const GrothendieckTopology& j) {
    FilteringMap m;
    m.site = j;
    m.cod = ideal_frame(j);
    m.f.resize(j.base.n);
    for (int c = 0; c < j.base.n; ++c) m.f[c] = m.cod.find(principal_j_ideal(j, c));
    return m;
}

FrameHom extend_filtering(const FilteringMap& m) {
    if (auto v = filtering_violation(m); !v.empty()) throw DomainError("map is not J-filtering: " + v);
    FrameHom h;
    h.dom = ideal_frame(m.site);
    h.cod = m.cod;
    h.f.resize(h.dom.size());
    for (int i = 0; i < h.dom.size(); ++i) h.f[i] = join_of(m.cod, m.f, h.dom.sets[i]);
    if (auto v = frame_hom_violation(h.dom, h.cod, h.f); !v.empty())
        throw std::logic_error("extension of a filtering map is not a frame hom: " + v);
    for (int c = 0; c < m.site.base.n; ++c)
        if (h.f[h.dom.find(principal_j_ideal(m.site, c))] != m.f[c])
            throw std::logic_error("extension does not restrict to f along eta");
    return h;
}

// ---------------------------------------------------------------------------
// free structures

Poset free_meet_semilattice(const std::vector<std::string>& generators) {
    const int n = static_cast<int>(generators.size());
    if (n > 20) throw GuardError("free meet-semilattice on more than 20 generators");
    const int size = 1 << n;
    check_guard(static_cast<std::size_t>(size), "free meet-semilattice");
    std::vector<Subset> up(size, Subset(size));
    std::vector<std::string> labels(size);
    for (int u = 0; u < size; ++u) {
        labels[u] = set_label(static_cast<unsigned>(u), generators);
        // u ≤ v iff u ⊇ v
        for (int v = 0; v < size; ++v)
            if ((u & v) == v) up[u].set(v);
    }
    return preorder_from_up_sets(std::move(up), std::move(labels));
}

FreeFrame free_frame_on_set(const std::vector<std::string>& generators) {
    const int n = static_cast<int>(generators.size());
    Poset pfin = opposite(free_meet_semilattice(generators));
    FreeFrame out;
    out.frame = upper_sets(pfin);
    for (int a = 0; a < n; ++a) {
        Subset s(pfin.n);
        for (int u = 0; u < pfin.n; ++u)
            if (u >> a & 1) s.set(u);
        out.eta.push_back(out.frame.find(s));
    }
    return out;
}

namespace {

struct CjslRules {
    int m = 0;     // |A|
    int size = 0;  // 2^m
    std::vector<std::pair<int, std::vector<int>>> rules;  // U covered by these supersets
};

std::vector<unsigned> antichain_masks(const FiniteFrame& a) {
    std::vector<unsigned> out;
    const int m = a.size();
    for (unsigned s = 0; s < (1u << m); ++s) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = i + 1; j < m && ok; ++j)
                if ((s >> i & 1u) && (s >> j & 1u) && (a.leq(i, j) || a.leq(j, i))) ok = false;
        if (ok) out.push_back(s);
    }
    return out;
}

CjslRules cjsl_rules(const FiniteFrame& a) {
    CjslRules r;
    r.m = a.size();
    if (r.m > 16) throw GuardError("free frame on a join-semilattice with more than 16 elements");
    r.size = 1 << r.m;
    check_guard(static_cast<std::size_t>(r.size), "P_fin of a join-semilattice");
    const auto chains = antichain_masks(a);
    for (int u = 0; u < r.size; ++u)
        for (unsigned s : chains) {
            if (s & static_cast<unsigned>(u)) continue;
            int join = a.bot;
            for (int i = 0; i < r.m; ++i)
                if (s >> i & 1u) join = a.join(join, i);
            if (!(u >> join & 1)) continue;
            std::vector<int> targets;
            for (int i = 0; i < r.m; ++i)
                if (s >> i & 1u) targets.push_back(u | (1 << i));
            r.rules.emplace_back(u, std::move(targets));
        }
    // F_b entails F_a for b ≤ a: U is covered by U ∪ {a} once U holds some b ≤ a.
    for (int u = 0; u < r.size; ++u)
        for (int x = 0; x < r.m; ++x) {
            if (u >> x & 1) continue;
            for (int b = 0; b < r.m; ++b)
                if ((u >> b & 1) && a.leq(b, x)) {
                    r.rules.emplace_back(u, std::vector<int>{u | (1 << x)});
                    break;
                }
        }
    return r;
}

Subset cjsl_close(const CjslRules& r, Subset x) {
    for (bool changed = true; changed;) {
        changed = false;
        for (int u = 0; u < r.size; ++u) {
            if (x[u]) continue;
            for (int b = 0; b < r.m; ++b)
                if ((u >> b & 1) && x[u ^ (1 << b)]) {
                    x.set(u);
                    break;
                }
        }
        for (const auto& [u, targets] : r.rules) {
            if (x[u]) continue;
            if (std::all_of(targets.begin(), targets.end(), [&](int t) { return x[t]; })) {
                x.set(u);
                changed = true;
            }
        }
    }
    return x;
}

}  // namespace

Coverage cjsl_coverage(const FiniteFrame& a) {
    CjslRules r = cjsl_rules(a);
    std::vector<std::string> names;
    for (int i = 0; i < r.m; ++i) names.push_back(a.carrier.label(i));
    Poset base = free_meet_semilattice(names);
    std::vector<std::vector<Subset>> covers(r.size);
    for (const auto& [u, targets] : r.rules) {
        Subset fam(r.size);
        for (int t : targets) fam.set(t);
        covers[u].push_back(fam);
    }
    return make_coverage(base, std::move(covers));
}

FreeFrame free_frame_on_cjsl(const FiniteFrame& a) {
    const CjslRules r = cjsl_rules(a);
    std::vector<Subset> gens;
    for (int u = 0; u < r.size; ++u) gens.push_back(cjsl_close(r, singleton(r.size, u)));
    std::set<Subset, SubsetLess> seen;
    std::vector<Subset> queue{cjsl_close(r, Subset(r.size))};
    seen.insert(queue.front());
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (const Subset& g : gens) {
            if (g.is_subset_of(queue[i])) continue;
            Subset next = cjsl_close(r, queue[i] | g);
            if (seen.insert(next).second) {
                check_guard(seen.size(), "free frame on a join-semilattice");
                queue.push_back(std::move(next));
            }
        }
    }
    FreeFrame out;
    out.frame = frame_from_family(std::vector<Subset>(seen.begin(), seen.end()),
                                  [&r](const Subset& s) { return cjsl_close(r, s); });
    for (int x = 0; x < r.m; ++x) {
        Subset ia(r.size);
        for (int u = 0; u < r.size; ++u)
            if (u >> x & 1) ia.set(u);
        out.eta.push_back(out.frame.find(cjsl_close(r, ia)));
    }
    return out;
}

FreeFrame free_frame_on_jsl(const FiniteFrame& a) { return free_frame_on_cjsl(a); }

FiniteFrame jsl_spatial_frame(const FiniteFrame& a) {
    const int m = a.size();
    if (m > 20) throw GuardError("spatial construction on more than 20 elements");
    std::vector<unsigned> points;
    for (unsigned u = 0; u < (1u << m); ++u) {
        if (u >> a.bot & 1u) continue;
        bool ok = true;
        for (int x = 0; x < m && ok; ++x)
            for (int y = 0; y < m && ok; ++y) {
                const bool lhs = u >> a.join(x, y) & 1u;
                const bool rhs = (u >> x & 1u) || (u >> y & 1u);
                ok = lhs == rhs;
            }
        if (ok) points.push_back(u);
    }
    std::vector<Subset> subbasis;
    for (int x = 0; x < m; ++x) {
        Subset s(points.size());
        for (std::size_t p = 0; p < points.size(); ++p)
            if (points[p] >> x & 1u) s.set(p);
        subbasis.push_back(s);
    }
    return open_frame(space_from_subbasis(static_cast<int>(points.size()), subbasis));
}

std::vector<int> cjsl_extension(const FreeFrame& l, const FiniteFrame& a, const FiniteFrame& target,
                                const std::vector<int>& f) {
    const int m = a.size();
    std::vector<int> g(l.frame.size());
    for (int i = 0; i < l.frame.size(); ++i) {
        int acc = target.bot;
        for_each_member(l.frame.sets[i], [&](int u) {
            int meet = target.top;
            for (int x = 0; x < m; ++x)
                if (u >> x & 1) meet = target.meet(meet, f[x]);
            acc = target.join(acc, meet);
        });
        g[i] = acc;
    }
    return g;
}

// ---------------------------------------------------------------------------
// presented lattices

namespace {

// Least congruence containing `pairs` for the given binary operations.
std::vector<int> congruence_closure(int n, const std::vector<std::function<int(int, int)>>& ops,
                                    std::vector<std::pair<int, int>> pairs) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    while (!pairs.empty()) {
        auto [a, b] = pairs.back();
        pairs.pop_back();
        const int ra = find(a), rb = find(b);
        if (ra == rb) continue;
        parent[std::max(ra, rb)] = std::min(ra, rb);
        for (int c = 0; c < n; ++c)
            for (const auto& op : ops) pairs.emplace_back(op(a, c), op(b, c));
    }
    for (int x = 0; x < n; ++x) parent[x] = find(x);
    return parent;
}

bool mentions_join(const Term& t) {
    if (t.op == Term::Op::Join || t.op == Term::Op::Bottom) return true;
    return std::any_of(t.args.begin(), t.args.end(), mentions_join);
}

void collect_generators(const Term& t, std::set<int>& out) {
    if (t.op == Term::Op::Gen) out.insert(t.gen);
    for (const auto& a : t.args) collect_generators(a, out);
}

template <class Value, class Meet, class Join>
Value eval_term(const Term& t, const std::vector<Value>& gens, Value top, Value bot, Meet meet, Join join) {
    switch (t.op) {
        case Term::Op::Gen: return gens.at(t.gen);
        case Term::Op::Top: return top;
        case Term::Op::Bottom: return bot;
        case Term::Op::Meet: {
            Value acc = top;
            for (const auto& a : t.args) acc = meet(acc, eval_term(a, gens, top, bot, meet, join));
            return acc;
        }
        case Term::Op::Join: {
            Value acc = bot;
            for (const auto& a : t.args) acc = join(acc, eval_term(a, gens, top, bot, meet, join));
            return acc;
        }
    }
    return top;
}

std::string dnf_label(std::uint64_t table, int n, const std::vector<std::string>& names) {
    std::vector<std::string> clauses;
    for (int x = 0; x < (1 << n); ++x) {
        if (!(table >> x & 1u)) continue;
        bool minimal = true;
        for (int b = 0; b < n && minimal; ++b)
            if ((x >> b & 1) && (table >> (x ^ (1 << b)) & 1u)) minimal = false;
        if (!minimal) continue;
        if (x == 0) return "1";
        std::string clause;
        for (int b = 0; b < n; ++b)
            if (x >> b & 1) clause += (clause.empty() ? "" : " & ") + names[b];
        clauses.push_back(clause);
    }
    if (clauses.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < clauses.size(); ++i) out += (i ? " | " : "") + clauses[i];
    return out;
}

std::string meet_label(unsigned mask, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t b = 0; b < names.size(); ++b)
        if (mask >> b & 1u) out += (out.empty() ? "" : " & ") + names[b];
    return out.empty() ? "1" : out;
}

// Quotient of a finite lattice (given by its meet) by a congruence, ordered by
// [a] ≤ [b] iff a∧b ~ a. Labels come from the least member of each class.
void build_quotient(PresentedLattice& out, int n, const std::function<int(int, int)>& meet,
                    const std::vector<int>& cls, const std::vector<int>& least_of_class,
                    const std::function<std::string(int)>& label, const std::vector<int>& gen_elems) {
    std::vector<int> reps;
    std::vector<int> index(n, -1);
    for (int x = 0; x < n; ++x)
        if (cls[x] == x) {
            index[x] = static_cast<int>(reps.size());
            reps.push_back(x);
        }
    const int k = static_cast<int>(reps.size());
    std::vector<Subset> up(k, Subset(k));
    std::vector<std::string> labels(k);
    for (int i = 0; i < k; ++i) {
        labels[i] = label(least_of_class[reps[i]]);
        for (int j = 0; j < k; ++j)
            if (cls[meet(reps[i], reps[j])] == reps[i]) up[i].set(j);
    }
    out.labels = labels;
    out.structure = lattice_from_poset(preorder_from_up_sets(std::move(up), std::move(labels)));
    for (int g : gen_elems) out.generator_images.push_back(index[cls[g]]);
}

void present_horn_free(PresentedLattice& out) {
    const Presentation& p = out.presentation;
    const int n = static_cast<int>(p.generators.size());
    if (n > 20) throw GuardError("horn presentation with more than 20 generators");
    const int size = 1 << n;
    check_guard(static_cast<std::size_t>(size), "free meet-semilattice");
    std::vector<unsigned> gens;
    for (int i = 0; i < n; ++i) gens.push_back(1u << i);
    auto meet = [](unsigned a, unsigned b) { return a | b; };
    auto join = [](unsigned, unsigned) -> unsigned { throw DomainError("horn terms cannot use joins or 0"); };
    std::vector<std::pair<int, int>> pairs;
    for (const auto& r : p.relations) {
        const unsigned a = eval_term<unsigned>(r.lhs, gens, 0u, 0u, meet, join);
        const unsigned b = eval_term<unsigned>(r.rhs, gens, 0u, 0u, meet, join);
        pairs.emplace_back(static_cast<int>(a), static_cast<int>(r.equality ? b : (a | b)));
    }
    auto op = [](int a, int b) { return a | b; };
    auto cls = congruence_closure(size, {op}, pairs);
    std::vector<int> least(size, 0);
    for (int x = 0; x < size; ++x) least[cls[x]] |= x;  // least in reverse inclusion = union
    std::vector<int> gen_elems(gens.begin(), gens.end());
    build_quotient(out, size, op, cls, least,
                   [&](int x) { return meet_label(static_cast<unsigned>(x), p.generators); }, gen_elems);
    out.free_size = size;
    out.route = "congruence";
}

void present_coherent_free(PresentedLattice& out) {
    const Presentation& p = out.presentation;
    const int n = static_cast<int>(p.generators.size());
    if (n > 5) throw GuardError("free distributive lattice on more than 5 generators");
    const int points = 1 << n;
    const std::uint64_t all = points == 64 ? ~0ull : ((1ull << points) - 1);
    std::vector<std::uint64_t> gens(n, 0);
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < points; ++x)
            if (x >> i & 1) gens[i] |= 1ull << x;
    // Monotone Boolean functions: close the generators, 0 and 1 under ∧ and ∨.
    std::vector<std::uint64_t> elems{0, all};
    std::unordered_map<std::uint64_t, int> index{{0, 0}, {all, 1}};
    for (auto g : gens)
        if (index.emplace(g, static_cast<int>(elems.size())).second) elems.push_back(g);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            for (std::uint64_t v : {elems[i] & elems[j], elems[i] | elems[j]})
                if (index.emplace(v, static_cast<int>(elems.size())).second) {
                    elems.push_back(v);
                    check_guard(elems.size(), "free distributive lattice");
                }
    const int size = static_cast<int>(elems.size());
    auto meet = [&](int a, int b) { return index.at(elems[a] & elems[b]); };
    auto join = [&](int a, int b) { return index.at(elems[a] | elems[b]); };
    std::vector<int> gen_elems;
    for (auto g : gens) gen_elems.push_back(index.at(g));
    std::vector<std::pair<int, int>> pairs;
    for (const auto& r : p.relations) {
        const int a = eval_term<int>(r.lhs, gen_elems, 1, 0, meet, join);
        const int b = eval_term<int>(r.rhs, gen_elems, 1, 0, meet, join);
        pairs.emplace_back(a, r.equality ? b : meet(a, b));
    }
    auto cls = congruence_closure(size, {meet, join}, pairs);
    std::vector<std::uint64_t> least(size, all);
    for (int x = 0; x < size; ++x) least[cls[x]] &= elems[x];
    std::vector<int> least_idx(size, 0);
    for (int x = 0; x < size; ++x)
        if (cls[x] == x) least_idx[x] = index.at(least[x]);
    build_quotient(out, size, meet, cls, least_idx,
                   [&](int x) { return dnf_label(elems[x], n, p.generators); }, gen_elems);
    out.free_size = size;
    out.route = "congruence";
}

// Kleene evaluation: 0, 1 or 2 for undetermined.
int kleene(const Term& t, const std::vector<int>& v) {
    switch (t.op) {
        case Term::Op::Gen: return v[t.gen];
        case Term::Op::Top: return 1;
        case Term::Op::Bottom: return 0;
        case Term::Op::Meet: {
            int acc = 1;
            for (const auto& a : t.args) {
                const int x = kleene(a, v);
                if (x == 0) return 0;
                if (x == 2) acc = 2;
            }
            return acc;
        }
        case Term::Op::Join: {
            int acc = 0;
            for (const auto& a : t.args) {
                const int x = kleene(a, v);
                if (x == 1) return 1;
                if (x == 2) acc = 2;
            }
            return acc;
        }
    }
    return 2;
}

bool refuted(const Relation& r, const std::vector<int>& v) {
    const int a = kleene(r.lhs, v), b = kleene(r.rhs, v);
    if (a == 1 && b == 0) return true;
    return r.equality && a == 0 && b == 1;
}

std::vector<std::vector<bool>> enumerate_models(const Presentation& p) {
    const int n = static_cast<int>(p.generators.size());
    std::vector<std::vector<int>> touching(n + 1);
    for (int i = 0; i < static_cast<int>(p.relations.size()); ++i) {
        std::set<int> gens;
        collect_generators(p.relations[i].lhs, gens);
        collect_generators(p.relations[i].rhs, gens);
        if (gens.empty()) touching[n].push_back(i);
        for (int g : gens) touching[g].push_back(i);
    }
    std::vector<std::vector<bool>> models;
    std::vector<int> v(n, 2);
    for (int i : touching[n])
        if (refuted(p.relations[i], v)) return models;
    std::function<void(int)> go = [&](int k) {
        if (k == n) {
            models.emplace_back(v.begin(), v.end());
            check_guard(models.size(), "models of a presentation");
            return;
        }
        for (int value : {0, 1}) {
            v[k] = value;
            bool ok = true;
            for (int i : touching[k])
                if (refuted(p.relations[i], v)) {
                    ok = false;
                    break;
                }
            if (ok) go(k + 1);
        }
        v[k] = 2;
    };
    go(0);
    return models;
}

void present_by_models(PresentedLattice& out) {
    const Presentation& p = out.presentation;
    const bool horn = p.logic == Logic::Horn;
    const int n = static_cast<int>(p.generators.size());
    const auto models = enumerate_models(p);
    const int k = static_cast<int>(models.size());
    std::vector<Subset> gens(n, Subset(k));
    for (int m = 0; m < k; ++m)
        for (int g = 0; g < n; ++g)
            if (models[m][g]) gens[g].set(m);
    std::map<Subset, int, SubsetLess> index;
    std::vector<Subset> order;
    std::vector<std::string> names;
    auto add = [&](const Subset& s, const std::function<std::string()>& name) {
        if (index.emplace(s, static_cast<int>(order.size())).second) {
            order.push_back(s);
            names.push_back(name());
            check_guard(order.size(), "presented lattice");
        }
    };
    add(full_set(k), [] { return std::string("1"); });
    if (!horn) add(Subset(k), [] { return std::string("0"); });
    for (int g = 0; g < n; ++g) add(gens[g], [&] { return p.generators[g]; });
    auto wrap = [](const std::string& s) { return s.find('|') == std::string::npos ? s : "(" + s + ")"; };
    // Meets of generators first, then (coherent only) unions of those meets.
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int g = 0; g < n; ++g) add(order[i] & gens[g], [&] { return wrap(names[i]) + " & " + p.generators[g]; });
    if (!horn) {
        const std::vector<Subset> meets(order.begin(), order.end());
        const std::vector<std::string> meet_names(names.begin(), names.end());
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t m = 0; m < meets.size(); ++m)
                add(order[i] | meets[m], [&] { return names[i] + " | " + meet_names[m]; });
    }
    std::vector<Subset> family(order.begin(), order.end());
    normalize_family(family);
    auto closure = [&family](const Subset& s) {
        Subset acc = full_set(s.size());
        for (const auto& m : family)
            if (s.is_subset_of(m)) acc &= m;
        return acc;
    };
    out.structure = horn ? frame_from_family(family, closure) : frame_from_union_family(family);
    out.labels.clear();
    for (const auto& s : out.structure.sets) out.labels.push_back(names[index.at(s)]);
    out.structure.carrier.labels = out.labels;
    for (int g = 0; g < n; ++g) out.generator_images.push_back(out.structure.find(gens[g]));
    out.route = "models";
    out.models = k;
}

}  // namespace

int PresentedLattice::evaluate(const Term& t) const {
    const FiniteFrame& l = structure;
    if (presentation.logic == Logic::Horn && mentions_join(t))
        throw DomainError("ill-typed term for horn logic: " + term_string(t, presentation.generators));
    std::set<int> gens;
    collect_generators(t, gens);
    if (!gens.empty() && (*gens.begin() < 0 || *gens.rbegin() >= static_cast<int>(generator_images.size())))
        throw DomainError("term mentions an undeclared generator");
    return eval_term<int>(
        t, generator_images, l.top, l.bot, [&](int a, int b) { return l.meet(a, b); },
        [&](int a, int b) { return l.join(a, b); });
}

bool PresentedLattice::entails(const Term& lhs, const Term& rhs) const {
    return structure.leq(evaluate(lhs), evaluate(rhs));
}

bool PresentedLattice::holds(const Relation& r) const {
    const int a = evaluate(r.lhs), b = evaluate(r.rhs);
    return r.equality ? a == b : structure.leq(a, b);
}

bool PresentedLattice::entails(const std::string& relation) const {
    return holds(parse_relation(relation, presentation.generators));
}

PresentedLattice present_lattice(const Presentation& p, const PresentOptions& options) {
    if (auto v = fragment_violation(p); !v.empty()) throw DomainError(v);
    for (const auto& r : p.relations) {
        std::set<int> gens;
        collect_generators(r.lhs, gens);
        collect_generators(r.rhs, gens);
        if (!gens.empty() && (*gens.begin() < 0 || *gens.rbegin() >= static_cast<int>(p.generators.size())))
            throw DomainError("relation mentions an undeclared generator");
    }
    PresentedLattice out;
    out.presentation = p;
    const int n = static_cast<int>(p.generators.size());
    if (p.logic == Logic::Horn) {
        if (n <= 16 || !options.semantic_route)
            present_horn_free(out);
        else
            present_by_models(out);
        return out;
    }
    if (n <= options.max_free_generators) {
        present_coherent_free(out);
    } else if (options.semantic_route) {
        present_by_models(out);
    } else {
        throw DomainError("generator bound exceeded: " + std::to_string(n) + " generators, free distributive lattice "
                          "materialized for at most " + std::to_string(options.max_free_generators));
    }
    return out;
}

// ---------------------------------------------------------------------------
// reflection units

namespace {

std::vector<FiniteFrame> boolean_targets(int max_target) {
    std::vector<FiniteFrame> out;
    for (int k = 0; (1 << k) <= max_target; ++k) out.push_back(lower_sets(antichain(k)));
    return out;
}

// Unique-factorization bookkeeping: for each arrow f out of the source, the number of
// frame homs h out of the target with h∘unit = f.
struct Factorization {
    std::map<std::vector<int>, int> counts;
    void add_homs(const std::vector<std::vector<int>>& homs, const std::vector<int>& unit) {
        for (const auto& h : homs) ++counts[composite(h, unit)];
    }
    int count(const std::vector<int>& f) const {
        auto it = counts.find(f);
        return it == counts.end() ? 0 : it->second;
    }
};

void ideal_reflection(ReflectionReport& r, const Poset& x, int max_target, bool coherent) {
    r.source = lattice_from_poset(x);
    GrothendieckTopology j = coherent ? saturate(named_coverage(x, "coherent")) : trivial_topology(x);
    FilteringMap eta = eta_map(j);
    r.target = eta.cod;
    r.unit = eta.f;
    r.unit_ok = is_j_filtering(eta);
    const HomKind kind = coherent ? kFrameHom : kMeetHom;
    r.universal = r.unit_ok;
    for (const FiniteFrame& l : distributive_lattices_up_to(max_target)) {
        ++r.targets_checked;
        Factorization fac;
        const auto frame_homs = enumerate_homs(r.target, l);
        fac.add_homs(frame_homs, r.unit);
        const auto arrows = enumerate_homs(r.source, l, kind);
        if (arrows.size() != frame_homs.size()) r.universal = false;
        for (const auto& f : arrows) {
            ++r.arrows_checked;
            FilteringMap m{j, l, f};
            if (!is_j_filtering(m) || fac.count(f) != 1) {
                r.universal = false;
                continue;
            }
            const auto ext = extend_filtering(m).f;
            if (std::find(frame_homs.begin(), frame_homs.end(), ext) == frame_homs.end()) r.universal = false;
        }
    }
    r.detail = std::string(coherent ? "lattice" : "meet-semilattice") + " homs extend uniquely along c ↦ ↓c";
}

void bool_reflection(ReflectionReport& r, const Poset& x, int max_target) {
    r.source = frame_from_poset(x);
    const FiniteFrame& l = r.source;
    const Subset comp = complemented_elements(l);
    r.unit = members(comp);
    bool sublattice = comp[l.bot] && comp[l.top];
    for (int a : r.unit)
        for (int b : r.unit) sublattice = sublattice && comp[l.meet(a, b)] && comp[l.join(a, b)];
    r.target = lattice_from_poset(suborder(l.carrier, r.unit));
    r.unit_ok = sublattice && is_distributive(r.target) &&
                complemented_elements(r.target).count() == static_cast<std::size_t>(r.target.size());
    r.universal = r.unit_ok;
    for (const FiniteFrame& b : boolean_targets(max_target)) {
        ++r.targets_checked;
        GrothendieckTopology jb = saturate(named_coverage(b.carrier, "coherent"));
        FilteringMap eta = eta_map(jb);
        std::set<std::vector<int>> seen;
        for (const auto& h : enumerate_homs(eta.cod, l)) {
            ++r.arrows_checked;
            std::vector<int> g = composite(h, eta.f);
            for (int& v : g) {
                auto it = std::find(r.unit.begin(), r.unit.end(), v);
                if (it == r.unit.end()) {
                    r.universal = false;
                    v = 0;
                } else {
                    v = static_cast<int>(it - r.unit.begin());
                }
            }
            if (!seen.insert(g).second) r.universal = false;
        }
        const auto boolean_homs = enumerate_homs(b, r.target);
        if (std::set<std::vector<int>>(boolean_homs.begin(), boolean_homs.end()) != seen) r.universal = false;
    }
    r.detail = "frame homs Id(B) -> L biject with Boolean homs B -> L_c";
}

// ξ_f(S) = ⋃_{p∈S} unit_G(f(p)) on the lower sets of the chosen generators; completeness
// of ξ_f (preservation of 1 and binary meets) selects the admissible arrows.
bool xi_complete(const FiniteFrame& src_sets, const std::vector<int>& gens, const FiniteFrame& g_sets,
                 const std::vector<Subset>& unit_g, const std::vector<int>& f) {
    auto xi = [&](const Subset& s) {
        Subset acc(g_sets.sets.empty() ? 0 : g_sets.sets.front().size());
        for_each_member(s, [&](int i) { acc |= unit_g[f[gens[i]]]; });
        return acc;
    };
    if (xi(src_sets.sets[src_sets.top]) != g_sets.sets[g_sets.top]) return false;
    for (int a = 0; a < src_sets.size(); ++a)
        for (int b = a + 1; b < src_sets.size(); ++b)
            if (xi(src_sets.sets[src_sets.meet(a, b)]) != (xi(src_sets.sets[a]) & xi(src_sets.sets[b]))) return false;
    return true;
}

struct Decomposition {
    std::vector<int> gens;        // indecomposables or atoms, as positions in F
    FiniteFrame sets;             // lower sets of gens (or powerset)
    std::vector<Subset> unit;     // F -> subsets of gens
    std::vector<int> dis;         // positions in `sets` forming the unit's codomain
    bool meet_closed = true;
};

Decomposition decompose(const FiniteFrame& f, bool atomic) {
    Decomposition d;
    d.gens = atomic ? atoms(f) : members(irreducible_elements(f, "indecomposable"));
    d.sets = atomic ? lower_sets(antichain(static_cast<int>(d.gens.size()))) : lower_sets(suborder(f.carrier, d.gens));
    for (int a = 0; a < f.size(); ++a) {
        Subset s(d.gens.size());
        for (std::size_t i = 0; i < d.gens.size(); ++i)
            if (f.leq(d.gens[i], a)) s.set(i);
        d.unit.push_back(s);
    }
    if (atomic) {
        d.dis.resize(d.sets.size());
        std::iota(d.dis.begin(), d.dis.end(), 0);
    } else {
        d.dis = c_compact_elements(d.sets, {CompactTag::FiniteDisjoint, 0}).elements;
        for (int a : d.dis)
            for (int b : d.dis)
                if (std::find(d.dis.begin(), d.dis.end(), d.sets.meet(a, b)) == d.dis.end()) d.meet_closed = false;
    }
    return d;
}

void decomposition_reflection(ReflectionReport& r, const Poset& x, int max_target, bool atomic) {
    r.source = frame_from_poset(x);
    const FiniteFrame& f = r.source;
    Decomposition d = decompose(f, atomic);
    r.target = lattice_from_poset(suborder(d.sets.carrier, d.dis));
    r.unit.clear();
    bool lands = true;
    for (int a = 0; a < f.size(); ++a) {
        auto it = std::find(d.dis.begin(), d.dis.end(), d.sets.find(d.unit[a]));
        if (it == d.dis.end()) {
            lands = false;
            r.unit.push_back(0);
        } else {
            r.unit.push_back(static_cast<int>(it - d.dis.begin()));
        }
    }
    bool preserves = lands && d.meet_closed;
    if (preserves && atomic) preserves = frame_hom_violation(f, r.target, r.unit).empty();
    if (preserves && !atomic) {
        // meets, 1, 0 and pairwise disjoint joins
        preserves = r.unit[f.top] == r.target.top && r.unit[f.bot] == r.target.bot;
        for (int a = 0; a < f.size() && preserves; ++a)
            for (int b = 0; b < f.size() && preserves; ++b) {
                if (r.unit[f.meet(a, b)] != r.target.meet(r.unit[a], r.unit[b])) preserves = false;
                if (f.meet(a, b) == f.bot && r.unit[f.join(a, b)] != r.target.join(r.unit[a], r.unit[b]))
                    preserves = false;
            }
    }
    r.unit_ok = preserves;
    std::vector<int> sorted = r.unit;
    std::sort(sorted.begin(), sorted.end());
    const bool iso = lands && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                     static_cast<int>(sorted.size()) == r.target.size();
    r.universal = r.unit_ok;
    const auto targets = atomic ? boolean_targets(max_target) : distributive_lattices_up_to(max_target);
    int skipped = 0;
    for (const FiniteFrame& g : targets) {
        Decomposition dg = decompose(g, atomic);
        if (!atomic) {
            // only disjunctive targets: the unit of g must be an isomorphism onto Dis
            std::set<int> image;
            for (const auto& s : dg.unit) image.insert(dg.sets.find(s));
            if (!dg.meet_closed || image != std::set<int>(dg.dis.begin(), dg.dis.end()) ||
                static_cast<int>(image.size()) != g.size())
                continue;
        }
        ++r.targets_checked;
        Factorization fac;
        if (r.unit_ok) fac.add_homs(enumerate_homs(r.target, g), r.unit);
        for (const auto& beta : enumerate_homs(f, g)) {
            if (!xi_complete(d.sets, d.gens, dg.sets, dg.unit, beta)) {
                ++skipped;
                continue;
            }
            ++r.arrows_checked;
            if (fac.count(beta) != 1) r.universal = false;
        }
    }
    r.detail = std::string(iso ? "unit is an isomorphism" : "unit is not an isomorphism") + "; " +
               std::to_string(skipped) + " arrows skipped as not complete on the decomposition";
    if (!atomic && !d.meet_closed) r.detail += "; Dis is not closed under meets";
}

}  // namespace

std::vector<std::string> reflection_kinds() { return {"mslat", "dlat", "bool", "disjunctive", "atomic"}; }

ReflectionReport reflection_unit(const std::string& kind, const Poset& x, int max_target) {
    ReflectionReport r;
    r.kind = kind;
    if (!x.is_poset()) throw DomainError("reflection needs a poset");
    if (kind == "mslat") {
        if (auto chk = check_meet_semilattice(x); !chk) throw DomainError("mslat reflection: " + chk.missing);
        ideal_reflection(r, x, max_target, false);
    } else if (kind == "dlat") {
        if (!check_bounded_lattice(x) || !is_distributive(lattice_from_poset(x)))
            throw DomainError("dlat reflection: not a distributive lattice");
        ideal_reflection(r, x, max_target, true);
    } else if (kind == "bool") {
        bool_reflection(r, x, max_target);
    } else if (kind == "disjunctive") {
        decomposition_reflection(r, x, max_target, false);
    } else if (kind == "atomic") {
        decomposition_reflection(r, x, max_target, true);
    } else {
        throw DomainError("unknown reflection kind '" + kind + "'");
    }
    return r;
}

}  // namespace stonework
