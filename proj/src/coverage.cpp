#include "stonework/coverage.hpp"

#include <algorithm>
#include <deque>
#include <cctype>
#include <functional>
#include <map>
#include <set>

namespace stonework {

namespace {

StructureCheck fail(std::string what) { return StructureCheck{false, std::move(what)}; }

std::string family_string(const Preorder& p, const Subset& s) {
    std::string out = "{";
    bool first = true;
    for_each_member(s, [&](int i) {
        if (!first) out += ",";
        out += p.label(i);
        first = false;
    });
    return out + "}";
}

void require_poset(const Preorder& p, const std::string& kind) {
    if (!p.is_poset()) throw DomainError(kind + " coverage needs a poset, got a preorder");
}

// Families sorted and deduplicated; every family is an antichain with supremum c.
std::vector<Subset> antichain_families(const Preorder& p, int c,
                                       const std::function<bool(const Subset&)>& pred) {
    std::vector<Subset> out;
    for_each_antichain(p, p.down[c], [&](const Subset& t) {
        auto s = sup_of(p, t);
        if (s && *s == c && pred(t)) out.push_back(t);
    });
    normalize_family(out);
    return out;
}

std::optional<int> meet_of(const Preorder& p, int a, int b) {
    Subset s(p.n);
    s.set(a);
    s.set(b);
    return inf_of(p, s);
}

std::optional<int> bottom_of(const Preorder& p) {
    for (int i = 0; i < p.n; ++i)
        if (p.up[i].all()) return i;
    return std::nullopt;
}

// Pairwise disjoint families of nonzero elements; disjoint means the meet is 0.
void for_each_disjoint_family(const Preorder& p, int bot, const Subset& within,
                              const std::function<void(const Subset&)>& f) {
    std::vector<int> pool;
    for_each_member(within, [&](int x) {
        if (x != bot) pool.push_back(x);
    });
    Subset cur(p.n);
    std::size_t seen = 0;
    std::function<void(std::size_t)> go = [&](std::size_t k) {
        if (k == pool.size()) {
            check_guard(++seen, "disjoint family enumeration");
            f(cur);
            return;
        }
        go(k + 1);
        const int x = pool[k];
        bool ok = true;
        for_each_member(cur, [&](int y) {
            auto m = meet_of(p, x, y);
            if (!m || *m != bot) ok = false;
        });
        if (ok) {
            cur.set(x);
            go(k + 1);
            cur.reset(x);
        }
    };
    go(0);
}

// Joins of every subset of `gens` exist and distribute over binary meets.
StructureCheck check_generated_joins(const Preorder& p, const std::vector<int>& gens,
                                     const std::string& what) {
    if (gens.size() > 20) throw GuardError("too many generators for " + what + " join check");
    const std::size_t total = std::size_t{1} << gens.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        Subset t(p.n);
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (mask >> i & 1) t.set(gens[i]);
        auto s = sup_of(p, t);
        if (!s) return fail("join of " + what + " " + family_string(p, t));
        for (int a = 0; a < p.n; ++a) {
            Subset image(p.n);
            for_each_member(t, [&](int x) { image.set(*meet_of(p, a, x)); });
            auto rhs = sup_of(p, image);
            if (!rhs || *rhs != *meet_of(p, a, *s))
                return fail("meets distributing over the join of " + what + " " + family_string(p, t));
        }
    }
    return {};
}

std::vector<int> atoms_of(const Preorder& p, int bot) {
    std::vector<int> out;
    for (int x = 0; x < p.n; ++x) {
        if (x == bot) continue;
        Subset below = p.down[x];
        below.reset(x);
        below.reset(bot);
        if (below.none()) out.push_back(x);
    }
    return out;
}

// Canonical sieves: lower S ⊆ (c)↓ with d = sup(S ∩ (d)↓) for every d ≤ c.
std::vector<Subset> canonical_sieves(const Preorder& p, int c) {
    std::vector<Subset> out;
    auto below = members(p.down[c]);
    for (const Subset& s : lower_sets_within(p, p.down[c])) {
        bool ok = true;
        for (int d : below) {
            auto sup = sup_of(p, s & p.down[d]);
            if (!sup || *sup != d) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(s);
    }
    return out;
}

int parse_k(const std::string& kind) {
    const std::string digits = kind.substr(2);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        throw DomainError("bad k-covering kind '" + kind + "', expected k:<n>");
    int k = std::stoi(digits);
    if (k < 2) throw DomainError("k-covering needs k >= 2");
    return k;
}

}  // namespace

bool GrothendieckTopology::covers(int c, const Subset& sieve) const {
    const auto& fam = sieves[c];
    return std::binary_search(fam.begin(), fam.end(), sieve, SubsetLess{});
}

Coverage make_coverage(const Preorder& base, std::vector<std::vector<Subset>> covers) {
    if (static_cast<int>(covers.size()) != base.n) throw DomainError("coverage needs one family list per element");
    for (int c = 0; c < base.n; ++c) {
        for (const Subset& s : covers[c]) {
            if (static_cast<int>(s.size()) != base.n) throw DomainError("covering family of wrong width");
            if (!s.is_subset_of(base.down[c]))
                throw DomainError("covering family " + family_string(base, s) + " not below " + base.label(c));
        }
        normalize_family(covers[c]);
    }
    return Coverage{base, std::move(covers)};
}

StructureCheck check_meet_semilattice(const Preorder& p) {
    if (!p.is_poset()) return fail("antisymmetry");
    bool has_top = false;
    for (int i = 0; i < p.n; ++i)
        if (p.down[i].all()) has_top = true;
    if (!has_top) return fail("top element");
    for (int a = 0; a < p.n; ++a)
        for (int b = a + 1; b < p.n; ++b)
            if (!meet_of(p, a, b)) return fail("meet of " + p.label(a) + " and " + p.label(b));
    return {};
}

StructureCheck check_disjunctively_distributive(const Preorder& p) {
    if (auto m = check_meet_semilattice(p); !m) return m;
    auto bot = bottom_of(p);
    if (!bot) return fail("bottom element");
    StructureCheck result;
    for_each_disjoint_family(p, *bot, p.all(), [&](const Subset& t) {
        if (!result) return;
        auto s = sup_of(p, t);
        if (!s) {
            result = fail("join of disjoint family " + family_string(p, t));
            return;
        }
        for (int a = 0; a < p.n; ++a) {
            Subset image(p.n);
            for_each_member(t, [&](int x) { image.set(*meet_of(p, a, x)); });
            auto rhs = sup_of(p, image);
            if (!rhs || *rhs != *meet_of(p, a, *s)) {
                result = fail("meets distributing over the disjoint join " + family_string(p, t));
                return;
            }
        }
    });
    return result;
}

StructureCheck check_weakly_atomic(const Preorder& p) {
    if (auto m = check_meet_semilattice(p); !m) return m;
    auto bot = bottom_of(p);
    if (!bot) return fail("bottom element");
    return check_generated_joins(p, atoms_of(p, *bot), "atoms");
}

std::vector<int> supercompact_elements(const Preorder& p) {
    std::vector<int> out;
    for (int c = 0; c < p.n; ++c) {
        Subset strict = p.down[c];
        strict.reset(c);
        auto s = sup_of(p, strict);
        if (!s || *s != c) out.push_back(c);
    }
    return out;
}

StructureCheck check_weakly_supercompact(const Preorder& p) {
    if (auto m = check_meet_semilattice(p); !m) return m;
    if (!bottom_of(p)) return fail("bottom element");
    return check_generated_joins(p, supercompact_elements(p), "supercompact elements");
}

Coverage named_coverage(const Preorder& p, const std::string& kind) {
    std::vector<std::vector<Subset>> covers(p.n);
    if (kind == "trivial") {
        for (int c = 0; c < p.n; ++c) covers[c].push_back(singleton(p.n, c));
        return make_coverage(p, std::move(covers));
    }
    require_poset(p, kind);
    auto need = [&](const StructureCheck& s) {
        if (!s) throw DomainError(kind + " coverage: structure check failed, missing " + s.missing);
    };
    std::function<bool(const Subset&)> pred;
    if (kind == "canonical") {
        for (int c = 0; c < p.n; ++c) covers[c] = canonical_sieves(p, c);
        return make_coverage(p, std::move(covers));
    } else if (kind == "coherent") {
        need(check_bounded_lattice(p));
        need(check_distributive(lattice_from_poset(p)));
        pred = [](const Subset&) { return true; };
    } else if (kind.rfind("k:", 0) == 0) {
        const int k = parse_k(kind);
        if (k == 2) {
            need(check_meet_semilattice(p));
        } else {
            need(check_bounded_lattice(p));
            need(check_distributive(lattice_from_poset(p)));
        }
        pred = [k](const Subset& t) { return static_cast<int>(t.count()) < k; };
    } else if (kind == "disjunctive") {
        need(check_disjunctively_distributive(p));
        const int bot = *bottom_of(p);
        pred = [&p, bot](const Subset& t) {
            if (t[bot]) return false;
            bool ok = true;
            for_each_member(t, [&](int a) {
                for_each_member(t, [&](int b) {
                    if (a < b && *meet_of(p, a, b) != bot) ok = false;
                });
            });
            return ok;
        };
    } else if (kind == "atomic" || kind == "supercompact") {
        if (kind == "atomic") {
            need(check_weakly_atomic(p));
        } else {
            need(check_weakly_supercompact(p));
        }
        auto gens = kind == "atomic" ? atoms_of(p, *bottom_of(p)) : supercompact_elements(p);
        Subset g = subset_of(p.n, gens);
        pred = [g](const Subset& t) { return t.count() == 1 || t.is_subset_of(g); };
    } else if (kind == "directed") {
        need(check_meet_semilattice(p));
        // A directed antichain is a single element.
        pred = [](const Subset& t) { return t.count() == 1; };
    } else {
        throw DomainError("unknown coverage kind '" + kind + "'");
    }
    for (int c = 0; c < p.n; ++c) covers[c] = antichain_families(p, c, pred);
    return make_coverage(p, std::move(covers));
}

namespace {

// Generated sieves together with all their pullbacks; sheaves for a coverage and
// for its saturation agree only once the families are stable.
std::vector<std::vector<Subset>> stable_sieves(const Coverage& cov) {
    const Preorder& p = cov.base;
    std::vector<std::vector<Subset>> out(p.n);
    for (int c = 0; c < p.n; ++c)
        for (const Subset& fam : cov.covers[c]) {
            Subset sieve = p.down_closure(fam);
            for_each_member(p.down[c], [&](int d) { out[d].push_back(sieve & p.down[d]); });
        }
    for (auto& fams : out) normalize_family(fams);
    return out;
}

Subset close_under(const Preorder& p, const std::vector<std::vector<Subset>>& sieves, const Subset& s) {
    Subset cur = p.down_closure(s);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int d = 0; d < p.n; ++d) {
            if (cur[d]) continue;
            for (const Subset& sieve : sieves[d]) {
                if (sieve.is_subset_of(cur)) {
                    cur |= p.down[d];
                    changed = true;
                    break;
                }
            }
        }
    }
    return cur;
}

}  // namespace

Subset coverage_closure(const Coverage& cov, const Subset& s) {
    return close_under(cov.base, stable_sieves(cov), s);
}

bool is_coverage_ideal(const Coverage& cov, const Subset& s) {
    return cov.base.is_down_closed(s) && coverage_closure(cov, s) == s;
}

std::vector<Subset> coverage_ideals(const Coverage& cov) {
    auto sieves = stable_sieves(cov);
    std::vector<Subset> out;
    for (const Subset& s : all_lower_sets(cov.base))
        if (close_under(cov.base, sieves, s) == s) out.push_back(s);
    return out;
}

GrothendieckTopology saturate(const Coverage& cov) {
    const Preorder& p = cov.base;
    auto sieves = stable_sieves(cov);
    GrothendieckTopology j{p, std::vector<std::vector<Subset>>(p.n)};
    // A sieve covers c exactly when c lies in the least closed lower set containing it.
    for (int c = 0; c < p.n; ++c)
        for (const Subset& s : lower_sets_within(p, p.down[c]))
            if (close_under(p, sieves, s)[c]) j.sieves[c].push_back(s);
    return j;
}

GrothendieckTopology saturate_by_rules(const Coverage& cov) {
    const Preorder& p = cov.base;
    if (p.n > 8) throw GuardError("rule-based saturation is limited to 8 elements");
    std::vector<std::vector<Subset>> sieves_on(p.n);
    std::vector<std::set<Subset, SubsetLess>> j(p.n);
    for (int c = 0; c < p.n; ++c) {
        sieves_on[c] = lower_sets_within(p, p.down[c]);
        j[c].insert(p.down[c]);
        for (const Subset& fam : cov.covers[c]) j[c].insert(p.down_closure(fam));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        // stability
        for (int c = 0; c < p.n; ++c) {
            std::vector<Subset> current(j[c].begin(), j[c].end());
            for (const Subset& s : current)
                for_each_member(p.down[c], [&](int d) {
                    if (j[d].insert(s & p.down[d]).second) changed = true;
                });
        }
        // transitivity
        for (int c = 0; c < p.n; ++c) {
            for (const Subset& r : sieves_on[c]) {
                if (j[c].count(r)) continue;
                for (const Subset& s : j[c]) {
                    bool all = true;
                    for_each_member(s, [&](int d) {
                        if (all && !j[d].count(r & p.down[d])) all = false;
                    });
                    if (all) {
                        j[c].insert(r);
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    GrothendieckTopology out{p, std::vector<std::vector<Subset>>(p.n)};
    for (int c = 0; c < p.n; ++c) out.sieves[c].assign(j[c].begin(), j[c].end());
    return out;
}

Coverage as_coverage(const GrothendieckTopology& j) { return Coverage{j.base, j.sieves}; }

GrothendieckTopology trivial_topology(const Preorder& p) {
    GrothendieckTopology j{p, std::vector<std::vector<Subset>>(p.n)};
    for (int c = 0; c < p.n; ++c) j.sieves[c].push_back(p.down[c]);
    return j;
}

std::string topology_axiom_violation(const GrothendieckTopology& j) {
    const Preorder& p = j.base;
    for (int c = 0; c < p.n; ++c) {
        for (const Subset& s : j.sieves[c])
            if (!s.is_subset_of(p.down[c]) || !p.is_down_closed(s))
                return "sieve " + family_string(p, s) + " on " + p.label(c) + " is not a lower subset of its downset";
        if (!j.covers(c, p.down[c])) return "maximality fails at " + p.label(c);
    }
    for (int c = 0; c < p.n; ++c)
        for (const Subset& s : j.sieves[c])
            for (int d : members(p.down[c]))
                if (!j.covers(d, s & p.down[d]))
                    return "stability fails: " + family_string(p, s) + " on " + p.label(c) + " pulled back to " +
                           p.label(d);
    for (int c = 0; c < p.n; ++c) {
        for (const Subset& r : lower_sets_within(p, p.down[c])) {
            if (j.covers(c, r)) continue;
            for (const Subset& s : j.sieves[c]) {
                bool all = true;
                for_each_member(s, [&](int d) {
                    if (all && !j.covers(d, r & p.down[d])) all = false;
                });
                if (all)
                    return "transitivity fails: " + family_string(p, r) + " on " + p.label(c) +
                           " is locally covering along " + family_string(p, s);
            }
        }
    }
    return {};
}

Subset j_closure(const GrothendieckTopology& j, const Subset& lower) {
    const Preorder& p = j.base;
    Subset cur = p.down_closure(lower);
    for (;;) {
        Subset next = cur;
        for (int d = 0; d < p.n; ++d)
            if (!next[d] && j.covers(d, cur & p.down[d])) next.set(d);
        if (next == cur) return cur;
        cur = p.down_closure(next);
    }
}

bool is_j_ideal(const GrothendieckTopology& j, const Subset& s) {
    return j.base.is_down_closed(s) && j_closure(j, s) == s;
}

std::vector<Subset> j_ideals(const GrothendieckTopology& j) {
    std::vector<Subset> out;
    for (const Subset& s : all_lower_sets(j.base))
        if (is_j_ideal(j, s)) out.push_back(s);
    return out;
}

FiniteFrame ideal_frame(const GrothendieckTopology& j) {
    auto ideals = j_ideals(j);
    check_guard(ideals.size(), "ideal frame");
    FiniteFrame l = frame_from_family(std::move(ideals), [&j](const Subset& s) { return j_closure(j, s); });
    return l;
}

Subset principal_j_ideal(const GrothendieckTopology& j, int c) { return j_closure(j, j.base.down[c]); }

bool is_subcanonical(const GrothendieckTopology& j) {
    const Preorder& p = j.base;
    for (int c = 0; c < p.n; ++c)
        for (const Subset& s : j.sieves[c]) {
            auto sup = sup_of(p, s);
            if (!sup || !p.leq(*sup, c) || !p.leq(c, *sup)) return false;
        }
    return true;
}

std::vector<GrothendieckTopology> all_topologies(const Preorder& p) {
    std::vector<std::vector<Subset>> sieves_on(p.n);
    for (int c = 0; c < p.n; ++c) sieves_on[c] = lower_sets_within(p, p.down[c]);
    std::map<std::vector<std::vector<Subset>>, GrothendieckTopology> seen;
    auto key_of = [](const GrothendieckTopology& t) {
        auto k = t.sieves;
        return k;
    };
    std::deque<GrothendieckTopology> queue;
    GrothendieckTopology start = trivial_topology(p);
    seen.emplace(key_of(start), start);
    queue.push_back(start);
    while (!queue.empty()) {
        GrothendieckTopology t = std::move(queue.front());
        queue.pop_front();
        for (int c = 0; c < p.n; ++c) {
            for (const Subset& r : sieves_on[c]) {
                if (t.covers(c, r)) continue;
                Coverage cov = as_coverage(t);
                cov.covers[c].push_back(r);
                GrothendieckTopology u = saturate(cov);
                auto key = key_of(u);
                if (seen.count(key)) continue;
                check_guard(seen.size() + 1, "topology enumeration");
                seen.emplace(key, u);
                queue.push_back(std::move(u));
            }
        }
    }
    std::vector<GrothendieckTopology> out;
    for (auto& [k, t] : seen) out.push_back(std::move(t));
    std::sort(out.begin(), out.end(), [](const GrothendieckTopology& a, const GrothendieckTopology& b) {
        return std::lexicographical_compare(a.sieves.begin(), a.sieves.end(), b.sieves.begin(), b.sieves.end(),
                                            [](const auto& x, const auto& y) {
                                                return std::lexicographical_compare(x.begin(), x.end(), y.begin(),
                                                                                     y.end(), SubsetLess{});
                                            });
    });
    return out;
}

namespace {

void check_dense(const GrothendieckTopology& j, const Subset& d) {
    const Preorder& p = j.base;
    for (int c = 0; c < p.n; ++c) {
        Subset generated = p.down_closure(d & p.down[c]);
        if (!j.covers(c, generated))
            throw DomainError("subset is not dense: " + p.label(c) + " has no covering sieve generated inside it");
    }
}

Subset dense_mask(const Preorder& p, const std::vector<int>& dense) {
    for (int x : dense)
        if (x < 0 || x >= p.n) throw DomainError("dense subset index out of range");
    return subset_of(p.n, dense);
}

}  // namespace

InducedSite induced_topology(const GrothendieckTopology& j, const std::vector<int>& dense) {
    const Preorder& p = j.base;
    Subset mask = dense_mask(p, dense);
    check_dense(j, mask);
    std::vector<int> emb = members(mask);
    Preorder sub = suborder(p, emb);
    GrothendieckTopology t{sub, std::vector<std::vector<Subset>>(sub.n)};
    for (int i = 0; i < sub.n; ++i) {
        for (const Subset& r : lower_sets_within(sub, sub.down[i])) {
            Subset lifted(p.n);
            for_each_member(r, [&](int k) { lifted.set(emb[k]); });
            if (j.covers(emb[i], p.down_closure(lifted))) t.sieves[i].push_back(r);
        }
    }
    return InducedSite{emb, t};
}

Coverage induced_coverage(const GrothendieckTopology& j, const std::vector<int>& dense) {
    return as_coverage(induced_topology(j, dense).topology);
}

ComparisonIso comparison_iso(const GrothendieckTopology& j, const std::vector<int>& dense) {
    const Preorder& p = j.base;
    InducedSite site = induced_topology(j, dense);
    FiniteFrame big = ideal_frame(j);
    FiniteFrame small = ideal_frame(site.topology);
    const int m = static_cast<int>(site.embedding.size());
    std::vector<int> phi(big.size()), psi(small.size());
    for (int a = 0; a < big.size(); ++a) {
        Subset restricted(m);
        for (int k = 0; k < m; ++k)
            if (big.sets[a][site.embedding[k]]) restricted.set(k);
        phi[a] = small.find(restricted);
        if (phi[a] < 0) throw DomainError("restriction of a J-ideal is not an induced ideal");
    }
    for (int b = 0; b < small.size(); ++b) {
        Subset lifted(p.n);
        for_each_member(small.sets[b], [&](int k) { lifted.set(site.embedding[k]); });
        psi[b] = big.find(j_closure(j, lifted));
        if (psi[b] < 0) throw DomainError("closure of an induced ideal is not a J-ideal");
    }
    return ComparisonIso{FrameHom{big, small, phi}, FrameHom{small, big, psi}};
}

GrothendieckTopology subtopology_from_surjection(const GrothendieckTopology& j, const FrameHom& f) {
    const Preorder& p = j.base;
    FiniteFrame dom = ideal_frame(j);
    if (f.dom.sets != dom.sets) throw DomainError("homomorphism domain is not the ideal frame of the topology");
    if (auto v = frame_hom_violation(f.dom, f.cod, f.f); !v.empty()) throw DomainError("not a frame homomorphism: " + v);
    if (!is_surjective(f)) throw DomainError("frame homomorphism is not surjective");
    GrothendieckTopology out{p, std::vector<std::vector<Subset>>(p.n)};
    for (int c = 0; c < p.n; ++c) {
        const int target = f.f[dom.find(principal_j_ideal(j, c))];
        for (const Subset& s : lower_sets_within(p, p.down[c]))
            if (f.f[dom.find(j_closure(j, s))] == target) out.sieves[c].push_back(s);
    }
    if (auto v = topology_axiom_violation(out); !v.empty())
        throw DomainError("constructed subtopology is not a Grothendieck topology: " + v);
    for (int c = 0; c < p.n; ++c)
        for (const Subset& s : j.sieves[c])
            if (!out.covers(c, s)) throw DomainError("constructed subtopology does not contain J");
    if (!iso_search(ideal_frame(out), f.cod))
        throw DomainError("ideal frame of the constructed subtopology does not match the codomain");
    return out;
}

bool topologies_equal_by_ideals(const GrothendieckTopology& a, const GrothendieckTopology& b) {
    if (a.base.n != b.base.n) return false;
    return j_ideals(a) == j_ideals(b);
}

}  // namespace stonework
