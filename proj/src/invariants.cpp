#include "stonework/invariants.hpp"

#include <algorithm>

namespace stonework {

HeytingOps heyting(const FiniteFrame& l) {
    const int n = l.size();
    HeytingOps h;
    h.frame = l;
    h.imp.assign(static_cast<std::size_t>(n) * n, l.bot);
    h.neg.assign(n, l.bot);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int acc = l.bot;
            for (int c = 0; c < n; ++c)
                if (l.leq(l.meet(c, a), b)) acc = l.join(acc, c);
            h.imp[static_cast<std::size_t>(a) * n + b] = acc;
        }
    for (int a = 0; a < n; ++a) h.neg[a] = h.implies(a, l.bot);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (l.leq(c, h.implies(a, b)) != l.leq(l.meet(c, a), b))
                    throw DomainError("no Heyting implication: " + l.carrier.label(c) + " ≤ " + l.carrier.label(a) +
                                      "⇒" + l.carrier.label(b) + " disagrees with the meet test");
    return h;
}

bool is_almost_discrete(const FiniteFrame& l) {
    return static_cast<int>(complemented_elements(l).count()) == l.size();
}

bool is_de_morgan(const FiniteFrame& l) {
    const HeytingOps h = heyting(l);
    for (int a = 0; a < l.size(); ++a)
        if (l.join(h.negation(a), h.negation(h.negation(a))) != l.top) return false;
    return true;
}

bool is_two_valued(const FiniteFrame& l) { return l.size() == 2 && l.bot != l.top; }

bool godel_dummett_frame(const FiniteFrame& l) {
    const HeytingOps h = heyting(l);
    for (int a = 0; a < l.size(); ++a)
        for (int b = 0; b < a; ++b)
            if (l.join(h.implies(a, b), h.implies(b, a)) != l.top) return false;
    return true;
}

bool ConditionReport::agree() const {
    for (const auto& c : conditions)
        if (c.value != conditions.front().value) return false;
    return true;
}

bool ConditionReport::value() const { return !conditions.empty() && conditions.front().value; }

namespace {

FiniteFrame as_distributive(const Poset& x) {
    FiniteFrame d = lattice_from_poset(x);
    if (auto c = check_distributive(d); !c) throw DomainError("not a distributive lattice: " + c.missing);
    return d;
}

void require_meet_semilattice(const Poset& m) {
    if (auto c = check_meet_semilattice(m); !c) throw DomainError("not a meet-semilattice: " + c.missing);
}

// For every nonzero b ≤ a some nonzero c ∈ I lies below b.
bool dense_below(const FiniteFrame& d, int a, const Subset& ideal) {
    for (int b = 0; b < d.size(); ++b) {
        if (b == d.bot || !d.leq(b, a)) continue;
        bool found = false;
        for (int c = 0; c < d.size() && !found; ++c) found = c != d.bot && ideal[c] && d.leq(c, b);
        if (!found) return false;
    }
    return true;
}

// No nonzero b ≤ a lies in I.
bool disjoint_below(const FiniteFrame& d, int a, const Subset& ideal) {
    for (int b = 0; b < d.size(); ++b)
        if (b != d.bot && d.leq(b, a) && ideal[b]) return false;
    return true;
}

std::vector<int> nonzero(const FiniteFrame& d) {
    std::vector<int> out;
    for (int x = 0; x < d.size(); ++x)
        if (x != d.bot) out.push_back(x);
    return out;
}

// Calls f on every subset of `items`, as a Subset over the lattice.
template <class F>
void for_each_family(const FiniteFrame& d, const std::vector<int>& items, F&& f) {
    const std::size_t k = items.size();
    if (k >= 63) throw GuardError("too many elements for a subset sweep");
    check_guard(std::size_t{1} << k, "families of lattice elements");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Subset s(d.size());
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) s.set(items[i]);
        f(s);
    }
}

bool is_boolean_algebra(const FiniteFrame& d) {
    const auto at = atoms(d);
    if (at.size() >= 31 || (std::size_t{1} << at.size()) != static_cast<std::size_t>(d.size())) return false;
    std::vector<Subset> below(d.size(), Subset(at.size()));
    for (int x = 0; x < d.size(); ++x)
        for (std::size_t i = 0; i < at.size(); ++i)
            if (d.leq(at[i], x)) below[x].set(i);
    for (int x = 0; x < d.size(); ++x)
        for (int y = 0; y < d.size(); ++y)
            if (d.leq(x, y) != below[x].is_subset_of(below[y])) return false;
    return true;
}

bool sups_are_finite_joins(const FiniteFrame& d) {
    if (static_cast<int>(complemented_elements(d).count()) != d.size()) return false;
    std::vector<int> all(d.size());
    for (int i = 0; i < d.size(); ++i) all[i] = i;
    bool ok = true;
    for_each_family(d, all, [&](const Subset& s) {
        if (!ok) return;
        auto sup = sup_of(d.carrier, s);
        ok = sup.has_value() && *sup == d.join_all(s);
    });
    return ok;
}

}  // namespace

std::vector<Subset> lattice_ideals(const FiniteFrame& d) {
    std::vector<Subset> out;
    for (const auto& s : all_lower_sets(d.carrier)) {
        if (!s[d.bot]) continue;
        bool closed = true;
        for (int a : members(s))
            for (int b : members(s))
                if (!s[d.join(a, b)]) closed = false;
        if (closed) out.push_back(s);
    }
    return out;
}

FiniteFrame stone_frame(const FiniteFrame& d) {
    return ideal_frame(saturate(named_coverage(d.carrier, "coherent")));
}

ConditionReport almost_discrete_conditions(const FiniteFrame& d) {
    if (auto c = check_distributive(d); !c) throw DomainError("not a distributive lattice: " + c.missing);
    ConditionReport r{"boolean", "dlat", {}, {}};
    r.conditions.push_back({"stone frame almost discrete", is_almost_discrete(stone_frame(d))});

    const auto ideals = lattice_ideals(d);
    bool ii = true;
    for (const auto& i : ideals)
        for (int a = 0; a < d.size(); ++a)
            if (dense_below(d, a, i) && !i[a]) ii = false;
    r.conditions.push_back({"ideals closed under density", ii});

    bool iii = true;
    const auto nz = nonzero(d);
    for_each_family(d, nz, [&](const Subset& fam) {
        bool dense = true;
        for (int a : nz) {
            bool hit = false;
            for (int x : members(fam)) hit = hit || d.meet(x, a) != d.bot;
            dense = dense && hit;
        }
        if (dense && d.join_all(fam) != d.top) iii = false;
    });
    r.conditions.push_back({"dense families of nonzero elements cover 1", iii});
    r.conditions.push_back({"complemented, complete, sups are finite joins", sups_are_finite_joins(d)});
    r.conditions.push_back({"finite Boolean algebra", is_boolean_algebra(d)});
    return r;
}

ConditionReport extremally_disconnected_conditions(const FiniteFrame& d) {
    if (auto c = check_distributive(d); !c) throw DomainError("not a distributive lattice: " + c.missing);
    ConditionReport r{"demorgan", "dlat", {}, {}};
    r.conditions.push_back({"stone frame extremally disconnected", is_de_morgan(stone_frame(d))});

    const auto ideals = lattice_ideals(d);
    bool ii = true;
    for (const auto& i : ideals) {
        int cover = d.bot;
        for (int a = 0; a < d.size(); ++a)
            if (disjoint_below(d, a, i) || dense_below(d, a, i)) cover = d.join(cover, a);
        if (cover != d.top) ii = false;
    }
    r.conditions.push_back({"every ideal splits a finite cover of 1", ii});

    bool iii = true;
    const auto nz = nonzero(d);
    for_each_family(d, nz, [&](const Subset& fam) {
        int cover = d.bot;
        for (int b : nz) {
            bool apart = true;
            for (int a : members(fam)) apart = apart && d.meet(b, a) == d.bot;
            bool dense = true;
            for (int x : nz) {
                if (!d.leq(x, b)) continue;
                bool hit = false;
                for (int a : members(fam)) hit = hit || d.meet(x, a) != d.bot;
                dense = dense && hit;
            }
            if (apart || dense) cover = d.join(cover, b);
        }
        if (cover != d.top) iii = false;
    });
    r.conditions.push_back({"every family has a finite cover of 1 deciding it", iii});

    const Subset comp = complemented_elements(d);
    bool iv = true;
    for (const auto& i : ideals) {
        bool closed = true;
        for (int a = 0; a < d.size(); ++a)
            if (dense_below(d, a, i) && !i[a]) closed = false;
        if (!closed) continue;
        bool principal = false;
        for (int x : members(comp)) principal = principal || d.carrier.down[x] == i;
        if (!principal) iv = false;
    }
    r.conditions.push_back({"density-closed ideals are principal on complemented elements", iv});
    return r;
}

bool mslat_ideal_frame_demorgan(const Poset& m) {
    require_meet_semilattice(m);
    return is_de_morgan(lower_sets(m));
}

bool alexandrov_demorgan(const Preorder& p) { return is_de_morgan(upper_sets(p)); }

bool amalgamation(const Preorder& p) {
    for (int c = 0; c < p.n; ++c)
        for (int a : members(p.up[c]))
            for (int b : members(p.up[c]))
                if ((p.up[a] & p.up[b]).none()) return false;
    return true;
}

ConditionReport boolean_conditions(const std::string& kind, const Poset& x) {
    if (kind == "dlat" || kind == "frame") {
        ConditionReport r = almost_discrete_conditions(as_distributive(x));
        r.kind = kind;
        return r;
    }
    ConditionReport r{"boolean", kind, {}, {}};
    if (kind == "mslat") {
        require_meet_semilattice(x);
        r.conditions.push_back({"ideal frame almost discrete", is_almost_discrete(lower_sets(x))});
        r.conditions.push_back({"singleton", x.n == 1});
    } else if (kind == "preorder") {
        bool symmetric = true;
        for (int p = 0; p < x.n; ++p)
            for (int q : members(x.up[p])) symmetric = symmetric && x.leq(q, p);
        r.conditions.push_back({"alexandrov frame almost discrete", is_almost_discrete(upper_sets(x))});
        r.conditions.push_back({"p <= q implies q <= p", symmetric});
    } else {
        throw DomainError("unknown kind '" + kind + "' (expected dlat, frame, mslat or preorder)");
    }
    return r;
}

ConditionReport demorgan_conditions(const std::string& kind, const Poset& x) {
    if (kind == "dlat" || kind == "frame") {
        ConditionReport r = extremally_disconnected_conditions(as_distributive(x));
        r.kind = kind;
        return r;
    }
    ConditionReport r{"demorgan", kind, {}, {}};
    if (kind == "mslat") {
        // Always true for meet-semilattices; the report still evaluates it.
        r.conditions.push_back({"ideal frame extremally disconnected", mslat_ideal_frame_demorgan(x)});
        r.conditions.push_back({"meet-semilattice", true});
    } else if (kind == "preorder") {
        r.conditions.push_back({"alexandrov frame extremally disconnected", alexandrov_demorgan(x)});
        r.conditions.push_back({"amalgamation", amalgamation(x)});
    } else {
        throw DomainError("unknown kind '" + kind + "' (expected dlat, frame, mslat or preorder)");
    }
    return r;
}

ConditionReport two_valued_conditions(const std::string& kind, const Poset& x) {
    ConditionReport r{"twovalued", kind, {}, {}};
    if (kind == "dlat") {
        const FiniteFrame d = as_distributive(x);
        r.conditions.push_back({"only 0 and 1, distinct", d.size() == 2});
        r.conditions.push_back({"stone frame two-valued", is_two_valued(stone_frame(d))});
    } else if (kind == "mslat") {
        require_meet_semilattice(x);
        r.conditions.push_back({"singleton", x.n == 1});
        r.conditions.push_back({"ideal frame two-valued", is_two_valued(lower_sets(x))});
    } else if (kind == "preorder") {
        bool connected = x.n > 0;
        for (int p = 0; p < x.n; ++p) connected = connected && x.up[p].all();
        r.conditions.push_back({"nonempty and strongly connected", connected});
        r.conditions.push_back({"alexandrov frame two-valued", is_two_valued(upper_sets(x))});
    } else if (kind == "frame") {
        const FiniteFrame l = as_distributive(x);
        r.conditions.push_back({"only 0 and 1, distinct", is_two_valued(l)});
        r.conditions.push_back({"canonical site two-valued", is_two_valued(ideal_frame(canonical_topology(l)))});
    } else {
        throw DomainError("unknown kind '" + kind + "' (expected dlat, mslat, preorder or frame)");
    }
    return r;
}

GrothendieckTopology canonical_topology(const FiniteFrame& l) {
    return saturate(named_coverage(l.carrier, "canonical"));
}

std::vector<Subset> j_closed_sieves(const GrothendieckTopology& j, int c) {
    std::vector<Subset> out;
    for (const auto& i : j_ideals(j)) out.push_back(i & j.base.down[c]);
    normalize_family(out);
    return out;
}

std::string godel_dummett_site_violation(const GrothendieckTopology& j) {
    const Preorder& p = j.base;
    for (int c = 0; c < p.n; ++c) {
        const auto closed = j_closed_sieves(j, c);
        for (std::size_t x = 0; x < closed.size(); ++x)
            for (std::size_t y = 0; y < x; ++y) {
                const Subset& r = closed[x];
                const Subset& s = closed[y];
                Subset t(p.n);
                for_each_member(p.down[c], [&](int d) {
                    const Subset rd = r & p.down[d], sd = s & p.down[d];
                    if (rd.is_subset_of(sd) || sd.is_subset_of(rd)) t.set(d);
                });
                if (!j.covers(c, t))
                    return "at " + p.label(c) + ": closed sieves " + subset_string(r) + " and " + subset_string(s) +
                           " are comparable only on " + subset_string(t);
            }
    }
    return {};
}

bool godel_dummett_site(const GrothendieckTopology& j) { return godel_dummett_site_violation(j).empty(); }

bool godel_dummett_dlat(const FiniteFrame& d) {
    const Preorder& p = d.carrier;
    for (int x = 0; x < d.size(); ++x) {
        // Sieves on x generated by finitely closed sets.
        std::vector<Subset> closed;
        for (const auto& s : lower_sets_within(p, p.down[x])) {
            bool ok = true;
            for_each_member(p.down[x], [&](int b) {
                if (ok && !s[b] && d.join_all(s & p.down[b]) == b) ok = false;
            });
            if (ok) closed.push_back(s);
        }
        for (const auto& a : closed)
            for (const auto& b : closed) {
                int cover = d.bot;
                for_each_member(p.down[x], [&](int c) {
                    // A_c refines B_c: every a ∧ c lies below some b ∧ c.
                    auto refines = [&](const Subset& u, const Subset& v) {
                        for (int i : members(u)) {
                            bool found = false;
                            for (int k : members(v)) found = found || d.leq(d.meet(i, c), d.meet(k, c));
                            if (!found) return false;
                        }
                        return true;
                    };
                    if (refines(a, b) || refines(b, a)) cover = d.join(cover, c);
                });
                if (cover != x) return false;
            }
    }
    return true;
}

bool forest_check(const Preorder& p, ForestDirection direction) {
    const auto& rel = direction == ForestDirection::Upper ? p.up : p.down;
    for (int a = 0; a < p.n; ++a)
        for (int b = 0; b < a; ++b)
            if ((rel[a] & rel[b]).any() && !p.leq(a, b) && !p.leq(b, a)) return false;
    return true;
}

ConditionReport godel_dummett_conditions(const std::string& kind, const Poset& x) {
    ConditionReport r{"gd", kind, {}, {}};
    if (kind == "dlat") {
        const FiniteFrame d = as_distributive(x);
        const FiniteFrame stone = stone_frame(d);
        r.conditions.push_back({"site (D, coherent)", godel_dummett_site(saturate(named_coverage(x, "coherent")))});
        r.conditions.push_back({"finitely closed sets", godel_dummett_dlat(d)});
        r.conditions.push_back({"site (stone frame, canonical)", godel_dummett_site(canonical_topology(stone))});
        r.recorded.push_back({"external law on the stone frame", godel_dummett_frame(stone)});
    } else if (kind == "mslat") {
        require_meet_semilattice(x);
        const FiniteFrame ideals = lower_sets(x);
        r.conditions.push_back({"site (M, trivial)", godel_dummett_site(trivial_topology(x))});
        r.conditions.push_back({"forest", forest_check(x, ForestDirection::Upper)});
        r.conditions.push_back({"site (ideal frame, canonical)", godel_dummett_site(canonical_topology(ideals))});
        r.recorded.push_back({"external law on the ideal frame", godel_dummett_frame(ideals)});
    } else if (kind == "preorder") {
        const FiniteFrame alex = upper_sets(x);
        r.conditions.push_back({"site (P^op, trivial)", godel_dummett_site(trivial_topology(opposite(x)))});
        r.conditions.push_back({"opposite is a forest", forest_check(x, ForestDirection::Lower)});
        r.conditions.push_back({"site (alexandrov frame, canonical)", godel_dummett_site(canonical_topology(alex))});
        r.recorded.push_back({"external law on the alexandrov frame", godel_dummett_frame(alex)});
    } else if (kind == "frame") {
        const FiniteFrame l = as_distributive(x);
        r.conditions.push_back({"site (L, canonical)", godel_dummett_site(canonical_topology(l))});
        r.recorded.push_back({"external law on L", godel_dummett_frame(l)});
    } else {
        throw DomainError("unknown kind '" + kind + "' (expected dlat, mslat, preorder or frame)");
    }
    return r;
}

std::vector<std::string> invariant_names() { return {"boolean", "demorgan", "twovalued", "gd"}; }

ConditionReport check_invariant(const std::string& invariant, const std::string& kind, const Poset& x) {
    if (invariant == "boolean") return boolean_conditions(kind, x);
    if (invariant == "demorgan") return demorgan_conditions(kind, x);
    if (invariant == "twovalued") return two_valued_conditions(kind, x);
    if (invariant == "gd") return godel_dummett_conditions(kind, x);
    throw DomainError("unknown invariant '" + invariant + "' (expected boolean, demorgan, twovalued or gd)");
}

}  // namespace stonework
