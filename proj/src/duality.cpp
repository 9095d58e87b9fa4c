#include "stonework/duality.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace stonework {

namespace {

Subset supercompact_mask(const FiniteFrame& l) {
    Subset out(l.size());
    for (int x = 0; x < l.size(); ++x) {
        Subset strict = l.carrier.down[x];
        strict.reset(x);
        if (l.join_all(strict) != x) out.set(x);
    }
    return out;
}

Subset atom_mask(const FiniteFrame& l) { return subset_of(l.size(), atoms(l)); }

bool pairwise_disjoint(const FiniteFrame& l, const Subset& fam) {
    auto xs = members(fam);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (l.meet(xs[i], xs[j]) != l.bot) return false;
    return true;
}

bool directed(const FiniteFrame& l, const Subset& fam) {
    if (fam.none()) return false;
    auto xs = members(fam);
    for (int a : xs)
        for (int b : xs) {
            bool found = false;
            for (int c : xs)
                if (l.leq(a, c) && l.leq(b, c)) found = true;
            if (!found) return false;
        }
    return true;
}

// Pairwise disjoint nonzero G inside `pool` with join x.
bool disjoint_refinement(const FiniteFrame& l, const Subset& pool, int x) {
    std::vector<int> xs;
    for_each_member(pool, [&](int y) {
        if (y != l.bot) xs.push_back(y);
    });
    std::function<bool(std::size_t, int)> go = [&](std::size_t k, int acc) {
        if (acc == x) return true;
        if (k == xs.size()) return false;
        const int y = xs[k];
        if (l.meet(acc, y) == l.bot && go(k + 1, l.join(acc, y))) return true;
        return go(k + 1, acc);
    };
    return go(0, l.bot);
}

bool subcover_below(const FiniteFrame& l, const std::vector<int>& fam, int x, int max_size) {
    std::function<bool(std::size_t, int, int)> go = [&](std::size_t k, int used, int acc) {
        if (acc == x) return true;
        if (k == fam.size() || used == max_size) return false;
        return go(k + 1, used + 1, l.join(acc, fam[k])) || go(k + 1, used, acc);
    };
    return go(0, 0, l.bot);
}

// The refinement condition for one antichain cover `a` of x.
bool has_refinement(const FiniteFrame& l, const CompactnessInvariant& c, const Subset& a, int x,
                    const Subset& atoms_of_l, const Subset& sc_of_l) {
    Subset below = l.carrier.down_closure(a);
    switch (c.tag) {
        case CompactTag::All:
        case CompactTag::Finite:
            return true;
        case CompactTag::Singleton:
        case CompactTag::Directed:
            return a[x];
        case CompactTag::CardinalityLT:
            return subcover_below(l, members(a), x, c.k - 1);
        case CompactTag::FiniteDisjoint:
        case CompactTag::Disjoint:
            return disjoint_refinement(l, below, x);
        case CompactTag::AtomicFinite:
        case CompactTag::Atomic:
            return a[x] || l.join_all(below & atoms_of_l) == x;
        case CompactTag::SupercompactFinite:
        case CompactTag::Supercompact:
            return a[x] || l.join_all(below & sc_of_l) == x;
    }
    return false;
}

bool compact_with(const FiniteFrame& l, const CompactnessInvariant& c, int x, const Subset& atoms_of_l,
                  const Subset& sc_of_l, bool distributive) {
    switch (c.tag) {
        case CompactTag::All:
        case CompactTag::Finite:
            return true;
        case CompactTag::Singleton:
        case CompactTag::Directed:
            return sc_of_l[x];
        case CompactTag::AtomicFinite:
        case CompactTag::Atomic:
            // An atom below a join lies below one of the joinands.
            if (distributive) return sc_of_l[x] || l.join_all(l.carrier.down[x] & atoms_of_l) == x;
            break;
        case CompactTag::SupercompactFinite:
        case CompactTag::Supercompact:
            if (distributive) return sc_of_l[x] || l.join_all(l.carrier.down[x] & sc_of_l) == x;
            break;
        default:
            break;
    }
    bool ok = true;
    for_each_antichain(l.carrier, l.carrier.down[x], [&](const Subset& a) {
        if (ok && l.join_all(a) == x && !has_refinement(l, c, a, x, atoms_of_l, sc_of_l)) ok = false;
    });
    return ok;
}

Poset induced(const Poset& p, const std::vector<int>& elements) { return suborder(p, elements); }

DualityReport finish(DualityReport r) {
    MonotoneMap w{r.original, r.recovered, r.witness};
    r.ok = r.original.n == r.recovered.n && is_order_iso(r.original, r.recovered, r.witness) && is_monotone(w);
    return r;
}

void require(const StructureCheck& s, const std::string& kind) {
    if (!s) throw DomainError(kind + " duality: structure check failed, missing " + s.missing);
}

void require_distributive_lattice(const Poset& x, const std::string& kind) {
    require(check_bounded_lattice(x), kind);
    require(check_distributive(lattice_from_poset(x)), kind);
}

// Position in `frame` of the principal ideal (or other member) given as a set.
int locate(const FiniteFrame& frame, const Subset& s, const std::string& kind) {
    int i = frame.find(s);
    if (i < 0) throw DomainError(kind + " duality: expected member missing from the frame");
    return i;
}

int position_in(const std::vector<int>& xs, int v) {
    auto it = std::find(xs.begin(), xs.end(), v);
    return it == xs.end() ? -1 : static_cast<int>(it - xs.begin());
}

// Elements of frame l are sets; send x to {members of basis below x} as a set over basis positions.
Subset trace_on(const FiniteFrame& l, const std::vector<int>& basis, int x) {
    Subset s(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (l.leq(basis[i], x)) s.set(i);
    return s;
}

}  // namespace

CompactnessInvariant parse_invariant(const std::string& name) {
    static const std::vector<std::pair<std::string, CompactTag>> table{
        {"all", CompactTag::All},
        {"singleton", CompactTag::Singleton},
        {"finite", CompactTag::Finite},
        {"finite-disjoint", CompactTag::FiniteDisjoint},
        {"disjoint", CompactTag::Disjoint},
        {"atomic-finite", CompactTag::AtomicFinite},
        {"atomic", CompactTag::Atomic},
        {"supercompact-finite", CompactTag::SupercompactFinite},
        {"supercompact", CompactTag::Supercompact},
        {"directed", CompactTag::Directed},
    };
    for (const auto& [key, tag] : table)
        if (name == key) return {tag, 0};
    if (name.rfind("lt:", 0) == 0) {
        const std::string digits = name.substr(3);
        if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
            int k = std::stoi(digits);
            if (k >= 1) return {CompactTag::CardinalityLT, k};
        }
    }
    throw DomainError("unknown compactness invariant '" + name + "'");
}

std::string invariant_name(const CompactnessInvariant& c) {
    switch (c.tag) {
        case CompactTag::All: return "all";
        case CompactTag::Singleton: return "singleton";
        case CompactTag::Finite: return "finite";
        case CompactTag::CardinalityLT: return "lt:" + std::to_string(c.k);
        case CompactTag::FiniteDisjoint: return "finite-disjoint";
        case CompactTag::Disjoint: return "disjoint";
        case CompactTag::AtomicFinite: return "atomic-finite";
        case CompactTag::Atomic: return "atomic";
        case CompactTag::SupercompactFinite: return "supercompact-finite";
        case CompactTag::Supercompact: return "supercompact";
        case CompactTag::Directed: return "directed";
    }
    return "?";
}

std::vector<CompactnessInvariant> builtin_invariants(int max_k) {
    std::vector<CompactnessInvariant> out{
        {CompactTag::All, 0},          {CompactTag::Singleton, 0},          {CompactTag::Finite, 0},
        {CompactTag::FiniteDisjoint, 0}, {CompactTag::Disjoint, 0},         {CompactTag::AtomicFinite, 0},
        {CompactTag::Atomic, 0},       {CompactTag::SupercompactFinite, 0}, {CompactTag::Supercompact, 0},
        {CompactTag::Directed, 0},
    };
    for (int k = 1; k <= max_k; ++k) out.push_back({CompactTag::CardinalityLT, k});
    return out;
}

bool family_satisfies(const FiniteFrame& l, const CompactnessInvariant& c, const Subset& family) {
    switch (c.tag) {
        case CompactTag::All:
        case CompactTag::Finite:
            return true;
        case CompactTag::Singleton:
            return family.count() == 1;
        case CompactTag::CardinalityLT:
            return static_cast<int>(family.count()) < c.k;
        case CompactTag::FiniteDisjoint:
        case CompactTag::Disjoint:
            return pairwise_disjoint(l, family);
        case CompactTag::AtomicFinite:
        case CompactTag::Atomic:
            return family.count() == 1 || family.is_subset_of(atom_mask(l));
        case CompactTag::SupercompactFinite:
        case CompactTag::Supercompact:
            return family.count() == 1 || family.is_subset_of(supercompact_mask(l));
        case CompactTag::Directed:
            return directed(l, family);
    }
    return false;
}

bool is_c_compact(const FiniteFrame& l, const CompactnessInvariant& c, int x) {
    return compact_with(l, c, x, atom_mask(l), supercompact_mask(l), is_distributive(l));
}

CompactPart c_compact_elements(const FiniteFrame& l, const CompactnessInvariant& c) {
    Subset at = atom_mask(l), sc = supercompact_mask(l);
    const bool dist = is_distributive(l);
    CompactPart out;
    for (int x = 0; x < l.size(); ++x)
        if (compact_with(l, c, x, at, sc, dist)) out.elements.push_back(x);
    out.poset = induced(l.carrier, out.elements);
    return out;
}

CompactPart recover_structure(const FiniteFrame& l, const CompactnessInvariant& c) { return c_compact_elements(l, c); }

MonotoneMap restrict_to_compact(const FrameHom& h, const CompactnessInvariant& c) {
    CompactPart from = c_compact_elements(h.dom, c);
    CompactPart to = c_compact_elements(h.cod, c);
    MonotoneMap m{from.poset, to.poset, std::vector<int>(from.elements.size())};
    for (std::size_t i = 0; i < from.elements.size(); ++i) {
        int target = position_in(to.elements, h.f[from.elements[i]]);
        if (target < 0)
            throw DomainError("homomorphism sends the " + invariant_name(c) + "-compact element " +
                              h.dom.carrier.label(from.elements[i]) + " outside the compact part");
        m.f[i] = target;
    }
    return m;
}

bool multicomposition_check(const FiniteFrame& l, const CompactnessInvariant& c, const Subset& family) {
    Subset at = atom_mask(l), sc = supercompact_mask(l);
    const bool dist = is_distributive(l);
    bool members_compact = true;
    for_each_member(family, [&](int x) {
        if (!compact_with(l, c, x, at, sc, dist)) members_compact = false;
    });
    if (!members_compact) throw DomainError("multicomposition: a member of the family is not C-compact");
    if (!family_satisfies(l, c, family)) throw DomainError("multicomposition: the family does not satisfy C");
    return compact_with(l, c, l.join_all(family), at, sc, dist);
}

std::string cover_preservation_violation(const MonotoneMap& f, const GrothendieckTopology& j,
                                         const GrothendieckTopology& k) {
    const Preorder& c = f.dom;
    const Preorder& d = f.cod;
    for (int x = 0; x < c.n; ++x)
        for (const Subset& s : j.sieves[x]) {
            Subset image(d.n);
            for_each_member(s, [&](int y) { image.set(f.f[y]); });
            if (!k.covers(f.f[x], d.down_closure(image)))
                return "image of the covering sieve " + subset_string(s) + " on " + c.label(x) +
                       " does not cover " + d.label(f.f[x]);
        }
    return {};
}

FrameHom a_on_map(const MonotoneMap& f, const GrothendieckTopology& j, const GrothendieckTopology& k) {
    if (!is_monotone(f)) throw DomainError("a_on_map: map is not monotone");
    auto flat = flat_conditions(f);
    if (!flat.flat()) throw DomainError("a_on_map: map is not flat: " + flat.witness);
    if (auto v = cover_preservation_violation(f, j, k); !v.empty()) throw DomainError("a_on_map: " + v);
    FiniteFrame from = ideal_frame(j);
    FiniteFrame to = ideal_frame(k);
    std::vector<int> out(from.size());
    for (int i = 0; i < from.size(); ++i) {
        Subset image(f.cod.n);
        for_each_member(from.sets[i], [&](int y) { image.set(f.f[y]); });
        out[i] = to.find(j_closure(k, image));
    }
    if (auto v = frame_hom_violation(from, to, out); !v.empty())
        throw DomainError("a_on_map produced a non-homomorphism: " + v);
    return FrameHom{from, to, out};
}

FrameHom b_on_map(const MonotoneMap& f) {
    if (!is_monotone(f)) throw DomainError("b_on_map: map is not monotone");
    FiniteFrame from = lower_sets(f.cod);
    FiniteFrame to = lower_sets(f.dom);
    std::vector<int> out(from.size());
    for (int i = 0; i < from.size(); ++i) {
        Subset pre(f.dom.n);
        for (int x = 0; x < f.dom.n; ++x)
            if (from.sets[i][f.f[x]]) pre.set(x);
        out[i] = to.find(pre);
    }
    return FrameHom{from, to, out};
}

Adjoint left_adjoint(const FrameHom& h) {
    const FiniteFrame& a = h.dom;
    const FiniteFrame& b = h.cod;
    Adjoint r;
    if (h.f[a.top] != b.top) {
        r.reason = "does not preserve the empty meet";
        return r;
    }
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
            if (h.f[a.meet(x, y)] != b.meet(h.f[x], h.f[y])) {
                r.reason = "does not preserve the meet of " + a.carrier.label(x) + " and " + a.carrier.label(y);
                return r;
            }
    std::vector<int> adj(b.size());
    for (int y = 0; y < b.size(); ++y) {
        Subset above(a.size());
        for (int x = 0; x < a.size(); ++x)
            if (b.leq(y, h.f[x])) above.set(x);
        adj[y] = a.meet_all(above);
    }
    for (int y = 0; y < b.size(); ++y)
        if (!b.leq(y, h.f[adj[y]])) {
            r.reason = "unit law fails";
            return r;
        }
    for (int x = 0; x < a.size(); ++x)
        if (!a.leq(adj[h.f[x]], x)) {
            r.reason = "counit law fails";
            return r;
        }
    r.map = std::move(adj);
    return r;
}

std::optional<MonotoneMap> recover_monotone(const FrameHom& h, const Poset& p, const Poset& q) {
    auto adj = left_adjoint(h);
    if (!adj.map) return std::nullopt;
    MonotoneMap g{p, q, std::vector<int>(p.n)};
    for (int x = 0; x < p.n; ++x) {
        int image = (*adj.map)[h.cod.find(p.down[x])];
        const Subset& s = h.dom.sets[image];
        int found = -1;
        for (int y = 0; y < q.n; ++y)
            if (q.down[y] == s) found = y;
        if (found < 0) return std::nullopt;
        g.f[x] = found;
    }
    return g;
}

Subset irreducible_elements(const FiniteFrame& l, const std::string& kind) {
    Subset out(l.size());
    if (kind == "atoms") return atom_mask(l);
    if (kind == "join-irreducible") return subset_of(l.size(), join_irreducibles(l));
    if (kind == "supercompact") return supercompact_mask(l);
    if (kind == "directedly-irreducible") {
        // A finite directed family contains its join.
        out.set();
        return out;
    }
    if (kind == "indecomposable") {
        for (int x = 0; x < l.size(); ++x) {
            Subset strict = l.carrier.down[x];
            strict.reset(x);
            if (!disjoint_refinement(l, strict, x)) out.set(x);
        }
        return out;
    }
    throw DomainError("unknown irreducibility kind '" + kind + "'");
}

std::vector<std::string> duality_kinds() {
    return {"stone", "birkhoff", "alexandrov", "lindenbaum", "mslat", "mslatstar", "atomdlat", "disjunctive"};
}

DualityReport check_duality(const std::string& kind, const Poset& input) {
    DualityReport r;
    r.kind = kind;
    bool hom_ok = true;
    if (!input.is_poset()) throw DomainError(kind + " duality needs a poset; quotient the preorder first");
    r.original = input;
    const Poset& x = input;
    if (kind == "stone") {
        require_distributive_lattice(x, kind);
        auto j = saturate(named_coverage(x, "coherent"));
        r.frame = ideal_frame(j);
        CompactPart part = recover_structure(r.frame, {CompactTag::Finite, 0});
        r.dual = part.poset;
        r.recovered = part.poset;
        for (int c = 0; c < x.n; ++c)
            r.witness.push_back(position_in(part.elements, locate(r.frame, principal_j_ideal(j, c), kind)));
    } else if (kind == "birkhoff") {
        require_distributive_lattice(x, kind);
        FiniteFrame l = lattice_from_poset(x);
        auto irr = join_irreducibles(l);
        r.dual = induced(x, irr);
        r.frame = lower_sets(r.dual);
        r.recovered = recover_structure(r.frame, {CompactTag::Finite, 0}).poset;
        for (int c = 0; c < x.n; ++c) r.witness.push_back(locate(r.frame, trace_on(l, irr, c), kind));
    } else if (kind == "alexandrov") {
        r.frame = upper_sets(x);
        CompactPart part = recover_structure(r.frame, {CompactTag::Singleton, 0});
        r.dual = part.poset;
        r.recovered = opposite(part.poset);
        for (int c = 0; c < x.n; ++c)
            r.witness.push_back(position_in(part.elements, locate(r.frame, x.up[c], kind)));
    } else if (kind == "lindenbaum" || kind == "atomdlat") {
        require_distributive_lattice(x, kind);
        FiniteFrame l = lattice_from_poset(x);
        auto at = atoms(l);
        for (int c = 0; c < x.n; ++c) {
            Subset below = trace_on(l, at, c);
            Subset chosen(l.size());
            for_each_member(below, [&](int i) { chosen.set(at[i]); });
            if (l.join_all(chosen) != c)
                throw DomainError(kind + " duality: structure check failed, missing atomicity at " + x.label(c));
        }
        r.dual = antichain(static_cast<int>(at.size()));
        for (int i = 0; i < r.dual.n; ++i) r.dual.labels.push_back(x.label(at[i]));
        if (kind == "lindenbaum") {
            r.frame = l;
            r.recovered = lower_sets(r.dual).carrier;
        } else {
            // Through the coherent ideal frame: its atoms form the dual set.
            auto j = saturate(named_coverage(x, "coherent"));
            r.frame = ideal_frame(j);
            r.recovered = recover_structure(lower_sets(r.dual), {CompactTag::Finite, 0}).poset;
        }
        FiniteFrame power = lower_sets(r.dual);
        for (int c = 0; c < x.n; ++c) r.witness.push_back(locate(power, trace_on(l, at, c), kind));
        if (kind == "lindenbaum") {
            // ψ must also be a frame isomorphism.
            hom_ok = frame_hom_violation(l, power, r.witness).empty();
        }
    } else if (kind == "mslat") {
        require(check_meet_semilattice(x), kind);
        r.frame = lower_sets(x);
        CompactPart part = recover_structure(r.frame, {CompactTag::Singleton, 0});
        r.dual = part.poset;
        r.recovered = part.poset;
        for (int c = 0; c < x.n; ++c)
            r.witness.push_back(position_in(part.elements, locate(r.frame, x.down[c], kind)));
    } else if (kind == "mslatstar") {
        require(check_meet_semilattice(x), kind);
        std::optional<int> bot;
        for (int c = 0; c < x.n; ++c)
            if (x.up[c].all()) bot = c;
        if (!bot) throw DomainError("mslatstar duality: structure check failed, missing bottom element");
        std::vector<int> nonzero;
        for (int c = 0; c < x.n; ++c)
            if (c != *bot) nonzero.push_back(c);
        for (int a : nonzero)
            for (int b : nonzero) {
                Subset both = x.down[a] & x.down[b];
                if (both.count() == 1)
                    throw DomainError("mslatstar duality: structure check failed, missing nonzero meet of " +
                                      x.label(a) + " and " + x.label(b));
            }
        r.dual = induced(x, nonzero);
        require(check_meet_semilattice(r.dual), kind);
        r.frame = lower_sets(r.dual);
        // Id_*: principal ideals together with the empty ideal.
        std::vector<int> star{r.frame.find(Subset(r.dual.n))};
        for (int i = 0; i < r.dual.n; ++i) star.push_back(r.frame.find(r.dual.down[i]));
        std::sort(star.begin(), star.end());
        r.recovered = induced(r.frame.carrier, star);
        for (int c = 0; c < x.n; ++c) {
            Subset s(r.dual.n);
            if (c != *bot) s = r.dual.down[position_in(nonzero, c)];
            r.witness.push_back(position_in(star, r.frame.find(s)));
        }
    } else if (kind == "disjunctive") {
        require_distributive_lattice(x, kind);
        FiniteFrame l = lattice_from_poset(x);
        Subset ind = irreducible_elements(l, "indecomposable");
        auto inds = members(ind);
        for (int c = 0; c < x.n; ++c)
            if (!disjoint_refinement(l, l.carrier.down[c] & ind, c) && c != l.bot)
                throw DomainError("disjunctive duality: structure check failed, missing disjoint decomposition of " +
                                  x.label(c));
        r.dual = induced(x, inds);
        r.frame = lower_sets(r.dual);
        CompactPart part = recover_structure(r.frame, {CompactTag::FiniteDisjoint, 0});
        r.recovered = part.poset;
        for (int c = 0; c < x.n; ++c)
            r.witness.push_back(position_in(part.elements, locate(r.frame, trace_on(l, inds, c), kind)));
    } else {
        throw DomainError("unknown duality kind '" + kind + "'");
    }
    for (int& w : r.witness)
        if (w < 0) w = 0;
    r = finish(std::move(r));
    r.ok = r.ok && hom_ok;
    return r;
}

}  // namespace stonework
