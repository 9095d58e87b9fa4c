#include "stonework/zariski.hpp"

#include "stonework/duality.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stonework {

int FiniteCommRing::power(int a, int k) const {
    int p = a;
    for (int i = 1; i < k; ++i) p = times(p, a);
    return p;
}

std::string FiniteCommRing::label(int a) const {
    if (a >= 0 && a < static_cast<int>(labels.size())) return labels[a];
    return std::to_string(a);
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
    // Classes numbered by least member.
    std::vector<int> classes() {
        std::vector<int> id(parent.size(), -1), out(parent.size());
        int next = 0;
        for (std::size_t i = 0; i < parent.size(); ++i) {
            const int r = find(static_cast<int>(i));
            if (id[r] < 0) id[r] = next++;
            out[i] = id[r];
        }
        return out;
    }
};

void check_table(int n, const std::vector<int>& t, const char* what) {
    if (static_cast<int>(t.size()) != n * n)
        throw DomainError(std::string(what) + " table has " + std::to_string(t.size()) + " entries, expected " +
                          std::to_string(n * n));
    for (int v : t)
        if (v < 0 || v >= n) throw DomainError(std::string(what) + " table entry " + std::to_string(v) + " out of range");
}

std::string ring_text(const FiniteCommRing& r) {
    std::ostringstream os;
    os << "ring of size " << r.n << "\n  +:";
    for (int a = 0; a < r.n; ++a) {
        os << "\n   ";
        for (int b = 0; b < r.n; ++b) os << ' ' << r.plus(a, b);
    }
    os << "\n  *:";
    for (int a = 0; a < r.n; ++a) {
        os << "\n   ";
        for (int b = 0; b < r.n; ++b) os << ' ' << r.times(a, b);
    }
    return os.str();
}

std::string space_text(const TopSpace& x) {
    std::string out = std::to_string(x.n) + " points [";
    for (int i = 0; i < x.n; ++i) out += (i ? ", " : "") + x.label(i);
    out += "], opens";
    for (const auto& u : x.opens) out += " " + subset_string(u);
    return out;
}

std::string gen_name(int a) { return "D(" + std::to_string(a) + ")"; }

// Extends gens_a[i] ↦ gens_b[i] (plus bounds) through meets and joins; the result must be
// a well-defined order isomorphism.
std::optional<std::vector<int>> generated_iso(const FiniteFrame& a, const std::vector<int>& gens_a,
                                              const FiniteFrame& b, const std::vector<int>& gens_b) {
    if (a.size() != b.size()) return std::nullopt;
    std::vector<int> f(a.size(), -1);
    std::vector<int> known;
    auto assign = [&](int x, int y) {
        if (f[x] == -1) {
            f[x] = y;
            known.push_back(x);
            return true;
        }
        return f[x] == y;
    };
    if (!assign(a.bot, b.bot) || !assign(a.top, b.top)) return std::nullopt;
    for (std::size_t i = 0; i < gens_a.size(); ++i)
        if (!assign(gens_a[i], gens_b[i])) return std::nullopt;
    for (std::size_t i = 0; i < known.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const int x = known[i], y = known[j];
            if (!assign(a.meet(x, y), b.meet(f[x], f[y])) || !assign(a.join(x, y), b.join(f[x], f[y])))
                return std::nullopt;
        }
    if (static_cast<int>(known.size()) != a.size()) return std::nullopt;
    if (!is_order_iso(a.carrier, b.carrier, f)) return std::nullopt;
    return f;
}

PresentOptions ring_present_options() {
    PresentOptions o;
    o.semantic_route = true;
    return o;
}

}  // namespace

// ---------------------------------------------------------------------------
// rings

FiniteCommRing make_ring(int n, std::vector<int> add, std::vector<int> mul, std::vector<std::string> labels) {
    if (n < 1) throw DomainError("a ring needs at least one element");
    check_guard(static_cast<std::size_t>(n), "ring elements");
    check_table(n, add, "addition");
    check_table(n, mul, "multiplication");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw DomainError("ring has " + std::to_string(n) + " elements but " + std::to_string(labels.size()) + " labels");
    FiniteCommRing r;
    r.n = n;
    r.add = std::move(add);
    r.mul = std::move(mul);
    r.labels = std::move(labels);
    if (r.labels.empty())
        for (int i = 0; i < n; ++i) r.labels.push_back(std::to_string(i));
    auto fail = [](const std::string& what) { throw DomainError("not a commutative ring: " + what); };
    r.zero = r.one = -1;
    for (int e = 0; e < n && r.zero < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = r.plus(e, a) == a;
        if (ok) r.zero = e;
    }
    for (int e = 0; e < n && r.one < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = r.times(e, a) == a;
        if (ok) r.one = e;
    }
    if (r.zero < 0) fail("no additive identity");
    if (r.one < 0) fail("no multiplicative identity");
    for (int a = 0; a < n; ++a) {
        bool inverse = false;
        for (int b = 0; b < n; ++b) {
            if (r.plus(a, b) != r.plus(b, a)) fail("addition not commutative at " + r.label(a) + ", " + r.label(b));
            if (r.times(a, b) != r.times(b, a))
                fail("multiplication not commutative at " + r.label(a) + ", " + r.label(b));
            inverse = inverse || r.plus(a, b) == r.zero;
            for (int c = 0; c < n; ++c) {
                const std::string at = " at " + r.label(a) + ", " + r.label(b) + ", " + r.label(c);
                if (r.plus(r.plus(a, b), c) != r.plus(a, r.plus(b, c))) fail("addition not associative" + at);
                if (r.times(r.times(a, b), c) != r.times(a, r.times(b, c))) fail("multiplication not associative" + at);
                if (r.times(a, r.plus(b, c)) != r.plus(r.times(a, b), r.times(a, c))) fail("not distributive" + at);
            }
        }
        if (!inverse) fail("no additive inverse for " + r.label(a));
    }
    return r;
}

FiniteCommRing ring_zmod(int n) {
    if (n < 1) throw DomainError("zmod needs n >= 1, got " + std::to_string(n));
    std::vector<int> add(static_cast<std::size_t>(n) * n), mul(add.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
            mul[static_cast<std::size_t>(a) * n + b] = (a * b) % n;
        }
    return make_ring(n, std::move(add), std::move(mul));
}

FiniteCommRing ring_product(const FiniteCommRing& a, const FiniteCommRing& b) {
    const int n = a.n * b.n;
    check_guard(static_cast<std::size_t>(n), "ring elements");
    auto idx = [&](int x, int y) { return x * b.n + y; };
    std::vector<int> add(static_cast<std::size_t>(n) * n), mul(add.size());
    std::vector<std::string> labels(n);
    for (int x1 = 0; x1 < a.n; ++x1)
        for (int y1 = 0; y1 < b.n; ++y1) {
            const int i = idx(x1, y1);
            labels[i] = "(" + a.label(x1) + "," + b.label(y1) + ")";
            for (int x2 = 0; x2 < a.n; ++x2)
                for (int y2 = 0; y2 < b.n; ++y2) {
                    const std::size_t k = static_cast<std::size_t>(i) * n + idx(x2, y2);
                    add[k] = idx(a.plus(x1, x2), b.plus(y1, y2));
                    mul[k] = idx(a.times(x1, x2), b.times(y1, y2));
                }
        }
    return make_ring(n, std::move(add), std::move(mul), std::move(labels));
}

FiniteCommRing parse_ring_spec(const std::string& spec) {
    std::vector<std::string> factors;
    std::string cur;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (spec[i] == '*' || spec[i] == 'x') {
            factors.push_back(cur);
            cur.clear();
        } else if (spec.compare(i, 2, "×") == 0) {
            factors.push_back(cur);
            cur.clear();
            ++i;
        } else if (!std::isspace(static_cast<unsigned char>(spec[i]))) {
            cur += spec[i];
        }
    }
    factors.push_back(cur);
    std::optional<FiniteCommRing> out;
    for (const auto& f : factors) {
        if (f.rfind("zmod:", 0) != 0) throw DomainError("unknown ring '" + f + "' (expected zmod:<n>)");
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(f.substr(5), &used);
            if (used != f.size() - 5) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw DomainError("bad modulus in '" + f + "'");
        }
        FiniteCommRing z = ring_zmod(n);
        out = out ? ring_product(*out, z) : z;
    }
    return *out;
}

std::optional<std::vector<int>> ring_iso(const FiniteCommRing& a, const FiniteCommRing& b) {
    if (a.n != b.n) return std::nullopt;
    const int n = a.n;
    std::vector<int> f(n, -1), order;
    std::vector<bool> used(n, false);
    order.push_back(a.zero);
    if (a.one != a.zero) order.push_back(a.one);
    for (int x = 0; x < n; ++x)
        if (x != a.zero && x != a.one) order.push_back(x);
    std::vector<int> done;
    auto consistent = [&](int x) {
        for (int y : done) {
            for (auto [p, q] : {std::pair{a.plus(x, y), b.plus(f[x], f[y])}, std::pair{a.times(x, y), b.times(f[x], f[y])}})
                if (f[p] >= 0 && f[p] != q) return false;
        }
        return true;
    };
    std::function<bool(std::size_t)> go = [&](std::size_t k) {
        if (k == order.size()) {
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (f[a.plus(x, y)] != b.plus(f[x], f[y]) || f[a.times(x, y)] != b.times(f[x], f[y])) return false;
            return true;
        }
        const int x = order[k];
        for (int y = 0; y < n; ++y) {
            if (used[y]) continue;
            if (k == 0 && y != b.zero) continue;
            if (k == 1 && x == a.one && y != b.one) continue;
            f[x] = y;
            used[y] = true;
            done.push_back(x);
            if (consistent(x) && go(k + 1)) return true;
            done.pop_back();
            used[y] = false;
            f[x] = -1;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return f;
}

Subset ideal_generated(const FiniteCommRing& r, const std::vector<int>& gens) {
    Subset in(r.n);
    std::vector<int> elems;
    auto add = [&](int x) {
        if (!in[x]) {
            in.set(x);
            elems.push_back(x);
        }
    };
    add(r.zero);
    for (int g : gens)
        for (int s = 0; s < r.n; ++s) add(r.times(g, s));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) add(r.plus(elems[i], elems[j]));
    return in;
}

bool is_ideal(const FiniteCommRing& r, const Subset& s) {
    if (!s[r.zero]) return false;
    for (int a : members(s))
        for (int b = 0; b < r.n; ++b) {
            if (!s[r.times(a, b)]) return false;
            if (s[b] && !s[r.plus(a, b)]) return false;
        }
    return true;
}

bool is_prime_ideal(const FiniteCommRing& r, const Subset& s) {
    if (!is_ideal(r, s) || s[r.one]) return false;
    for (int a = 0; a < r.n; ++a)
        for (int b = a; b < r.n; ++b)
            if (s[r.times(a, b)] && !s[a] && !s[b]) return false;
    return true;
}

std::vector<Subset> ring_ideals(const FiniteCommRing& r) {
    std::vector<Subset> out{ideal_generated(r, {})};
    std::map<Subset, bool, SubsetLess> seen{{out[0], true}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::vector<int> base = members(out[i]);
        for (int g = 0; g < r.n; ++g) {
            if (out[i][g]) continue;
            std::vector<int> gens = base;
            gens.push_back(g);
            Subset next = ideal_generated(r, gens);
            if (seen.emplace(next, true).second) {
                out.push_back(next);
                check_guard(out.size(), "ring ideals");
            }
        }
    }
    normalize_family(out);
    return out;
}

std::vector<Subset> prime_ideals(const FiniteCommRing& r) {
    std::vector<Subset> out;
    for (const auto& i : ring_ideals(r))
        if (is_prime_ideal(r, i)) out.push_back(i);
    return out;
}

std::string ideal_label(const FiniteCommRing& r, const Subset& ideal) {
    for (int g = 0; g < r.n; ++g)
        if (ideal[g] && ideal_generated(r, {g}) == ideal) return "(" + r.label(g) + ")";
    std::vector<int> gens;
    Subset acc = ideal_generated(r, {});
    for (int g = 0; g < r.n && acc != ideal; ++g)
        if (ideal[g] && !acc[g]) {
            gens.push_back(g);
            acc = ideal_generated(r, gens);
        }
    std::string out = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "," : "") + r.label(gens[i]);
    return out + ")";
}

// ---------------------------------------------------------------------------
// S(A) and the coverage C

SMonoid s_monoid(const FiniteCommRing& r) {
    UnionFind uf(r.n);
    for (int a = 0; a < r.n; ++a) uf.merge(a, r.times(a, a));
    for (bool changed = true; changed;) {
        changed = false;
        for (int a = 0; a < r.n; ++a) {
            const int root = uf.find(a);
            if (root == a) continue;
            for (int c = 0; c < r.n; ++c) changed = uf.merge(r.times(a, c), r.times(root, c)) || changed;
        }
    }
    SMonoid s;
    s.pi = uf.classes();
    const int k = *std::max_element(s.pi.begin(), s.pi.end()) + 1;
    s.rep.assign(k, -1);
    for (int a = 0; a < r.n; ++a)
        if (s.rep[s.pi[a]] < 0) s.rep[s.pi[a]] = a;
    s.mul.assign(static_cast<std::size_t>(k) * k, 0);
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) s.mul[static_cast<std::size_t>(x) * k + y] = s.pi[r.times(s.rep[x], s.rep[y])];
    std::vector<Subset> up(k, Subset(k));
    std::vector<std::string> labels(k);
    for (int x = 0; x < k; ++x) {
        labels[x] = "[" + r.label(s.rep[x]) + "]";
        for (int y = 0; y < k; ++y)
            if (s.mul[static_cast<std::size_t>(x) * k + y] == x) up[x].set(y);
    }
    s.order = preorder_from_up_sets(std::move(up), std::move(labels));
    if (!s.order.is_poset()) throw std::logic_error("S(A) order is not antisymmetric");
    return s;
}

std::vector<int> s_congruence_by_relation(const FiniteCommRing& r) {
    UnionFind uf(r.n);
    for (int c = 0; c < r.n; ++c) {
        std::vector<int> powers;
        std::vector<bool> seen(r.n, false);
        for (int p = c; !seen[p]; p = r.times(p, c)) {
            seen[p] = true;
            powers.push_back(p);
        }
        for (int d = 0; d < r.n; ++d)
            for (int p : powers) uf.merge(r.times(powers[0], d), r.times(p, d));
    }
    return uf.classes();
}

namespace {

// Elements of the additive subgroup generated by the members of the classes in `sieve`.
Subset sieve_sums(const FiniteCommRing& r, const SMonoid& s, const Subset& sieve) {
    Subset in(r.n);
    std::vector<int> elems;
    for (int a = 0; a < r.n; ++a)
        if (sieve[s.pi[a]]) {
            in.set(a);
            elems.push_back(a);
        }
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const int x = r.plus(elems[i], elems[j]);
            if (!in[x]) {
                in.set(x);
                elems.push_back(x);
            }
        }
    return in;
}

bool sum_covers(const FiniteCommRing& r, const SMonoid& s, int x, const Subset& sieve) {
    if (x == s.pi[r.zero]) return true;  // ∅ already covers π(0)
    const Subset sums = sieve_sums(r, s, sieve);
    for (int a = 0; a < r.n; ++a)
        if (sums[a] && s.pi[a] == x) return true;
    return false;
}

}  // namespace

Coverage zariski_coverage(const FiniteCommRing& r, const SMonoid& s) {
    const Poset& p = s.order;
    std::vector<std::vector<Subset>> covers(p.n);
    for (int x = 0; x < p.n; ++x) {
        if (x == s.pi[r.zero]) {
            covers[x].push_back(p.none());
            continue;
        }
        std::vector<Subset> good;
        for (const auto& sieve : lower_sets_within(p, p.down[x]))
            if (sum_covers(r, s, x, sieve)) good.push_back(sieve);
        // Keep the minimal covering sieves; the rest are generated by them.
        for (const auto& g : good) {
            bool minimal = true;
            for (const auto& h : good)
                if (h != g && h.is_subset_of(g)) {
                    minimal = false;
                    break;
                }
            if (minimal) covers[x].push_back(g);
        }
    }
    return make_coverage(p, std::move(covers));
}

bool topc_covers(const FiniteCommRing& r, const SMonoid& s, int x, const Subset& sieve) {
    std::vector<int> gens;
    for (int b = 0; b < r.n; ++b)
        if (sieve[s.pi[b]]) gens.push_back(b);
    const Subset ideal = ideal_generated(r, gens);
    for (int a = 0; a < r.n; ++a) {
        if (s.pi[a] != x) continue;
        std::vector<bool> seen(r.n, false);
        for (int p = a; !seen[p]; p = r.times(p, a)) {
            if (ideal[p]) return true;
            seen[p] = true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// presented lattices

Presentation zariski_presentation(const FiniteCommRing& r) {
    Presentation p;
    p.logic = Logic::Coherent;
    for (int a = 0; a < r.n; ++a) p.generators.push_back(gen_name(a));
    auto d = [](int a) { return Term::generator(a); };
    auto rel = [&](Term lhs, Term rhs, bool eq) {
        Relation x;
        x.lhs = std::move(lhs);
        x.rhs = std::move(rhs);
        x.equality = eq;
        x.line = static_cast<int>(p.relations.size()) + 1;
        p.relations.push_back(std::move(x));
    };
    rel(d(r.one), Term::top(), true);
    rel(d(r.zero), Term::bottom(), true);
    for (int a = 0; a < r.n; ++a)
        for (int b = a; b < r.n; ++b) {
            rel(d(r.times(a, b)), Term::meet({d(a), d(b)}), true);
            rel(d(r.plus(a, b)), Term::join({d(a), d(b)}), false);
        }
    return p;
}

Presentation op_ideal_presentation(const FiniteCommRing& r) {
    Presentation p = zariski_presentation(r);
    for (auto& rel : p.relations)
        if (rel.rhs.op == Term::Op::Meet) rel.equality = false;
    return p;
}

ZariskiLattice zariski_lattice(const FiniteCommRing& r) {
    ZariskiLattice z;
    PresentedLattice pl = present_lattice(zariski_presentation(r), ring_present_options());
    z.lattice = pl.structure;
    z.d = pl.generator_images;
    z.route = pl.route;

    const SMonoid s = s_monoid(r);
    const GrothendieckTopology j = saturate(zariski_coverage(r, s));
    const FiniteFrame ideals = ideal_frame(j);
    const CompactPart part = c_compact_elements(ideals, {CompactTag::Finite, 0});
    z.compact = lattice_from_poset(part.poset);
    std::vector<int> position(ideals.size(), -1);
    for (std::size_t i = 0; i < part.elements.size(); ++i) position[part.elements[i]] = static_cast<int>(i);
    for (int a = 0; a < r.n; ++a) {
        const int at = ideals.find(principal_j_ideal(j, s.pi[a]));
        if (at < 0 || position[at] < 0) throw std::logic_error("principal C-ideal of " + r.label(a) + " is not compact");
        z.compact_d.push_back(position[at]);
    }
    auto iso = generated_iso(z.lattice, z.d, z.compact, z.compact_d);
    if (!iso)
        throw std::logic_error("Zariski lattice mismatch: presented lattice has " + std::to_string(z.lattice.size()) +
                               " elements, compact C-ideals " + std::to_string(z.compact.size()) + "; " +
                               ring_text(r));
    z.iso = *iso;
    return z;
}

// ---------------------------------------------------------------------------
// spaces

TopSpace spec_space(const FiniteCommRing& r) {
    const auto primes = prime_ideals(r);
    const int m = static_cast<int>(primes.size());
    TopSpace x;
    x.n = m;
    for (const auto& p : primes) x.labels.push_back(ideal_label(r, p));
    for (const auto& i : ring_ideals(r)) {
        Subset open(m);
        for (int k = 0; k < m; ++k)
            if (!i.is_subset_of(primes[k])) open.set(k);
        x.opens.push_back(open);
    }
    x.opens.push_back(Subset(m));
    normalize_family(x.opens);
    validate_space(x);
    return x;
}

std::vector<Subset> prime_filters_ring(const FiniteCommRing& r) {
    // Any S with ab ∈ S iff a, b ∈ S is π⁻¹ of a filter of S(A), and filters of a finite
    // meet-semilattice are principal.
    const SMonoid s = s_monoid(r);
    std::vector<Subset> out;
    for (int x = 0; x < s.order.n; ++x) {
        Subset cand(r.n);
        for (int a = 0; a < r.n; ++a)
            if (s.order.leq(x, s.pi[a])) cand.set(a);
        bool ok = cand[r.one] && !cand[r.zero];
        for (int a = 0; a < r.n && ok; ++a)
            for (int b = 0; b < r.n && ok; ++b) {
                if (cand[r.times(a, b)] != (cand[a] && cand[b])) ok = false;
                if (cand[r.plus(a, b)] && !cand[a] && !cand[b]) ok = false;
            }
        if (ok) out.push_back(cand);
    }
    normalize_family(out);
    return out;
}

SpectraHomeomorphism spectra_homeomorphism(const FiniteCommRing& r) {
    SpectraHomeomorphism h;
    const SMonoid s = s_monoid(r);
    const GrothendieckTopology j = saturate(zariski_coverage(r, s));
    h.subterminal = subterminal_space(j);
    h.zariski = spec_space(r);
    const auto filters = j_prime_filters(j);
    const auto primes = prime_ideals(r);
    auto fail = [&](const std::string& why) {
        throw std::logic_error("spectra do not match: " + why + "\n  subterminal: " + space_text(h.subterminal) +
                               "\n  zariski: " + space_text(h.zariski));
    };
    if (filters.size() != static_cast<std::size_t>(h.subterminal.n)) fail("point count differs from the filter count");
    std::vector<bool> hit(primes.size(), false);
    for (const auto& f : filters) {
        Subset complement(r.n);
        for (int a = 0; a < r.n; ++a)
            if (!f[s.pi[a]]) complement.set(a);
        auto it = std::find(primes.begin(), primes.end(), complement);
        if (it == primes.end()) fail("filter " + subset_string(f) + " has a non-prime complement");
        const int k = static_cast<int>(it - primes.begin());
        if (hit[k]) fail("two filters reach the same prime");
        hit[k] = true;
        h.points.push_back(k);
    }
    if (h.points.size() != primes.size()) fail("some prime ideal is missed");
    if (h.subterminal.opens.size() != h.zariski.opens.size()) fail("open counts differ");
    for (const auto& u : h.subterminal.opens) {
        Subset image(h.zariski.n);
        for_each_member(u, [&](int p) { image.set(h.points[p]); });
        if (!h.zariski.is_open(image)) fail("image of " + subset_string(u) + " is not open");
    }
    return h;
}

bool radical_membership(const FiniteCommRing& r, int a, const std::vector<int>& bs) {
    const Subset ideal = ideal_generated(r, bs);
    std::vector<bool> seen(r.n, false);
    for (int p = a; !seen[p]; p = r.times(p, a)) {
        if (ideal[p]) return true;
        seen[p] = true;
    }
    return false;
}

bool radical_membership_lattice(const ZariskiLattice& z, int a, const std::vector<int>& bs) {
    int j = z.lattice.bot;
    for (int b : bs) j = z.lattice.join(j, z.d.at(b));
    return z.lattice.leq(z.d.at(a), j);
}

TopSpace op_ideal_space(const FiniteCommRing& r) {
    std::vector<Subset> proper;
    std::vector<std::string> labels;
    for (const auto& i : ring_ideals(r))
        if (!i[r.one]) {
            proper.push_back(i);
            labels.push_back(ideal_label(r, i));
        }
    const int m = static_cast<int>(proper.size());
    std::vector<Subset> subbasis;
    for (int a = 0; a < r.n; ++a) {
        Subset u(m);
        for (int k = 0; k < m; ++k)
            if (!proper[k][a]) u.set(k);
        subbasis.push_back(u);
    }
    return space_from_subbasis(m, subbasis, labels);
}

OpIdealLattice op_ideal_lattice(const FiniteCommRing& r) {
    OpIdealLattice out;
    out.presented = present_lattice(op_ideal_presentation(r), ring_present_options());
    const TopSpace x = op_ideal_space(r);
    out.opens = open_frame(x);
    std::vector<int> gens(r.n, -1);
    std::vector<Subset> proper;  // same order as the points of op_ideal_space
    for (const auto& i : ring_ideals(r))
        if (!i[r.one]) proper.push_back(i);
    for (int a = 0; a < r.n; ++a) {
        Subset u(x.n);
        for (int k = 0; k < x.n; ++k)
            if (!proper[k][a]) u.set(k);
        gens[a] = out.opens.find(u);
    }
    auto iso = generated_iso(out.presented.structure, out.presented.generator_images, out.opens, gens);
    if (!iso)
        throw std::logic_error("op-ideal lattice mismatch: presented " + std::to_string(out.presented.structure.size()) +
                               " elements, opens " + std::to_string(out.opens.size()) + "; " + ring_text(r));
    out.iso = *iso;
    return out;
}

}  // namespace stonework
