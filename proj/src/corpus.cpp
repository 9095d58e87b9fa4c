#include "stonework/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace stonework {

namespace {

using Key = std::tuple<std::size_t, std::size_t, int, int, int>;

std::vector<Key> element_keys(const Poset& p) {
    std::vector<Key> keys(p.n);
    auto h = heights(p);
    std::vector<int> in(p.n, 0), out(p.n, 0);
    for (auto [a, b] : hasse_edges(p)) {
        out[a]++;
        in[b]++;
    }
    for (int i = 0; i < p.n; ++i) keys[i] = {p.down[i].count(), p.up[i].count(), in[i], out[i], h[i]};
    return keys;
}

std::string encode(const Poset& p, const std::vector<int>& order) {
    std::string s;
    s.reserve(order.size() * order.size());
    for (int a : order)
        for (int b : order) s.push_back(p.leq(a, b) ? '1' : '0');
    return s;
}

}  // namespace

std::string canonical_form(const Poset& p) {
    auto keys = element_keys(p);
    std::vector<int> order(p.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    // Blocks of equal keys are permuted independently.
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < p.n;) {
        int j = i;
        while (j < p.n && keys[order[j]] == keys[order[i]]) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::string best;
    std::function<void(std::size_t)> go = [&](std::size_t b) {
        if (b == blocks.size()) {
            std::string s = encode(p, order);
            if (best.empty() || s < best) best = std::move(s);
            return;
        }
        auto [lo, hi] = blocks[b];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            go(b + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    go(0);
    std::string prefix = std::to_string(p.n) + ":";
    return prefix + best;
}

std::vector<Poset> posets_of_size(int n, const std::function<bool(const Poset&)>& keep) {
    std::vector<Poset> out;
    for (auto& p : posets_up_to(n, keep))
        if (p.n == n) out.push_back(std::move(p));
    return out;
}

std::vector<Poset> posets_up_to(int max_n, const std::function<bool(const Poset&)>& keep) {
    std::vector<Poset> out;
    std::vector<Poset> level{antichain(0)};
    if (!keep || keep(level.front())) out.push_back(level.front());
    for (int k = 0; k < max_n; ++k) {
        std::map<std::string, Poset> next;
        for (const Poset& p : level) {
            for (const Subset& below : all_lower_sets(p)) {
                std::vector<Subset> up(k + 1, Subset(k + 1));
                for (int i = 0; i < k; ++i) {
                    for_each_member(p.up[i], [&](int j) { up[i].set(j); });
                    if (below[i]) up[i].set(k);
                }
                up[k].set(k);
                Poset q = preorder_from_up_sets(std::move(up));
                if (keep && !keep(q)) continue;
                auto key = canonical_form(q);
                next.emplace(std::move(key), std::move(q));
            }
        }
        level.clear();
        for (auto& [key, q] : next) level.push_back(std::move(q));
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<FiniteFrame> distributive_lattices_up_to(int max_size) {
    std::vector<FiniteFrame> out;
    if (max_size < 1) return out;
    auto small = [max_size](const Poset& p) {
        return lower_sets_within(p, p.all(), static_cast<std::size_t>(max_size) + 1).size() <=
               static_cast<std::size_t>(max_size);
    };
    for (const Poset& p : posets_up_to(max_size - 1, small)) out.push_back(lower_sets(p));
    return out;
}

std::vector<FiniteFrame> lattices_up_to(int max_size) {
    std::vector<FiniteFrame> out;
    if (max_size >= 1) out.push_back(lattice_from_poset(antichain(1)));
    if (max_size >= 2) {
        for (const Poset& inner : posets_up_to(max_size - 2)) {
            Poset p = with_bounds(inner);
            if (check_bounded_lattice(p)) out.push_back(lattice_from_poset(p));
        }
    }
    return out;
}

Poset random_poset(int n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    std::vector<std::pair<int, int>> g;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.emplace_back(i, j);
    return make_preorder(n, g);
}

}  // namespace stonework
