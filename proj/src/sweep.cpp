#include "stonework/sweep.hpp"

#include "stonework/corpus.hpp"
#include "stonework/invariants.hpp"
#include "stonework/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace stonework {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

struct Outcome {
    int cases = 0;
    std::vector<std::string> failures;
};

// Runs work(i) for i < count on a small pool; results land in their own slots.
std::vector<Outcome> fan_out(std::size_t count, int threads, const std::function<Outcome(std::size_t)>& work) {
    std::vector<Outcome> out(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) out[i] = work(i);
    };
    unsigned n = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(count, 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

SweepRow make_row(const std::string& check, int size) {
    SweepRow row;
    row.check = check;
    row.size = size;
    return row;
}

void merge(SweepRow& row, const std::vector<Outcome>& outcomes) {
    for (const auto& o : outcomes) {
        ++row.structures;
        row.cases += o.cases;
        row.failures += static_cast<int>(o.failures.size());
        for (const auto& f : o.failures)
            if (row.counterexamples.size() < kMaxCounterexamples) row.counterexamples.push_back(f);
    }
}

Outcome unique_check(const Poset& p) {
    Outcome o;
    const auto tops = all_topologies(p);
    std::vector<std::vector<Subset>> ideal_sets;
    for (const auto& j : tops) ideal_sets.push_back(j_ideals(j));
    o.cases = static_cast<int>(tops.size());
    for (std::size_t a = 0; a < tops.size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
            if (ideal_sets[a] == ideal_sets[b])
                o.failures.push_back(canonical_form(p) + " topologies " + std::to_string(b) + " and " +
                                     std::to_string(a) + " share their ideals");
    return o;
}

Outcome bijection_check(const Poset& p) {
    Outcome o;
    const auto tops = all_topologies(p);
    for (std::size_t t = 0; t < tops.size(); ++t) {
        ++o.cases;
        try {
            const auto b = filter_bijection(tops[t]);
            if (b.frame_filters.size() != b.site_filters.size())
                o.failures.push_back(canonical_form(p) + " topology " + std::to_string(t) + ": sizes differ");
        } catch (const std::logic_error& e) {
            o.failures.push_back(canonical_form(p) + " topology " + std::to_string(t) + ": " + e.what());
        }
    }
    return o;
}

Outcome agreement_check(const FiniteFrame& d, ConditionReport (*conditions)(const FiniteFrame&)) {
    Outcome o;
    o.cases = 1;
    const auto r = conditions(d);
    if (!r.agree()) {
        std::string values;
        for (const auto& c : r.conditions) values += c.value ? '1' : '0';
        o.failures.push_back(canonical_form(d.carrier) + " conditions " + values);
    }
    return o;
}

}  // namespace

bool SweepReport::pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.failures == 0; });
}

std::vector<std::string> sweep_checks() { return {"unique", "bijectionpoints", "boolean", "morgan"}; }

SweepReport run_sweep(const SweepBounds& bounds) {
    if (bounds.posets < 0 || bounds.dlats < 0) throw DomainError("sweep bounds must be non-negative");
    SweepReport report;
    report.bounds = bounds;
    for (int n = 1; n <= bounds.posets; ++n) {
        const auto posets = posets_of_size(n);
        SweepRow unique = make_row("unique", n), bijection = make_row("bijectionpoints", n);
        merge(unique, fan_out(posets.size(), bounds.threads, [&](std::size_t i) { return unique_check(posets[i]); }));
        merge(bijection,
              fan_out(posets.size(), bounds.threads, [&](std::size_t i) { return bijection_check(posets[i]); }));
        report.rows.push_back(std::move(unique));
        report.rows.push_back(std::move(bijection));
    }
    if (bounds.dlats > 0) {
        const auto all = distributive_lattices_up_to(bounds.dlats);
        for (int size = 1; size <= bounds.dlats; ++size) {
            std::vector<const FiniteFrame*> of_size;
            for (const auto& d : all)
                if (d.size() == size) of_size.push_back(&d);
            SweepRow boolean = make_row("boolean", size), morgan = make_row("morgan", size);
            merge(boolean, fan_out(of_size.size(), bounds.threads, [&](std::size_t i) {
                      return agreement_check(*of_size[i], almost_discrete_conditions);
                  }));
            merge(morgan, fan_out(of_size.size(), bounds.threads, [&](std::size_t i) {
                      return agreement_check(*of_size[i], extremally_disconnected_conditions);
                  }));
            report.rows.push_back(std::move(boolean));
            report.rows.push_back(std::move(morgan));
        }
    }
    return report;
}

nlohmann::ordered_json sweep_to_json(const SweepReport& r) {
    using Json = nlohmann::ordered_json;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json j{{"check", row.check},           {"size", row.size},         {"structures", row.structures},
               {"cases", row.cases},           {"failures", row.failures}, {"status", row.failures ? "FAIL" : "PASS"}};
        if (!row.counterexamples.empty()) j["counterexamples"] = row.counterexamples;
        rows.push_back(std::move(j));
    }
    return Json{{"bounds", {{"posets", r.bounds.posets}, {"dlats", r.bounds.dlats}}}, {"pass", r.pass()}, {"rows", rows}};
}

}  // namespace stonework
