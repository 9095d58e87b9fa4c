#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace stonework {

// Corpus bounds; 0 skips that part of the sweep.
struct SweepBounds {
    int posets = 4;  // posets up to iso, with every Grothendieck topology
    int dlats = 6;   // distributive lattices by size
    int threads = 0; // 0: hardware concurrency
};

struct SweepRow {
    std::string check;
    int size = 0;
    int structures = 0;
    int cases = 0;
    int failures = 0;
    std::vector<std::string> counterexamples;  // canonical forms, first few only
};

struct SweepReport {
    SweepBounds bounds;
    std::vector<SweepRow> rows;
    bool pass() const;
};

// Checks: unique (distinct topologies, distinct ideal sets), bijectionpoints (completely
// prime filters vs J-prime filters), boolean (five-way agreement), morgan (four-way).
SweepReport run_sweep(const SweepBounds& bounds);
std::vector<std::string> sweep_checks();

nlohmann::ordered_json sweep_to_json(const SweepReport& r);

}  // namespace stonework
