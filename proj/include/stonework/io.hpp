#pragma once

#include "stonework/coverage.hpp"
#include "stonework/duality.hpp"
#include "stonework/invariants.hpp"
#include "stonework/spectra.hpp"
#include "stonework/zariski.hpp"

#include <json.hpp>

#include <string>

namespace stonework {

using Json = nlohmann::ordered_json;

// File contents; DomainError when the file cannot be read.
std::string read_file(const std::string& path);
// Parse errors are reported with line and column.
Json parse_json(const std::string& text, const std::string& source = "input");
Json load_json(const std::string& path);

// {"elements": [...], "leq": [[i, j], ...]}; leq lists generators, closed on load.
Preorder poset_from_json(const Json& j);
Json poset_to_json(const Preorder& p);

// {"poset": <poset>, "covers": {"c": [["d1", "d2"], ...]}}, elements named by label.
Coverage coverage_from_json(const Json& j);
Json coverage_to_json(const Coverage& c);
Json topology_to_json(const GrothendieckTopology& j);

// A poset file read as a bounded lattice; frames also dump their concrete sets.
FiniteFrame frame_from_json(const Json& j);
Json frame_to_json(const FiniteFrame& l);

// {"points": [...], "opens": [[...], ...]} with opens as point indices.
TopSpace space_from_json(const Json& j);
Json space_to_json(const TopSpace& x);

// {"n": k, "add": [[...]], "mul": [[...]], "labels": [...]?}
FiniteCommRing ring_from_json(const Json& j);
Json ring_to_json(const FiniteCommRing& r);

// {"ideals": [["a", "b"], ...]}: J-ideals given by their elements.
std::vector<Subset> gamma_from_json(const Json& j, const Preorder& base);

Json subset_to_json(const Subset& s);
Json labelled_subset_to_json(const Subset& s, const Preorder& p);
Json duality_report_to_json(const DualityReport& r);
Json condition_report_to_json(const ConditionReport& r);

// Graphviz: the specialization order of a space (posets and frames use hasse_dot).
std::string space_dot(const TopSpace& x, const std::string& name = "X");

}  // namespace stonework
