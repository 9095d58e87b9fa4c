#include "stonework/io.hpp"

#include <fstream>
#include <sstream>

namespace stonework {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        if (auto at = what.find("syntax error"); at != std::string::npos) what = what.substr(at);
        throw DomainError(source + ": line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
    }
}

Json load_json(const std::string& path) { return parse_json(read_file(path), path); }

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string(what) + ": missing \"" + key + "\"");
    return j.at(key);
}

int element_ref(const Json& v, const Preorder& p, const char* what) {
    if (v.is_number_integer()) {
        const int i = v.get<int>();
        if (i < 0 || i >= p.n) throw DomainError(std::string(what) + ": element index " + std::to_string(i) + " out of range");
        return i;
    }
    if (v.is_string()) {
        const int i = p.index_of(v.get<std::string>());
        if (i < 0) throw DomainError(std::string(what) + ": unknown element \"" + v.get<std::string>() + "\"");
        return i;
    }
    throw DomainError(std::string(what) + ": elements are named by index or label");
}

std::vector<std::vector<int>> table_from_json(const Json& j, int n, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw DomainError(std::string("ring: \"") + what + "\" must have " + std::to_string(n) + " rows");
    std::vector<std::vector<int>> rows;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw DomainError(std::string("ring: each \"") + what + "\" row must have " + std::to_string(n) + " entries");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw DomainError(std::string("ring: \"") + what + "\" entries must be integers");
            r.push_back(v.get<int>());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

Json labelled_family(const std::vector<Subset>& fam, const Preorder& p) {
    Json out = Json::array();
    for (const auto& s : fam) out.push_back(labelled_subset_to_json(s, p));
    return out;
}

}  // namespace

Preorder poset_from_json(const Json& j) {
    const Json& elems = field(j, "elements", "poset");
    if (!elems.is_array()) throw DomainError("poset: \"elements\" must be an array");
    std::vector<std::string> labels;
    for (const auto& e : elems) {
        if (!e.is_string()) throw DomainError("poset: element names must be strings");
        labels.push_back(e.get<std::string>());
    }
    for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
            if (labels[a] == labels[b]) throw DomainError("poset: duplicate element \"" + labels[a] + "\"");
    check_guard(labels.size(), "poset elements");
    const int n = static_cast<int>(labels.size());
    Preorder names = antichain(n);
    names.labels = labels;
    std::vector<std::pair<int, int>> gens;
    if (j.contains("leq")) {
        if (!j.at("leq").is_array()) throw DomainError("poset: \"leq\" must be an array of pairs");
        for (const auto& pair : j.at("leq")) {
            if (!pair.is_array() || pair.size() != 2) throw DomainError("poset: \"leq\" entries are pairs [i, j]");
            gens.emplace_back(element_ref(pair[0], names, "poset"), element_ref(pair[1], names, "poset"));
        }
    }
    return make_preorder(n, gens, labels);
}

Json poset_to_json(const Preorder& p) {
    Json elems = Json::array();
    for (int i = 0; i < p.n; ++i) elems.push_back(p.label(i));
    Json leq = Json::array();
    if (p.is_poset()) {
        for (auto [a, b] : hasse_edges(p)) leq.push_back({a, b});
    } else {
        for (int a = 0; a < p.n; ++a)
            for (int b : members(p.up[a]))
                if (a != b) leq.push_back({a, b});
    }
    return Json{{"elements", elems}, {"leq", leq}};
}

Coverage coverage_from_json(const Json& j) {
    Preorder p = poset_from_json(field(j, "poset", "coverage"));
    std::vector<std::vector<Subset>> covers(p.n);
    if (j.contains("covers")) {
        const Json& c = j.at("covers");
        if (!c.is_object()) throw DomainError("coverage: \"covers\" must map elements to lists of families");
        for (const auto& [key, fams] : c.items()) {
            const int x = p.index_of(key);
            if (x < 0) throw DomainError("coverage: unknown element \"" + key + "\"");
            if (!fams.is_array()) throw DomainError("coverage: families of \"" + key + "\" must be an array");
            for (const auto& fam : fams) {
                if (!fam.is_array()) throw DomainError("coverage: each family of \"" + key + "\" is an array");
                Subset s(p.n);
                for (const auto& e : fam) s.set(element_ref(e, p, "coverage"));
                covers[x].push_back(s);
            }
        }
    }
    return make_coverage(p, std::move(covers));
}

Json coverage_to_json(const Coverage& c) {
    Json covers = Json::object();
    for (int x = 0; x < c.base.n; ++x) covers[c.base.label(x)] = labelled_family(c.covers[x], c.base);
    return Json{{"poset", poset_to_json(c.base)}, {"covers", covers}};
}

Json topology_to_json(const GrothendieckTopology& j) {
    Json sieves = Json::object();
    for (int x = 0; x < j.base.n; ++x) sieves[j.base.label(x)] = labelled_family(j.sieves[x], j.base);
    return Json{{"poset", poset_to_json(j.base)}, {"sieves", sieves}};
}

FiniteFrame frame_from_json(const Json& j) {
    const Preorder p = poset_from_json(j);
    if (!p.is_poset()) throw DomainError("frame: the order is not antisymmetric");
    return lattice_from_poset(p);
}

Json frame_to_json(const FiniteFrame& l) {
    Json out = poset_to_json(l.carrier);
    out["bot"] = l.bot;
    out["top"] = l.top;
    if (!l.sets.empty()) {
        Json sets = Json::array();
        for (const auto& s : l.sets) sets.push_back(subset_to_json(s));
        out["sets"] = sets;
    }
    return out;
}

TopSpace space_from_json(const Json& j) {
    const Json& pts = field(j, "points", "space");
    const Json& opens = field(j, "opens", "space");
    if (!pts.is_array() || !opens.is_array()) throw DomainError("space: \"points\" and \"opens\" must be arrays");
    TopSpace x;
    x.n = static_cast<int>(pts.size());
    for (const auto& p : pts) x.labels.push_back(p.is_string() ? p.get<std::string>() : p.dump());
    Preorder names = antichain(x.n);
    names.labels = x.labels;
    for (const auto& u : opens) {
        if (!u.is_array()) throw DomainError("space: each open is an array of points");
        Subset s(x.n);
        for (const auto& e : u) s.set(element_ref(e, names, "space"));
        x.opens.push_back(s);
    }
    normalize_family(x.opens);
    validate_space(x);
    return x;
}

Json space_to_json(const TopSpace& x) {
    Json pts = Json::array();
    for (int i = 0; i < x.n; ++i) pts.push_back(x.label(i));
    Json opens = Json::array();
    for (const auto& u : x.opens) opens.push_back(subset_to_json(u));
    return Json{{"points", pts}, {"opens", opens}};
}

FiniteCommRing ring_from_json(const Json& j) {
    const Json& nj = field(j, "n", "ring");
    if (!nj.is_number_integer() || nj.get<int>() < 1) throw DomainError("ring: \"n\" must be a positive integer");
    const int n = nj.get<int>();
    check_guard(static_cast<std::size_t>(n), "ring elements");
    std::vector<int> add, mul;
    for (const auto& row : table_from_json(field(j, "add", "ring"), n, "add")) add.insert(add.end(), row.begin(), row.end());
    for (const auto& row : table_from_json(field(j, "mul", "ring"), n, "mul")) mul.insert(mul.end(), row.begin(), row.end());
    std::vector<std::string> labels;
    if (j.contains("labels"))
        for (const auto& l : j.at("labels")) labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
    return make_ring(n, std::move(add), std::move(mul), std::move(labels));
}

Json ring_to_json(const FiniteCommRing& r) {
    Json add = Json::array(), mul = Json::array(), labels = Json::array();
    for (int a = 0; a < r.n; ++a) {
        Json ra = Json::array(), rm = Json::array();
        for (int b = 0; b < r.n; ++b) {
            ra.push_back(r.plus(a, b));
            rm.push_back(r.times(a, b));
        }
        add.push_back(ra);
        mul.push_back(rm);
        labels.push_back(r.label(a));
    }
    return Json{{"n", r.n}, {"add", add}, {"mul", mul}, {"labels", labels}};
}

std::vector<Subset> gamma_from_json(const Json& j, const Preorder& base) {
    const Json& ideals = field(j, "ideals", "gamma");
    if (!ideals.is_array()) throw DomainError("gamma: \"ideals\" must be an array");
    std::vector<Subset> out;
    for (const auto& i : ideals) {
        if (!i.is_array()) throw DomainError("gamma: each ideal is an array of elements");
        Subset s(base.n);
        for (const auto& e : i) s.set(element_ref(e, base, "gamma"));
        out.push_back(s);
    }
    normalize_family(out);
    return out;
}

Json subset_to_json(const Subset& s) {
    Json out = Json::array();
    for_each_member(s, [&](int i) { out.push_back(i); });
    return out;
}

Json labelled_subset_to_json(const Subset& s, const Preorder& p) {
    Json out = Json::array();
    for_each_member(s, [&](int i) { out.push_back(p.label(i)); });
    return out;
}

Json duality_report_to_json(const DualityReport& r) {
    Json witness = Json::array();
    for (int w : r.witness) witness.push_back(w);
    return Json{{"kind", r.kind},
                {"ok", r.ok},
                {"original", poset_to_json(r.original)},
                {"frame", frame_to_json(r.frame)},
                {"dual", poset_to_json(r.dual)},
                {"recovered", poset_to_json(r.recovered)},
                {"witness", witness}};
}

Json condition_report_to_json(const ConditionReport& r) {
    auto list = [](const std::vector<Condition>& cs) {
        Json out = Json::array();
        for (const auto& c : cs) out.push_back(Json{{"condition", c.name}, {"value", c.value}});
        return out;
    };
    Json out{{"invariant", r.invariant}, {"kind", r.kind}, {"agree", r.agree()}, {"value", r.value()},
             {"conditions", list(r.conditions)}};
    if (!r.recorded.empty()) out["recorded"] = list(r.recorded);
    return out;
}

std::string space_dot(const TopSpace& x, const std::string& name) {
    Preorder p = specialization_order(x);
    p.labels = x.labels;
    return hasse_dot(p, name);
}

}  // namespace stonework
