// stonework: batch front end over the library. JSON on stdout, errors as JSON on stderr.
// Exit codes: 0 success, 1 domain error or failed check, 2 usage error.

#include "stonework/corpus.hpp"
#include "stonework/io.hpp"
#include "stonework/presentations.hpp"
#include "stonework/sweep.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace stonework;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string coverage;
    std::string site;
    std::string gamma;
    std::string kind;
    std::string logic;
    std::string query;
    std::string ring;
    std::string table;
    std::string invariant;
    std::string set, mslat, jsl, cjsl;
    bool semantic = false;
    bool op_ideals = false;
    bool dot = false;
    std::size_t guard = 0;
    int max_generators = 4;
    SweepBounds bounds;
};

Json header(const std::string& command) {
    return Json{{"command", command}, {"guard", frame_guard()}};
}

void emit(const std::string& command, Json body) {
    Json out{{"stonework", header(command)}};
    for (auto& [k, v] : body.items()) out[k] = std::move(v);
    std::cout << out.dump(2) << "\n";
}

void emit_dot(const std::string& command, const std::string& dot) {
    std::cout << "// stonework " << command << ", guard " << frame_guard() << "\n" << dot;
    if (!dot.empty() && dot.back() != '\n') std::cout << "\n";
}

const std::string& need(const std::string& value, const char* what) {
    if (value.empty()) throw UsageError(std::string("missing ") + what);
    return value;
}

// A coverage file, or a poset file with a named coverage (trivial when none is given).
GrothendieckTopology load_site(const std::string& path, const std::string& named) {
    const Json j = load_json(path);
    Coverage cov;
    if (j.contains("poset")) {
        cov = coverage_from_json(j);
        if (!named.empty()) cov = named_coverage(cov.base, named);
    } else {
        cov = named_coverage(poset_from_json(j), named.empty() ? "trivial" : named);
    }
    return saturate(cov);
}

// Elements of an ideal frame named by the base elements they contain.
FiniteFrame with_base_labels(FiniteFrame l, const Preorder& base) {
    l.carrier.labels.resize(l.size());
    for (int i = 0; i < l.size(); ++i) {
        std::string name = "{";
        for (int c : members(l.sets[i])) name += (name.size() > 1 ? "," : "") + base.label(c);
        l.carrier.labels[i] = name + "}";
    }
    return l;
}

int cmd_ideal_frame(const Options& o) {
    const auto j = load_site(need(o.input, "input file"), o.coverage);
    const auto l = with_base_labels(ideal_frame(j), j.base);
    if (o.dot) {
        emit_dot("ideal-frame", frame_dot(l, "IdealFrame"));
        return 0;
    }
    Json body = frame_to_json(l);
    body["topology"] = topology_to_json(j);
    emit("ideal-frame", std::move(body));
    return 0;
}

int cmd_space(const Options& o) {
    const auto j = load_site(need(o.site, "--site"), o.coverage);
    TopSpace x;
    if (o.gamma.empty()) {
        x = subterminal_space(j);
    } else {
        const auto gamma = gamma_from_json(load_json(o.gamma), j.base);
        if (auto v = subframe_violation(j, gamma); !v.empty()) throw DomainError("gamma: " + v);
        x = gamma_subterminal_space(j, gamma, j_prime_filters(j));
    }
    if (o.dot) {
        emit_dot("space", space_dot(x, "Space"));
        return 0;
    }
    Json body = space_to_json(x);
    body["sober"] = is_sober(x);
    body["discrete"] = is_discrete(x);
    emit("space", std::move(body));
    return 0;
}

int cmd_dual(const Options& o) {
    const Json in = load_json(need(o.input, "input file"));
    const Poset p = in.contains("poset") ? poset_from_json(in.at("poset")) : poset_from_json(in);
    const auto r = check_duality(need(o.kind, "--kind"), p);
    if (o.dot) {
        emit_dot("dual", hasse_dot(r.original, "Original") + hasse_dot(r.dual, "Dual"));
    } else {
        emit("dual", duality_report_to_json(r));
    }
    if (!r.ok) throw CheckFailed(o.kind + " round trip failed");
    return 0;
}

int cmd_filters(const Options& o) {
    const auto j = load_site(need(o.input, "input file"), o.coverage);
    const auto b = filter_bijection(j);
    Json frame_filters = Json::array(), site_filters = Json::array();
    for (const auto& f : b.frame_filters) frame_filters.push_back(subset_to_json(f));
    for (const auto& g : b.site_filters) site_filters.push_back(labelled_subset_to_json(g, j.base));
    emit("filters", Json{{"frame", frame_to_json(with_base_labels(b.frame, j.base))},
                         {"frame_filters", frame_filters},
                         {"site_filters", site_filters},
                         {"forward", b.forward},
                         {"backward", b.backward}});
    return 0;
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int cmd_free(const Options& o) {
    const int chosen = !o.set.empty() + !o.mslat.empty() + !o.jsl.empty() + !o.cjsl.empty();
    if (chosen != 1) throw UsageError("free needs exactly one of --set, --mslat, --jsl, --cjsl");
    if (!o.mslat.empty()) {
        const Poset m = free_meet_semilattice(split_names(o.mslat));
        if (o.dot) {
            emit_dot("free", hasse_dot(m, "FreeMeetSemilattice"));
        } else {
            emit("free", poset_to_json(m));
        }
        return 0;
    }
    FreeFrame f;
    if (!o.set.empty()) {
        f = free_frame_on_set(split_names(o.set));
    } else if (!o.jsl.empty()) {
        f = free_frame_on_jsl(frame_from_json(load_json(o.jsl)));
    } else {
        f = free_frame_on_cjsl(frame_from_json(load_json(o.cjsl)));
    }
    if (o.dot) {
        emit_dot("free", frame_dot(f.frame, "FreeFrame"));
        return 0;
    }
    Json body = frame_to_json(f.frame);
    body["eta"] = f.eta;
    emit("free", std::move(body));
    return 0;
}

int cmd_present(const Options& o) {
    const std::string& path = need(o.input, "presentation file");
    Presentation p = parse_presentation(read_file(path));
    if (!o.logic.empty()) p.logic = parse_logic(o.logic);
    PresentOptions opts;
    opts.max_free_generators = o.max_generators;
    opts.semantic_route = o.semantic;
    const auto pl = present_lattice(p, opts);
    FiniteFrame named = pl.structure;
    named.carrier.labels = pl.labels;
    if (o.dot) {
        emit_dot("present", frame_dot(named, "Presented"));
        return 0;
    }
    Json body = frame_to_json(named);
    Json gens = Json::object();
    for (std::size_t g = 0; g < p.generators.size(); ++g) gens[p.generators[g]] = pl.generator_images[g];
    body["logic"] = logic_name(p.logic);
    body["route"] = pl.route;
    body["generators"] = gens;
    if (!o.query.empty()) body["query"] = Json{{"relation", o.query}, {"holds", pl.entails(o.query)}};
    emit("present", std::move(body));
    return 0;
}

FiniteCommRing load_ring(const Options& o) {
    if (o.ring.empty() == o.table.empty()) throw UsageError("zariski needs exactly one of --ring, --table");
    return o.ring.empty() ? ring_from_json(load_json(o.table)) : parse_ring_spec(o.ring);
}

int cmd_zariski(const Options& o) {
    const auto r = load_ring(o);
    const std::string source = o.ring.empty() ? o.table : o.ring;
    if (o.op_ideals) {
        const auto ol = op_ideal_lattice(r);
        const auto x = op_ideal_space(r);
        if (o.dot) {
            emit_dot("zariski", space_dot(x, "OpIdeals"));
            return 0;
        }
        Json body = space_to_json(x);
        FiniteFrame named = ol.presented.structure;
        named.carrier.labels = ol.presented.labels;
        body["ring"] = Json{{"source", source}, {"n", r.n}};
        body["lattice"] = frame_to_json(named);
        body["iso"] = ol.iso;
        emit("zariski", std::move(body));
        return 0;
    }
    const auto h = spectra_homeomorphism(r);
    if (o.dot) {
        emit_dot("zariski", space_dot(h.zariski, "Spec"));
        return 0;
    }
    const auto z = zariski_lattice(r);
    Json d = Json::object();
    for (int a = 0; a < r.n; ++a) d[r.label(a)] = z.d[a];
    Json body = space_to_json(h.zariski);
    body["ring"] = Json{{"source", source}, {"n", r.n}};
    body["lattice"] = frame_to_json(z.lattice);
    body["d"] = d;
    body["route"] = z.route;
    body["subterminal"] = space_to_json(h.subterminal);
    body["homeomorphism"] = h.points;
    emit("zariski", std::move(body));
    return 0;
}

std::string detect_kind(const Poset& p) {
    if (p.is_poset() && check_bounded_lattice(p) && is_distributive(lattice_from_poset(p))) return "dlat";
    if (p.is_poset() && check_meet_semilattice(p)) return "mslat";
    return "preorder";
}

int cmd_check(const Options& o) {
    const Json in = load_json(need(o.input, "--input"));
    const Poset p = poset_from_json(in);
    std::string kind = o.kind;
    if (kind.empty() && in.contains("kind") && in.at("kind").is_string()) kind = in.at("kind").get<std::string>();
    if (kind.empty()) kind = detect_kind(p);
    emit("check", condition_report_to_json(check_invariant(need(o.invariant, "--invariant"), kind, p)));
    return 0;
}

int cmd_sweep(const Options& o) {
    const auto report = run_sweep(o.bounds);
    emit("sweep", sweep_to_json(report));
    if (!report.pass()) throw CheckFailed("sweep found failures");
    return 0;
}

int cmd_dot(const Options& o) {
    const Json in = load_json(need(o.input, "input file"));
    if (in.contains("points")) {
        emit_dot("dot", space_dot(space_from_json(in), "Space"));
    } else if (in.contains("poset")) {
        emit_dot("dot", hasse_dot(poset_from_json(in.at("poset")), "P"));
    } else {
        emit_dot("dot", hasse_dot(poset_from_json(in), "P"));
    }
    return 0;
}

void print_error(const char* kind, const std::string& message) {
    std::cerr << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite Stone-type dualities, sites, spectra and invariants"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--guard", o.guard, "frame-size guard (default 2^20 or STONEWORK_GUARD)")
        ->check(CLI::PositiveNumber);

    auto* ideal = app.add_subcommand("ideal-frame", "frame of J-ideals of a site");
    ideal->add_option("input", o.input, "poset or coverage file")->required();
    ideal->add_option("--coverage", o.coverage, "named coverage");
    ideal->add_flag("--dot", o.dot);

    auto* space = app.add_subcommand("space", "subterminal point space of a site");
    space->add_option("--site", o.site, "poset or coverage file")->required();
    space->add_option("--gamma", o.gamma, "subframe of J-ideals");
    space->add_option("--coverage", o.coverage, "named coverage");
    space->add_flag("--dot", o.dot);

    auto* dual = app.add_subcommand("dual", "duality round trip");
    dual->add_option("input", o.input, "poset file")->required();
    dual->add_option("--kind", o.kind)->required()->check(CLI::IsMember(duality_kinds()));
    dual->add_flag("--dot", o.dot);

    auto* filters = app.add_subcommand("filters", "completely prime filters vs J-prime filters");
    filters->add_option("input", o.input, "poset or coverage file")->required();
    filters->add_option("--coverage", o.coverage, "named coverage");

    auto* free = app.add_subcommand("free", "free structures");
    free->add_option("--set", o.set, "generators a,b,...: free frame on a set");
    free->add_option("--mslat", o.mslat, "generators a,b,...: free meet-semilattice");
    free->add_option("--jsl", o.jsl, "lattice file: free frame on a join-semilattice");
    free->add_option("--cjsl", o.cjsl, "lattice file: free frame on a complete join-semilattice");
    free->add_flag("--dot", o.dot);

    auto* present = app.add_subcommand("present", "structure presented by generators and relations");
    present->add_option("input", o.input, "presentation file")->required();
    present->add_option("--logic", o.logic)->check(CLI::IsMember({"horn", "coherent", "geometric"}));
    present->add_option("--query", o.query, "relation t1 <= t2 or t1 = t2");
    present->add_option("--max-generators", o.max_generators, "bound for the free structure")
        ->check(CLI::PositiveNumber);
    present->add_flag("--semantic", o.semantic, "evaluate through 2-valued models past the bound");
    present->add_flag("--dot", o.dot);

    auto* zariski = app.add_subcommand("zariski", "Zariski spectrum of a finite commutative ring");
    zariski->add_option("--ring", o.ring, "zmod:n, products with *");
    zariski->add_option("--table", o.table, "ring table file");
    zariski->add_flag("--op-ideals", o.op_ideals);
    zariski->add_flag("--dot", o.dot);

    auto* check = app.add_subcommand("check", "logical invariants as lattice conditions");
    check->add_option("--invariant", o.invariant)->required()->check(CLI::IsMember(invariant_names()));
    check->add_option("--input", o.input)->required();
    check->add_option("--kind", o.kind)->check(CLI::IsMember({"dlat", "mslat", "preorder", "frame"}));

    auto* sweep = app.add_subcommand("sweep", "exhaustive corpus checks");
    sweep->add_option("--posets", o.bounds.posets, "posets up to this size (0 skips)")->check(CLI::NonNegativeNumber);
    sweep->add_option("--dlats", o.bounds.dlats, "distributive lattices up to this size (0 skips)")
        ->check(CLI::NonNegativeNumber);
    sweep->add_option("--threads", o.bounds.threads, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);

    auto* dot = app.add_subcommand("dot", "Graphviz for a poset, coverage or space file");
    dot->add_option("input", o.input)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (o.guard > 0) set_frame_guard(o.guard);
        if (*ideal) return cmd_ideal_frame(o);
        if (*space) return cmd_space(o);
        if (*dual) return cmd_dual(o);
        if (*filters) return cmd_filters(o);
        if (*free) return cmd_free(o);
        if (*present) return cmd_present(o);
        if (*zariski) return cmd_zariski(o);
        if (*check) return cmd_check(o);
        if (*sweep) return cmd_sweep(o);
        if (*dot) return cmd_dot(o);
    } catch (const UsageError& e) {
        print_error("usage", e.what());
        return 2;
    } catch (const GuardError& e) {
        print_error("guard", e.what());
        return 1;
    } catch (const DomainError& e) {
        print_error("domain", e.what());
        return 1;
    } catch (const CheckFailed& e) {
        print_error("check", e.what());
        return 1;
    } catch (const std::logic_error& e) {
        print_error("check", e.what());
        return 1;
    }
    return 2;
}
