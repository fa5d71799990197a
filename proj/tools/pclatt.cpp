// pclatt: command-line front end for the finite lattice toolkit.
//
// Exit codes: 0 success, 1 a law failed inside its hypothesis class,
// 2 input error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pclatt/classify.hpp"
#include "pclatt/congruence.hpp"
#include "pclatt/deduction.hpp"
#include "pclatt/genlat.hpp"
#include "pclatt/implication.hpp"
#include "pclatt/io.hpp"
#include "pclatt/laws.hpp"
#include "pclatt/pseudo.hpp"
#include "pclatt/suite.hpp"

namespace {

using namespace pclatt;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFatal = 1;
constexpr int kExitInput = 2;

struct Globals {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

json set_json(const FiniteLattice& L, const ElementSet& s) {
    json arr = json::array();
    for (Element e : s.members()) arr.push_back(L.label(e));
    return arr;
}

json counterexample_json(const FiniteLattice& L, const Counterexample& cx) {
    json assignment = json::object();
    for (const auto& [var, e] : cx.assignment) assignment[var] = L.label(e);
    return {{"assignment", assignment},
            {"clause", cx.clause},
            {"lhs", cx.lhs ? json(L.label(*cx.lhs)) : json(nullptr)},
            {"rhs", cx.rhs ? json(L.label(*cx.rhs)) : json(nullptr)}};
}

json verdict_json(const FiniteLattice& L, const Verdict& v) {
    return {{"holds", v.holds},
            {"counterexample", v.counterexample ? counterexample_json(L, *v.counterexample) : json(nullptr)}};
}

std::string verdict_text(const FiniteLattice& L, const Verdict& v) {
    if (v.holds) return "yes";
    return "no (" + format_counterexample(L, *v.counterexample) + ")";
}

// ---------------------------------------------------------------------------

int cmd_check(const Globals& g, const std::string& file) {
    const auto L = load_lattice(file);
    const auto failure = find_pseudocomplement_failure(L);
    const auto distributive = is_distributive(L);

    std::optional<UnaryTable> star;
    if (!failure) star = pseudocomplement_table(L);

    Verdict pseudo;
    if (failure) {
        std::string clause = "no greatest y with x^y=0; maximal: {";
        for (std::size_t i = 0; i < failure->maximal.size(); ++i)
            clause += (i ? "," : "") + L.label(failure->maximal[i]);
        pseudo = Verdict::fail({{{"x", failure->element}}, clause + "}", std::nullopt, std::nullopt});
    }
    Verdict not_pseudo = Verdict::fail({{}, "lattice is not pseudocomplemented", std::nullopt, std::nullopt});
    Verdict stone_identity = star ? satisfies_stone_identity(L, *star) : not_pseudo;
    Verdict stone = star ? is_stone(L, *star) : not_pseudo;
    Verdict brouwerian = is_brouwerian(L);

    if (g.json()) {
        json out{{"size", L.size()},
                 {"bottom", L.label(L.bottom())},
                 {"top", L.label(L.top())},
                 {"bounded", true},
                 {"pseudocomplemented", verdict_json(L, pseudo)},
                 {"distributive", verdict_json(L, distributive)},
                 {"stone_identity", verdict_json(L, stone_identity)},
                 {"stone", verdict_json(L, stone)},
                 {"brouwerian", verdict_json(L, brouwerian)}};
        if (star) out["dense"] = set_json(L, dense_elements(L, *star));
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "bounded: yes (0=" << L.label(L.bottom()) << ", 1=" << L.label(L.top()) << ")\n"
              << "pseudocomplemented: " << verdict_text(L, pseudo) << "\n"
              << "distributive: " << verdict_text(L, distributive) << "\n"
              << "stone-identity: " << verdict_text(L, stone_identity) << "\n"
              << "stone: " << verdict_text(L, stone) << "\n"
              << "brouwerian: " << verdict_text(L, brouwerian) << "\n";
    if (star) std::cout << "dense: " << format_set(L, dense_elements(L, *star)) << "\n";
    return kExitOk;
}

int cmd_table(const Globals& g, const std::string& file, const std::string& op) {
    const auto L = load_lattice(file);
    const auto star = pseudocomplement_table(L);
    if (op == "star") {
        if (g.json()) {
            json rows = json::array();
            for (Element x = 0; x < L.size(); ++x)
                rows.push_back({{"x", L.label(x)}, {"star", L.label(star(x))}, {"doublestar", L.label(star(star(x)))}});
            std::cout << rows.dump(2) << "\n";
        } else {
            std::cout << format_star_table(L, star);
        }
        return kExitOk;
    }
    const auto table = implication_table(L, star, op == "arrow" ? ImplKind::Arrow : ImplKind::DoubleArrow);
    if (g.json()) {
        json rows = json::object();
        for (Element x = 0; x < L.size(); ++x) {
            json row = json::object();
            for (Element y = 0; y < L.size(); ++y) row[L.label(y)] = L.label(table(x, y));
            rows[L.label(x)] = row;
        }
        std::cout << json{{"op", op}, {"table", rows}}.dump(2) << "\n";
    } else {
        std::cout << format_impl_table(L, table);
    }
    return kExitOk;
}

int cmd_laws(const Globals& g, const std::string& file, const std::vector<std::string>& ids, bool all) {
    const auto L = load_lattice(file);
    const auto cls = classify(L);
    std::optional<UnaryTable> star;
    if (cls.pseudocomplemented) star = pseudocomplement_table(L);
    const LawContext ctx(L, star);

    std::vector<const Law*> laws;
    if (ids.empty())
        for (const auto& law : law_registry()) laws.push_back(&law);
    else
        for (const auto& id : ids) laws.push_back(&find_law(id));

    int status = kExitOk;
    json out = json::array();
    for (const Law* law : laws) {
        const bool evaluable = law_is_evaluable(*law, cls);
        const bool in_class = cls.satisfies(law->hypothesis);
        // Explicitly requested laws are always shown.
        if (!all && ids.empty() && !in_class) continue;
        if (!evaluable) {
            if (g.json())
                out.push_back({{"law", law->id}, {"hypothesis", to_string(law->hypothesis)}, {"hypothesis_met", false},
                               {"holds", nullptr}, {"counterexample", nullptr}});
            else
                std::cout << "skip " << law->id << " (needs a pseudocomplemented lattice)\n";
            continue;
        }
        const auto v = check_law(ctx, *law, cls);
        if (v.hypothesis_met && !v.holds) status = kExitFatal;
        if (g.json()) {
            json j{{"law", law->id}, {"hypothesis", to_string(law->hypothesis)}, {"hypothesis_met", v.hypothesis_met}};
            auto vj = verdict_json(L, v);
            j["holds"] = vj["holds"];
            j["counterexample"] = vj["counterexample"];
            out.push_back(j);
        } else {
            std::string tag = v.holds ? "pass" : (v.hypothesis_met ? "FAIL" : "info");
            std::cout << tag << " " << law->id << " [" << to_string(law->hypothesis) << "]";
            if (!v.hypothesis_met) std::cout << " (hypothesis not met)";
            if (!v.holds) std::cout << ": " << format_counterexample(L, *v.counterexample);
            std::cout << "\n";
        }
    }
    if (g.json()) std::cout << out.dump(2) << "\n";
    return status;
}

int cmd_ds(const Globals& g, const std::string& file, const std::string& kind_name, const std::string& closure) {
    const auto L = load_lattice(file);
    std::vector<ElementSet> systems;
    if (kind_name == "filter") {
        if (!closure.empty()) throw LatticeError(ErrorKind::InvalidInput, "--closure needs --kind first|second");
        systems = enumerate_filters(L);
    } else {
        const auto star = pseudocomplement_table(L);
        const auto kind = kind_name == "first" ? DsKind::First : DsKind::Second;
        if (!closure.empty())
            systems.push_back(ds_closure(L, star, parse_set(L, closure), kind));
        else
            systems = enumerate_deductive_systems(L, star, kind);
    }
    if (g.json()) {
        json arr = json::array();
        for (const auto& s : systems) arr.push_back(set_json(L, s));
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& s : systems) std::cout << format_set(L, s) << "\n";
    }
    return kExitOk;
}

int cmd_cong(const Globals& g, const std::string& file, const std::string& theta) {
    const auto L = load_lattice(file);
    const auto star = pseudocomplement_table(L);
    if (theta.empty()) {
        const auto congruences = enumerate_congruences(L, star);
        if (g.json()) {
            json arr = json::array();
            for (const auto& p : congruences) {
                json blocks = json::array();
                for (const auto& b : p.blocks()) blocks.push_back(set_json(L, b));
                arr.push_back(blocks);
            }
            std::cout << arr.dump() << "\n";
        } else {
            for (const auto& p : congruences) std::cout << format_partition(L, p) << "\n";
        }
        return kExitOk;
    }

    const auto A = parse_set(L, theta);
    const auto rel = theta_of(L, star, A);
    const auto partition = rel.to_partition();
    std::string relation_text;
    json pairs = json::array();
    for (Element x = 0; x < L.size(); ++x)
        for (Element y = 0; y < L.size(); ++y)
            if (rel.contains(x, y)) {
                pairs.push_back({L.label(x), L.label(y)});
                relation_text += (relation_text.empty() ? "" : " ") + ("(" + L.label(x) + "," + L.label(y) + ")");
            }
    std::optional<ThetaReport> report;
    std::string skipped;
    if (is_stone(L, star).holds)
        report = check_theta_theorem(L, star, A);
    else
        skipped = "lattice is not a Stone lattice; theorem report skipped";

    if (g.json()) {
        json out{{"A", set_json(L, A)}};
        if (partition) {
            json blocks = json::array();
            for (const auto& b : partition->blocks()) blocks.push_back(set_json(L, b));
            out["blocks"] = blocks;
        } else {
            out["pairs"] = pairs;
        }
        if (report) {
            out["report"] = {{"reflexive", report->reflexive},
                             {"symmetric", report->symmetric},
                             {"compatible_join", report->compatible_join},
                             {"compatible_meet", report->compatible_meet},
                             {"compatible_star", report->compatible_star},
                             {"top_class", set_json(L, report->top_class)},
                             {"top_class_matches", report->top_class_matches},
                             {"meet_closed", report->meet_closed},
                             {"transitive", report->transitive},
                             {"passed", report->passed()}};
        } else {
            out["report"] = nullptr;
            out["note"] = skipped;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "Theta(" << format_set(L, A) << "): "
                  << (partition ? format_partition(L, *partition) : relation_text) << "\n";
        if (report) {
            auto yn = [](bool b) { return b ? "yes" : "no"; };
            std::cout << "reflexive: " << yn(report->reflexive) << "\n"
                      << "symmetric: " << yn(report->symmetric) << "\n"
                      << "compatible with v: " << yn(report->compatible_join) << "\n"
                      << "compatible with ^: " << yn(report->compatible_meet) << "\n"
                      << "compatible with *: " << yn(report->compatible_star) << "\n"
                      << "class of 1: " << format_set(L, report->top_class)
                      << (report->top_class_matches ? " (= {x : x** in A})" : " (differs from {x : x** in A})") << "\n"
                      << "A meet closed: " << yn(report->meet_closed) << "\n"
                      << "transitive: " << yn(report->transitive) << "\n"
                      << "theorem: " << (report->passed() ? "holds" : "FAILS") << "\n";
        } else {
            std::cout << skipped << "\n";
        }
    }
    return report && !report->passed() ? kExitFatal : kExitOk;
}

int cmd_gen(const Globals& g, std::size_t n, bool dedup, const std::string& filter_text) {
    const auto filter = parse_class_filter(filter_text);
    bool first = true;
    json arr = json::array();
    for_each_lattice(n, dedup, [&](const FiniteLattice& L) {
        if (!filter.accepts(classify(L))) return;
        if (g.json()) {
            arr.push_back(serialize_lattice(L));
        } else {
            if (!first) std::cout << "---\n";
            std::cout << serialize_lattice(L);
        }
        first = false;
    });
    if (g.json()) std::cout << arr.dump(2) << "\n";
    return kExitOk;
}

int cmd_suite(const Globals& g, std::size_t max_n, const std::string& json_path, const std::vector<std::string>& ids,
              bool no_fixtures, bool verbose) {
    SuiteOptions opts;
    opts.max_n = max_n;
    opts.laws = ids;
    opts.include_fixtures = !no_fixtures;
    const auto report = run_suite(opts);
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw LatticeError(ErrorKind::InvalidInput, "cannot write '" + json_path + "'");
        out << suite_to_json(report);
    }
    if (g.json())
        std::cout << suite_to_json(report);
    else
        std::cout << suite_to_text(report, verbose);
    return report.summary().fatal > 0 ? kExitFatal : kExitOk;
}

int cmd_export(const std::string& file, const std::string& to) {
    const auto L = load_lattice(file);
    std::cout << (to == "text" ? serialize_lattice(L) : export_dot(L));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pclatt: pseudocomplemented lattices, their implications, deductive systems and congruences"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    const std::string file_help = "Lattice file, or fixture:<fig1a|fig1b|fig1c>";
    std::string file;

    auto* check = app.add_subcommand("check", "Classify a lattice");
    check->add_option("file", file, file_help)->required();

    std::string op = "star";
    auto* table = app.add_subcommand("table", "Print the *, -> or => operation table");
    table->add_option("--op", op, "Operation")->check(CLI::IsMember({"star", "arrow", "darrow"}));
    table->add_option("file", file, file_help)->required();

    std::vector<std::string> law_ids;
    bool all = false;
    auto* laws = app.add_subcommand("laws", "Evaluate registered laws on a lattice");
    laws->add_option("file", file, file_help)->required();
    laws->add_option("--law", law_ids, "Law id (repeatable)");
    laws->add_flag("--all", all, "Also show laws whose hypothesis the lattice does not meet");

    std::string kind = "first";
    std::string closure;
    auto* ds = app.add_subcommand("ds", "Enumerate deductive systems, or close a set");
    ds->add_option("file", file, file_help)->required();
    ds->add_option("--kind", kind, "first | second | filter")->check(CLI::IsMember({"first", "second", "filter"}));
    ds->add_option("--closure", closure, "Comma-separated seed elements");

    std::string theta;
    auto* cong = app.add_subcommand("cong", "Enumerate congruences, or build Theta(A)");
    cong->add_option("file", file, file_help)->required();
    cong->add_option("--theta", theta, "Comma-separated second-kind deductive system A");

    std::size_t n = 0;
    bool dedup = false;
    std::string filter;
    auto* gen = app.add_subcommand("gen", "Generate all bounded lattices of a given size");
    gen->add_option("--n", n, "Number of elements")->required();
    gen->add_flag("--dedup", dedup, "One lattice per isomorphism class");
    gen->add_option("--filter", filter, "Class filter, e.g. stone or stone-identity,!distributive");

    std::size_t max_n = 5;
    std::string json_path;
    bool no_fixtures = false;
    bool verbose = false;
    auto* suite = app.add_subcommand("suite", "Run every law over fixtures and generated lattices");
    suite->add_option("--max-n", max_n, "Largest generated lattice size");
    suite->add_option("--json", json_path, "Write the JSON report to this path");
    suite->add_option("--law", law_ids, "Restrict to these law ids (repeatable)");
    suite->add_flag("--no-fixtures", no_fixtures, "Skip the embedded fixtures");
    suite->add_flag("--verbose", verbose, "List passing entries too");

    std::string to = "dot";
    auto* exp = app.add_subcommand("export", "Export a lattice as DOT or normalized text");
    exp->add_option("file", file, file_help)->required();
    exp->add_option("--to", to, "dot | text")->check(CLI::IsMember({"dot", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (check->parsed()) return cmd_check(g, file);
        if (table->parsed()) return cmd_table(g, file, op);
        if (laws->parsed()) return cmd_laws(g, file, law_ids, all);
        if (ds->parsed()) return cmd_ds(g, file, kind, closure);
        if (cong->parsed()) return cmd_cong(g, file, theta);
        if (gen->parsed()) return cmd_gen(g, n, dedup, filter);
        if (suite->parsed()) return cmd_suite(g, max_n, json_path, law_ids, no_fixtures, verbose);
        if (exp->parsed()) return cmd_export(file, to);
    } catch (const LatticeError& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
