#include "pclatt/suite.hpp"

#include <algorithm>

#include "json.hpp"
#include "pclatt/classify.hpp"
#include "pclatt/genlat.hpp"
#include "pclatt/io.hpp"
#include "pclatt/laws.hpp"

namespace pclatt {

using ordered_json = nlohmann::ordered_json;

SuiteSummary SuiteReport::summary() const {
    SuiteSummary s;
    std::vector<std::string_view> names;
    for (const auto& e : entries) {
        names.push_back(e.lattice);
        ++s.entries;
        if (e.hypothesis_met) ++s.exercised;
        if (e.fatal()) ++s.fatal;
        if (!e.hypothesis_met && !e.holds) ++s.informational;
    }
    std::sort(names.begin(), names.end());
    s.lattices = static_cast<std::size_t>(std::unique(names.begin(), names.end()) - names.begin());
    return s;
}

std::vector<const SuiteEntry*> SuiteReport::fatal_entries() const {
    std::vector<const SuiteEntry*> out;
    for (const auto& e : entries)
        if (e.fatal()) out.push_back(&e);
    return out;
}

const SuiteEntry* SuiteReport::find(std::string_view lattice, std::string_view law) const {
    for (const auto& e : entries)
        if (e.lattice == lattice && e.law == law) return &e;
    return nullptr;
}

WitnessRecord to_witness(const FiniteLattice& L, const Counterexample& cx) {
    WitnessRecord w;
    for (const auto& [var, e] : cx.assignment) w.assignment.emplace_back(var, L.label(e));
    w.clause = cx.clause;
    if (cx.lhs) w.lhs = L.label(*cx.lhs);
    if (cx.rhs) w.rhs = L.label(*cx.rhs);
    return w;
}

namespace {

void evaluate_lattice(const std::string& name, const FiniteLattice& L, const std::vector<const Law*>& laws,
                      std::vector<SuiteEntry>& out) {
    const auto cls = classify(L);
    std::optional<UnaryTable> star;
    if (cls.pseudocomplemented) star = pseudocomplement_table(L);
    const LawContext ctx(L, star);
    for (const Law* law : laws) {
        if (!law_is_evaluable(*law, cls)) continue;
        auto v = check_law(ctx, *law, cls);
        SuiteEntry e{name, law->id, v.hypothesis_met, v.holds, std::nullopt};
        if (v.counterexample) e.counterexample = to_witness(L, *v.counterexample);
        out.push_back(std::move(e));
    }
}

}  // namespace

SuiteReport run_suite(const SuiteOptions& options) {
    std::vector<const Law*> laws;
    if (options.laws.empty()) {
        for (const auto& law : law_registry()) laws.push_back(&law);
    } else {
        for (const auto& id : options.laws) laws.push_back(&find_law(id));
    }

    SuiteReport report;
    if (options.include_fixtures)
        for (const auto& f : fixtures()) evaluate_lattice(std::string(f.name), parse_lattice(f.text), laws, report.entries);
    if (options.include_generated) {
        if (options.max_n > kMaxGeneratedSize)
            throw LatticeError(ErrorKind::SizeLimit,
                               "suite sizes are limited to " + std::to_string(kMaxGeneratedSize) + " elements");
        for (std::size_t n = std::max<std::size_t>(options.min_n, 1); n <= options.max_n; ++n) {
            std::size_t index = 0;
            for_each_lattice(n, true, [&](const FiniteLattice& L) {
                evaluate_lattice("n" + std::to_string(n) + "-" + std::to_string(index++), L, laws, report.entries);
            });
        }
    }
    return report;
}

std::string suite_to_json(const SuiteReport& report, int indent) {
    ordered_json doc = ordered_json::array();
    for (const auto& e : report.entries) {
        ordered_json j;
        j["lattice"] = e.lattice;
        j["law"] = e.law;
        j["hypothesis_met"] = e.hypothesis_met;
        j["holds"] = e.holds;
        if (e.counterexample) {
            const auto& w = *e.counterexample;
            ordered_json cx;
            ordered_json assignment = ordered_json::object();
            for (const auto& [var, label] : w.assignment) assignment[var] = label;
            cx["assignment"] = assignment;
            cx["clause"] = w.clause;
            cx["lhs"] = w.lhs ? ordered_json(*w.lhs) : ordered_json(nullptr);
            cx["rhs"] = w.rhs ? ordered_json(*w.rhs) : ordered_json(nullptr);
            j["counterexample"] = cx;
        } else {
            j["counterexample"] = nullptr;
        }
        doc.push_back(std::move(j));
    }
    return doc.dump(indent) + "\n";
}

SuiteReport suite_from_json(std::string_view text) {
    SuiteReport report;
    try {
        auto doc = ordered_json::parse(text);
        if (!doc.is_array()) throw LatticeError(ErrorKind::InvalidInput, "suite report must be a JSON array");
        for (const auto& j : doc) {
            SuiteEntry e;
            e.lattice = j.at("lattice").get<std::string>();
            e.law = j.at("law").get<std::string>();
            e.hypothesis_met = j.at("hypothesis_met").get<bool>();
            e.holds = j.at("holds").get<bool>();
            if (const auto& cx = j.at("counterexample"); !cx.is_null()) {
                WitnessRecord w;
                for (const auto& [var, label] : cx.at("assignment").items())
                    w.assignment.emplace_back(var, label.get<std::string>());
                w.clause = cx.at("clause").get<std::string>();
                if (!cx.at("lhs").is_null()) w.lhs = cx.at("lhs").get<std::string>();
                if (!cx.at("rhs").is_null()) w.rhs = cx.at("rhs").get<std::string>();
                e.counterexample = std::move(w);
            }
            report.entries.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw LatticeError(ErrorKind::InvalidInput, std::string("malformed suite report: ") + ex.what());
    }
    return report;
}

std::string suite_to_text(const SuiteReport& report, bool include_passing) {
    std::string out;
    for (const auto& e : report.entries) {
        if (e.holds && !include_passing) continue;
        std::string status = e.holds ? "pass" : (e.hypothesis_met ? "FATAL" : "info");
        out += status + " " + e.lattice + " " + e.law;
        if (!e.hypothesis_met) out += " (hypothesis not met)";
        if (e.counterexample) {
            const auto& w = *e.counterexample;
            out += " :";
            for (const auto& [var, label] : w.assignment) out += " " + var + "=" + label;
            out += " " + w.clause;
            if (w.lhs || w.rhs) out += " [" + w.lhs.value_or("-") + " vs " + w.rhs.value_or("-") + "]";
        }
        out += "\n";
    }
    const auto s = report.summary();
    out += "lattices: " + std::to_string(s.lattices) + ", entries: " + std::to_string(s.entries) +
           ", exercised: " + std::to_string(s.exercised) + ", fatal: " + std::to_string(s.fatal) +
           ", informational: " + std::to_string(s.informational) + "\n";
    return out;
}

}  // namespace pclatt
