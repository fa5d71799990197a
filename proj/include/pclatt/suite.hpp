#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pclatt/lattice.hpp"

namespace pclatt {

/// Label-level copy of a Counterexample, independent of any lattice object.
struct WitnessRecord {
    std::vector<std::pair<std::string, std::string>> assignment;
    std::string clause;
    std::optional<std::string> lhs;
    std::optional<std::string> rhs;

    bool operator==(const WitnessRecord&) const = default;
};

struct SuiteEntry {
    std::string lattice;
    std::string law;
    bool hypothesis_met = false;
    bool holds = true;
    std::optional<WitnessRecord> counterexample;

    /// A law failing inside its hypothesis class.
    bool fatal() const { return hypothesis_met && !holds; }
    bool operator==(const SuiteEntry&) const = default;
};

struct SuiteSummary {
    std::size_t lattices = 0;
    std::size_t entries = 0;
    std::size_t exercised = 0;      // hypothesis met
    std::size_t fatal = 0;          // hypothesis met, failed
    std::size_t informational = 0;  // hypothesis unmet, failed
};

struct SuiteReport {
    std::vector<SuiteEntry> entries;

    SuiteSummary summary() const;
    std::vector<const SuiteEntry*> fatal_entries() const;
    const SuiteEntry* find(std::string_view lattice, std::string_view law) const;
    bool operator==(const SuiteReport&) const = default;
};

struct SuiteOptions {
    std::size_t min_n = 2;
    std::size_t max_n = 5;
    bool include_fixtures = true;
    bool include_generated = true;
    /// Empty selects every registered law.
    std::vector<std::string> laws;
};

/// Every selected law on every fixture and every (deduplicated) generated
/// lattice of size min_n..max_n. A law is evaluated whenever it can be (laws
/// mentioning * are skipped on lattices that are not pseudocomplemented);
/// entries outside the hypothesis class are informational.
///
/// Lattices are named "fig1a".."fig1c" and "n<k>-<i>" for the i-th member of
/// the size-k family.
SuiteReport run_suite(const SuiteOptions& options);

WitnessRecord to_witness(const FiniteLattice& L, const Counterexample& cx);

/// JSON array of {lattice, law, hypothesis_met, holds, counterexample}.
std::string suite_to_json(const SuiteReport& report, int indent = 2);
/// Throws InvalidInput on malformed documents.
SuiteReport suite_from_json(std::string_view text);

std::string suite_to_text(const SuiteReport& report, bool include_passing);

}  // namespace pclatt
