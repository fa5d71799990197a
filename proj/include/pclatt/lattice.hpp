#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pclatt {

/// Index of an element inside a FiniteLattice. Indices follow a topological
/// order of the cover graph, so `leq(x, y)` implies `x <= y` numerically.
using Element = std::size_t;

enum class ErrorKind {
    Syntax,
    InvalidInput,
    NotAPoset,
    NotALattice,
    NotBounded,
    NotPseudocomplemented,
    NotDistributive,
    NotADeductiveSystem,
    HypothesisViolated,
    UnknownLaw,
    SizeLimit,
};

std::string_view to_string(ErrorKind kind);

class LatticeError : public std::runtime_error {
public:
    LatticeError(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Subset of the universe of one particular lattice.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : bits_(universe, false) {}
    ElementSet(std::size_t universe, std::span<const Element> members);

    static ElementSet full(std::size_t universe);
    static ElementSet from_mask(std::size_t universe, std::uint64_t mask);

    std::size_t universe() const { return bits_.size(); }
    bool contains(Element e) const { return e < bits_.size() && bits_[e]; }
    void insert(Element e);
    void erase(Element e);
    std::size_t size() const;
    bool empty() const { return size() == 0; }

    /// Members in increasing index order.
    std::vector<Element> members() const;
    bool is_subset_of(const ElementSet& other) const;

    ElementSet intersect(const ElementSet& other) const;
    ElementSet unite(const ElementSet& other) const;

    bool operator==(const ElementSet& other) const = default;

private:
    std::vector<bool> bits_;
};

/// Canonical ordering: by size, then lexicographically on the sorted members.
bool canonical_less(const ElementSet& a, const ElementSet& b);

/// A failed instance of a checked property. `lhs` and `rhs` are the two
/// evaluated sides of the clause that broke (absent for pure membership
/// clauses such as "1 in A").
struct Counterexample {
    std::vector<std::pair<std::string, Element>> assignment;
    std::string clause;
    std::optional<Element> lhs;
    std::optional<Element> rhs;

    bool operator==(const Counterexample&) const = default;
};

struct Verdict {
    bool holds = true;
    std::optional<Counterexample> counterexample;
    /// False when the lattice lies outside the hypothesis class of the
    /// checked statement; the evaluation result is then informational.
    bool hypothesis_met = true;

    static Verdict pass() { return {}; }
    static Verdict fail(Counterexample cx) { return {false, std::move(cx), true}; }
};

/// A finite bounded lattice with precomputed order, meet and join tables.
/// Immutable after construction.
class FiniteLattice {
public:
    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Element e) const { return labels_.at(e); }
    std::optional<Element> find(std::string_view label) const;
    /// Like find(), but throws InvalidInput for unknown labels.
    Element index_of(std::string_view label) const;

    bool leq(Element x, Element y) const { return leq_[x * size() + y] != 0; }
    Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
    Element join(Element x, Element y) const { return join_[x * size() + y]; }
    Element bottom() const { return bottom_; }
    Element top() const { return top_; }

    /// Hasse edges (lower, upper), sorted.
    const std::vector<std::pair<Element, Element>>& covers() const { return covers_; }

    bool operator==(const FiniteLattice&) const = default;

private:
    friend FiniteLattice build_lattice(std::span<const std::string> labels,
                                       std::span<const std::pair<std::string, std::string>> covers);

    FiniteLattice() = default;

    std::vector<std::string> labels_;
    std::vector<std::uint8_t> leq_;
    std::vector<Element> meet_;
    std::vector<Element> join_;
    std::vector<std::pair<Element, Element>> covers_;
    Element bottom_ = 0;
    Element top_ = 0;
};

/// Builds a lattice from its Hasse diagram. Redundant (transitive) cover pairs
/// are accepted and dropped from the stored cover list.
///
/// Throws LatticeError with kind NotAPoset, NotBounded, NotALattice or
/// InvalidInput.
FiniteLattice build_lattice(std::span<const std::string> labels,
                            std::span<const std::pair<std::string, std::string>> covers);

}  // namespace pclatt
