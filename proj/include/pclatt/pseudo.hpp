#pragma once

#include <optional>
#include <vector>

#include "pclatt/lattice.hpp"

namespace pclatt {

enum class UnaryKind { Star, DoubleStar };

/// Total unary operation on a lattice (pseudocomplement or its square).
class UnaryTable {
public:
    UnaryTable(UnaryKind kind, std::vector<Element> map) : kind_(kind), map_(std::move(map)) {}

    UnaryKind kind() const { return kind_; }
    std::size_t size() const { return map_.size(); }
    Element operator()(Element x) const { return map_[x]; }
    const std::vector<Element>& map() const { return map_; }

    bool operator==(const UnaryTable&) const = default;

private:
    UnaryKind kind_;
    std::vector<Element> map_;
};

/// Witness that some element has no pseudocomplement: the set
/// {x : a ∧ x = 0} has several maximal elements.
struct PseudocomplementFailure {
    Element element;
    std::vector<Element> maximal;
};

/// First element (in index order) lacking a pseudocomplement, if any.
std::optional<PseudocomplementFailure> find_pseudocomplement_failure(const FiniteLattice& L);

/// Throws LatticeError(NotPseudocomplemented) naming the offending element
/// and all maximal elements of its annihilator.
UnaryTable pseudocomplement_table(const FiniteLattice& L);

UnaryTable double_star(const UnaryTable& star);

/// D(L) = {a : a* = 0}.
ElementSet dense_elements(const FiniteLattice& L, const UnaryTable& star);

}  // namespace pclatt
