#pragma once

#include <vector>

#include "pclatt/implication.hpp"
#include "pclatt/lattice.hpp"
#include "pclatt/pseudo.hpp"

namespace pclatt {

/// First kind detaches along →, second kind along ⇒.
enum class DsKind { First, Second };

/// Subset enumeration walks all 2^(n-1) sets containing the top element.
inline constexpr std::size_t kMaxSubsetEnumerationSize = 20;

/// Contains 1 and closed under detachment: x ∈ A, x ⇒ y ∈ A  implies  y ∈ A.
/// Counterexample is the violating pair (x, y) with sides (x impl y, y).
Verdict is_deductive_system(const FiniteLattice& L, const UnaryTable& star, const ElementSet& A, DsKind kind);

/// All deductive systems of the given kind in canonical order.
/// Throws SizeLimit above kMaxSubsetEnumerationSize elements.
std::vector<ElementSet> enumerate_deductive_systems(const FiniteLattice& L, const UnaryTable& star, DsKind kind);

/// Least deductive system of the given kind containing `seed`.
ElementSet ds_closure(const FiniteLattice& L, const UnaryTable& star, const ElementSet& seed, DsKind kind);

/// Least deductive system containing both (closure of the union).
ElementSet ds_join(const FiniteLattice& L, const UnaryTable& star, const ElementSet& a, const ElementSet& b,
                   DsKind kind);

/// Nonempty, upward closed, meet closed.
Verdict is_filter(const FiniteLattice& L, const ElementSet& A);

/// All filters in canonical order. Every filter of a finite lattice is
/// principal, so this is ↑a for each a, sorted.
std::vector<ElementSet> enumerate_filters(const FiniteLattice& L);

ElementSet principal_filter(const FiniteLattice& L, Element a);

}  // namespace pclatt
