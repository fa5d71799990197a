#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pclatt/classify.hpp"
#include "pclatt/implication.hpp"
#include "pclatt/lattice.hpp"
#include "pclatt/pseudo.hpp"

namespace pclatt {

/// Everything a law evaluator may look at, computed once per lattice.
struct LawContext {
    const FiniteLattice& lattice;
    std::optional<UnaryTable> star;
    std::optional<UnaryTable> dstar;
    std::optional<ImplTable> arrow;
    std::optional<ImplTable> darrow;

    /// `star` may be absent for lattices that are not pseudocomplemented.
    LawContext(const FiniteLattice& L, std::optional<UnaryTable> star);
};

/// The clause of an elementwise law that broke, with its two evaluated sides.
struct Violation {
    std::string clause;
    Element lhs;
    Element rhs;
};

using ElementwiseCheck = std::function<std::optional<Violation>(const LawContext&, std::span<const Element>)>;
using StructuralCheck = std::function<Verdict(const LawContext&)>;

/// One registered claim. Elementwise laws quantify over all tuples of
/// `variables`; structural laws quantify over derived objects (filters,
/// deductive systems, congruences, candidate operations).
struct Law {
    std::string id;
    LatticeClass hypothesis;
    std::string statement;
    bool needs_star = true;
    std::vector<std::string> variables;
    ElementwiseCheck elementwise;
    StructuralCheck structural;

    bool is_elementwise() const { return static_cast<bool>(elementwise); }
};

const std::vector<Law>& law_registry();

/// Throws LatticeError(UnknownLaw).
const Law& find_law(std::string_view id);

/// True when the law can be evaluated at all on a lattice with this
/// classification (laws mentioning * need a pseudocomplemented lattice).
bool law_is_evaluable(const Law& law, const Classification& cls);

/// Exhaustive evaluation. `hypothesis_met` in the result records whether the
/// lattice is in the law's hypothesis class; evaluation happens regardless.
/// Throws NotPseudocomplemented if the law needs * and the context has none.
Verdict check_law(const LawContext& ctx, const Law& law, const Classification& cls);

/// Convenience form that classifies L itself. `star` must be the
/// pseudocomplement table of L.
Verdict check_law(const FiniteLattice& L, const UnaryTable& star, std::string_view law_id);

/// Re-runs an elementwise law at one assignment (in variable order).
std::optional<Violation> evaluate_law_at(const LawContext& ctx, const Law& law, std::span<const Element> assignment);

/// Checks identities (1)-(4) for a candidate implication `op`, where
/// x* is read as op(x, 0):
///   (1) x ∧ (0→0) = x          (2) x ∧ (x→0) = 0
///   (3) x ∧ ((x∧y)→0) = x ∧ (y→0)   (4) (x→0) ∨ ((x→0)→0) = 1
/// Throws NotDistributive if L is not distributive.
Verdict check_stone_characterization(const FiniteLattice& L, const BinaryTable& op);

/// Same, with op = the arrow table of L.
Verdict check_stone_characterization(const FiniteLattice& L);

}  // namespace pclatt
