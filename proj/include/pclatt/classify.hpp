#pragma once

#include <optional>
#include <string_view>

#include "pclatt/lattice.hpp"
#include "pclatt/pseudo.hpp"

namespace pclatt {

/// Counterexample is a triple (x, y, z) with x∧(y∨z) ≠ (x∧y)∨(x∧z).
Verdict is_distributive(const FiniteLattice& L);

/// x* ∨ x** = 1 for every x.
Verdict satisfies_stone_identity(const FiniteLattice& L, const UnaryTable& star);

/// Distributive and satisfies the Stone identity.
Verdict is_stone(const FiniteLattice& L, const UnaryTable& star);

/// Pseudocomplemented and distributive. A missing pseudocomplement is reported
/// with the offending element and the maximal annihilators as the clause.
Verdict is_brouwerian(const FiniteLattice& L);

/// Hypothesis classes used to route laws and filter lattice families.
enum class LatticeClass {
    Any,
    Pseudocomplemented,
    Distributive,
    StoneIdentity,
    Stone,
    Brouwerian,
};

std::string_view to_string(LatticeClass c);
std::optional<LatticeClass> parse_lattice_class(std::string_view name);

struct Classification {
    bool pseudocomplemented = false;
    bool distributive = false;
    bool stone_identity = false;  // false whenever * does not exist
    bool stone = false;
    bool brouwerian = false;

    bool satisfies(LatticeClass c) const;
    bool operator==(const Classification&) const = default;
};

Classification classify(const FiniteLattice& L);

}  // namespace pclatt
