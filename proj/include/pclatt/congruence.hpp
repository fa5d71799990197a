#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pclatt/lattice.hpp"
#include "pclatt/pseudo.hpp"

namespace pclatt {

/// Equivalence given as blocks. Blocks are ordered by their least member.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<ElementSet> blocks);

    const std::vector<ElementSet>& blocks() const { return blocks_; }
    std::size_t universe() const;
    /// Index of the block containing e.
    std::size_t block_of(Element e) const;

    static Partition discrete(std::size_t n);  // Δ
    static Partition total(std::size_t n);     // ∇

    bool operator==(const Partition&) const = default;

private:
    std::vector<ElementSet> blocks_;
};

/// Binary relation on the elements of a lattice. Properties are checked, not
/// assumed.
class BinRel {
public:
    explicit BinRel(std::size_t n) : n_(n), bits_(n * n, false) {}

    static BinRel from_partition(const Partition& p);

    std::size_t size() const { return n_; }
    bool contains(Element x, Element y) const { return bits_[x * n_ + y]; }
    void insert(Element x, Element y) { bits_[x * n_ + y] = true; }

    bool is_reflexive() const;
    bool is_symmetric() const;
    bool is_transitive() const;
    /// Blocks when the relation is an equivalence.
    std::optional<Partition> to_partition() const;
    BinRel intersect(const BinRel& other) const;

    bool operator==(const BinRel&) const = default;

private:
    std::size_t n_;
    std::vector<bool> bits_;
};

/// (x, y) ∈ Θ(A) iff x ⇒ y ∈ A and y ⇒ x ∈ A.
/// Throws NotADeductiveSystem unless A is a deductive system of the second kind.
BinRel theta_of(const FiniteLattice& L, const UnaryTable& star, const ElementSet& A);

/// Outcome of checking Θ(A) against the theorem for Stone lattices. Each
/// failed check contributes a counterexample to `failures`.
struct ThetaReport {
    BinRel relation{0};
    bool reflexive = false;
    bool symmetric = false;
    bool compatible_join = false;
    bool compatible_meet = false;
    bool compatible_star = false;
    bool top_class_matches = false;  // [1]Θ(A) = {x : x** ∈ A}
    bool meet_closed = false;
    bool transitive = false;
    ElementSet top_class;
    std::vector<Counterexample> failures;

    /// All of the theorem's assertions hold (transitivity only required when
    /// A is meet closed).
    bool passed() const;
};

/// Throws HypothesisViolated when L is not a Stone lattice or A is not a
/// deductive system of the second kind.
ThetaReport check_theta_theorem(const FiniteLattice& L, const UnaryTable& star, const ElementSet& A);

/// The same assertions without the Stone precondition, for sweeps that probe
/// whether the hypothesis is needed. A must still be a second-kind system.
ThetaReport evaluate_theta_conditions(const FiniteLattice& L, const UnaryTable& star, const ElementSet& A);

/// Set partitions are enumerated exhaustively (Bell numbers), so sizes above
/// this are refused.
inline constexpr std::size_t kMaxCongruenceEnumerationSize = 8;

/// Equivalences compatible with ∨, ∧ and *. Ordered by descending block count,
/// then by restricted growth string; Δ comes first and ∇ last.
std::vector<Partition> enumerate_congruences(const FiniteLattice& L, const UnaryTable& star);

bool is_congruence(const FiniteLattice& L, const UnaryTable& star, const Partition& p);

ElementSet class_of_top(const FiniteLattice& L, const Partition& p);
ElementSet class_of_top(const FiniteLattice& L, const BinRel& r);

}  // namespace pclatt
