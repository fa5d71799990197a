#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pclatt/classify.hpp"
#include "pclatt/lattice.hpp"

namespace pclatt {

inline constexpr std::size_t kMaxGeneratedSize = 8;

/// Every bounded lattice on n elements. Without dedup this is every
/// naturally labeled lattice (index order is a linear extension, 0 first and
/// 1 last); with dedup, one representative per isomorphism class, the first
/// one met in generation order.
struct LatticeFamily {
    std::size_t n = 0;
    bool dedup = false;
    std::vector<FiniteLattice> lattices;
};

/// Streams the family to `visit` without materializing it. Deterministic.
/// Throws SizeLimit for n = 0 or n > kMaxGeneratedSize.
void for_each_lattice(std::size_t n, bool dedup, const std::function<void(const FiniteLattice&)>& visit);

LatticeFamily generate_all(std::size_t n, bool dedup);

/// Isomorphism invariant: the least order-matrix encoding over all
/// relabelings that respect a degree refinement of the elements.
std::vector<std::uint8_t> canonical_form(const FiniteLattice& L);

bool is_isomorphic(const FiniteLattice& a, const FiniteLattice& b);

/// A conjunction of class requirements, each optionally negated.
struct ClassFilter {
    struct Term {
        LatticeClass cls;
        bool negated = false;
    };
    std::vector<Term> terms;

    bool accepts(const Classification& c) const;
};

/// Parses "stone", "stone-identity,!distributive", "not-distributive", ...
/// Throws InvalidInput on unknown class names.
ClassFilter parse_class_filter(std::string_view text);

LatticeFamily filter_family(const LatticeFamily& family, LatticeClass predicate);
LatticeFamily filter_family(const LatticeFamily& family, const ClassFilter& filter);

}  // namespace pclatt
