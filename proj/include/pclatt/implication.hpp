#pragma once

#include <vector>

#include "pclatt/lattice.hpp"
#include "pclatt/pseudo.hpp"

namespace pclatt {

/// Row-major n×n table of a binary operation; rows are the left operand.
class BinaryTable {
public:
    BinaryTable() = default;
    BinaryTable(std::size_t n, std::vector<Element> cells);

    std::size_t size() const { return n_; }
    Element operator()(Element x, Element y) const { return cells_[x * n_ + y]; }
    const std::vector<Element>& cells() const { return cells_; }

    bool operator==(const BinaryTable&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Element> cells_;
};

enum class ImplKind { Arrow, DoubleArrow };

/// x → y := x* ∨ y  and  x ⇒ y := x* ∨ y**.
struct ImplTable {
    ImplKind kind;
    BinaryTable table;

    Element operator()(Element x, Element y) const { return table(x, y); }
    bool operator==(const ImplTable&) const = default;
};

ImplTable arrow_table(const FiniteLattice& L, const UnaryTable& star);
ImplTable darrow_table(const FiniteLattice& L, const UnaryTable& star);

/// Dispatches on kind.
ImplTable implication_table(const FiniteLattice& L, const UnaryTable& star, ImplKind kind);

}  // namespace pclatt
