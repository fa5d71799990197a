#include "pclatt/implication.hpp"

namespace pclatt {

BinaryTable::BinaryTable(std::size_t n, std::vector<Element> cells) : n_(n), cells_(std::move(cells)) {
    if (cells_.size() != n_ * n_)
        throw LatticeError(ErrorKind::InvalidInput, "binary table must have n*n cells");
    for (Element v : cells_)
        if (v >= n_) throw LatticeError(ErrorKind::InvalidInput, "binary table cell out of range");
}

ImplTable arrow_table(const FiniteLattice& L, const UnaryTable& star) {
    const auto n = L.size();
    std::vector<Element> cells(n * n);
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) cells[x * n + y] = L.join(star(x), y);
    return {ImplKind::Arrow, BinaryTable(n, std::move(cells))};
}

ImplTable darrow_table(const FiniteLattice& L, const UnaryTable& star) {
    const auto n = L.size();
    std::vector<Element> cells(n * n);
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) cells[x * n + y] = L.join(star(x), star(star(y)));
    return {ImplKind::DoubleArrow, BinaryTable(n, std::move(cells))};
}

ImplTable implication_table(const FiniteLattice& L, const UnaryTable& star, ImplKind kind) {
    return kind == ImplKind::Arrow ? arrow_table(L, star) : darrow_table(L, star);
}

}  // namespace pclatt
