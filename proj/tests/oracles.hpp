#pragma once

// Brute-force reference implementations used as test oracles. They work from
// the cover list alone and never call the library's derived tables.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <optional>
#include <set>
#include <vector>

#include "pclatt/lattice.hpp"

namespace oracle {

using pclatt::Element;

struct Order {
    std::size_t n = 0;
    std::vector<std::vector<bool>> le;

    static Order from_covers(std::size_t n, const std::vector<std::pair<Element, Element>>& covers) {
        Order o;
        o.n = n;
        o.le.assign(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) o.le[i][i] = true;
        for (auto [a, b] : covers) o.le[a][b] = true;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (o.le[i][k] && o.le[k][j]) o.le[i][j] = true;
        return o;
    }
    static Order of(const pclatt::FiniteLattice& L) { return from_covers(L.size(), L.covers()); }

    Element bottom() const {
        for (Element x = 0; x < n; ++x)
            if (std::all_of(le[x].begin(), le[x].end(), [](bool b) { return b; })) return x;
        throw std::logic_error("no bottom");
    }
    Element top() const {
        for (Element x = 0; x < n; ++x) {
            bool ok = true;
            for (Element y = 0; y < n; ++y) ok = ok && le[y][x];
            if (ok) return x;
        }
        throw std::logic_error("no top");
    }
    std::optional<Element> glb(Element a, Element b) const {
        std::optional<Element> best;
        for (Element z = 0; z < n; ++z) {
            if (!le[z][a] || !le[z][b]) continue;
            bool greatest = true;
            for (Element w = 0; w < n; ++w)
                if (le[w][a] && le[w][b] && !le[w][z]) greatest = false;
            if (greatest) best = z;
        }
        return best;
    }
    std::optional<Element> lub(Element a, Element b) const {
        std::optional<Element> best;
        for (Element z = 0; z < n; ++z) {
            if (!le[a][z] || !le[b][z]) continue;
            bool least = true;
            for (Element w = 0; w < n; ++w)
                if (le[a][w] && le[b][w] && !le[z][w]) least = false;
            if (least) best = z;
        }
        return best;
    }
    Element meet(Element a, Element b) const { return *glb(a, b); }
    Element join(Element a, Element b) const { return *lub(a, b); }

    /// The greatest x with a ∧ x = 0, if the set of such x has a greatest member.
    std::optional<Element> pseudocomplement(Element a) const {
        for (Element x = 0; x < n; ++x) {
            if (meet(a, x) != bottom()) continue;
            bool greatest = true;
            for (Element y = 0; y < n; ++y)
                if (meet(a, y) == bottom() && !le[y][x]) greatest = false;
            if (greatest) return x;
        }
        return std::nullopt;
    }
    bool pseudocomplemented() const {
        for (Element a = 0; a < n; ++a)
            if (!pseudocomplement(a)) return false;
        return true;
    }
    Element star(Element a) const { return *pseudocomplement(a); }
    Element arrow(Element x, Element y) const { return join(star(x), y); }
    Element darrow(Element x, Element y) const { return join(star(x), star(star(y))); }

    bool distributive() const {
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
                for (Element z = 0; z < n; ++z)
                    if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
        return true;
    }
    bool stone_identity() const {
        for (Element x = 0; x < n; ++x)
            if (join(star(x), star(star(x))) != top()) return false;
        return true;
    }

    /// Subset given as a bitmask over element indices.
    bool is_ds(std::uint64_t A, bool second) const {
        auto in = [&](Element e) { return ((A >> e) & 1u) != 0; };
        if (!in(top())) return false;
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y) {
                Element imp = second ? darrow(x, y) : arrow(x, y);
                if (in(x) && in(imp) && !in(y)) return false;
            }
        return true;
    }
    std::vector<std::uint64_t> all_ds(bool second) const {
        std::vector<std::uint64_t> out;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
            if (is_ds(m, second)) out.push_back(m);
        return out;
    }
    bool is_filter(std::uint64_t A) const {
        if (A == 0) return false;
        auto in = [&](Element e) { return ((A >> e) & 1u) != 0; };
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y) {
                if (in(x) && le[x][y] && !in(y)) return false;
                if (in(x) && in(y) && !in(meet(x, y))) return false;
            }
        return true;
    }

    /// Congruences of (L, ∨, ∧, *) as block-label vectors normalized to first
    /// occurrence order, found by scanning every map n -> n.
    std::set<std::vector<int>> congruences() const {
        std::set<std::vector<int>> out;
        std::vector<Element> f(n, 0);
        while (true) {
            std::vector<int> lab(n, -1);
            std::vector<int> seen(n, -1);
            int next = 0;
            for (Element i = 0; i < n; ++i) {
                if (seen[f[i]] < 0) seen[f[i]] = next++;
                lab[i] = seen[f[i]];
            }
            if (!out.count(lab)) {
                bool ok = true;
                for (Element a = 0; a < n && ok; ++a)
                    for (Element b = 0; b < n && ok; ++b) {
                        if (lab[a] != lab[b]) continue;
                        if (lab[star(a)] != lab[star(b)]) ok = false;
                        for (Element c = 0; c < n && ok; ++c)
                            if (lab[join(a, c)] != lab[join(b, c)] || lab[meet(a, c)] != lab[meet(b, c)]) ok = false;
                    }
                if (ok) out.insert(lab);
            }
            std::size_t i = 0;
            while (i < n && ++f[i] == n) f[i++] = 0;
            if (i == n) break;
        }
        return out;
    }
};

inline std::uint64_t mask_of(const pclatt::ElementSet& s) {
    std::uint64_t m = 0;
    for (Element e : s.members()) m |= std::uint64_t{1} << e;
    return m;
}

/// Calls visit(r) for every partial order r on the n-2 interior elements whose
/// extension by a new bottom and top is a lattice. Every relation is tried.
template <class Visit>
void for_each_interior_order(std::size_t n, Visit visit) {
    const std::size_t m = n - 2;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) slots.emplace_back(i, j);

    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
        std::vector<std::vector<bool>> r(m, std::vector<bool>(m, false));
        for (std::size_t i = 0; i < m; ++i) r[i][i] = true;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if ((bits >> s) & 1u) r[slots[s].first][slots[s].second] = true;
        bool order = true;
        for (std::size_t i = 0; i < m && order; ++i)
            for (std::size_t j = 0; j < m && order; ++j) {
                if (i != j && r[i][j] && r[j][i]) order = false;
                for (std::size_t k = 0; k < m && order; ++k)
                    if (r[i][j] && r[j][k] && !r[i][k]) order = false;
            }
        if (!order) continue;

        Order o;
        o.n = n;
        o.le.assign(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) {
            o.le[0][i] = true;
            o.le[i][n - 1] = true;
        }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) o.le[i + 1][j + 1] = r[i][j];
        bool lattice = true;
        for (Element a = 0; a < n && lattice; ++a)
            for (Element b = 0; b < n && lattice; ++b)
                if (!o.glb(a, b) || !o.lub(a, b)) lattice = false;
        if (lattice) visit(r);
    }
}

/// Number of pairwise non-isomorphic lattices on n elements.
inline std::size_t count_unlabeled_lattices(std::size_t n) {
    if (n <= 2) return 1;
    const std::size_t m = n - 2;
    std::set<std::vector<bool>> seen;
    std::vector<std::size_t> perm(m);
    for_each_interior_order(n, [&](const std::vector<std::vector<bool>>& r) {
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<bool> best;
        do {
            std::vector<bool> code;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) code.push_back(r[perm[i]][perm[j]]);
            if (best.empty() || code < best) best = code;
        } while (std::next_permutation(perm.begin(), perm.end()));
        seen.insert(best);
    });
    return seen.size();
}

/// Number of lattices on {0..n-1} whose order refines the natural order of
/// the indices, with 0 least and n-1 greatest.
inline std::size_t count_naturally_labeled_lattices(std::size_t n) {
    if (n <= 2) return 1;
    std::size_t count = 0;
    for_each_interior_order(n, [&](const std::vector<std::vector<bool>>& r) {
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (r[i][j]) return;
        ++count;
    });
    return count;
}

}  // namespace oracle
