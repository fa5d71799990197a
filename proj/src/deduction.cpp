#include "pclatt/deduction.hpp"

#include <algorithm>

namespace pclatt {

namespace {

std::string detachment_clause(DsKind kind) {
    return kind == DsKind::First ? "x in A and x->y in A implies y in A" : "x in A and x=>y in A implies y in A";
}

// Bitmask fast path used by enumeration; n <= kMaxSubsetEnumerationSize.
bool is_ds_mask(const ImplTable& impl, std::size_t n, Element top, std::uint64_t mask) {
    if (!(mask >> top & 1U)) return false;
    for (Element x = 0; x < n; ++x) {
        if (!(mask >> x & 1U)) continue;
        for (Element y = 0; y < n; ++y)
            if ((mask >> impl(x, y) & 1U) && !(mask >> y & 1U)) return false;
    }
    return true;
}

}  // namespace

Verdict is_deductive_system(const FiniteLattice& L, const UnaryTable& star, const ElementSet& A, DsKind kind) {
    if (!A.contains(L.top())) return Verdict::fail({{}, "1 in A", std::nullopt, std::nullopt});
    const auto impl = implication_table(L, star, kind == DsKind::First ? ImplKind::Arrow : ImplKind::DoubleArrow);
    for (Element x : A.members())
        for (Element y = 0; y < L.size(); ++y)
            if (A.contains(impl(x, y)) && !A.contains(y))
                return Verdict::fail({{{"x", x}, {"y", y}}, detachment_clause(kind), impl(x, y), y});
    return Verdict::pass();
}

std::vector<ElementSet> enumerate_deductive_systems(const FiniteLattice& L, const UnaryTable& star, DsKind kind) {
    const auto n = L.size();
    if (n > kMaxSubsetEnumerationSize)
        throw LatticeError(ErrorKind::SizeLimit, "deductive system enumeration is limited to " +
                                                     std::to_string(kMaxSubsetEnumerationSize) + " elements");
    const auto impl = implication_table(L, star, kind == DsKind::First ? ImplKind::Arrow : ImplKind::DoubleArrow);
    const std::uint64_t top_bit = std::uint64_t{1} << L.top();
    std::vector<ElementSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (!(mask & top_bit)) continue;
        if (is_ds_mask(impl, n, L.top(), mask)) out.push_back(ElementSet::from_mask(n, mask));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

ElementSet ds_closure(const FiniteLattice& L, const UnaryTable& star, const ElementSet& seed, DsKind kind) {
    const auto impl = implication_table(L, star, kind == DsKind::First ? ImplKind::Arrow : ImplKind::DoubleArrow);
    ElementSet out(L.size());
    for (Element e : seed.members()) out.insert(e);
    out.insert(L.top());
    for (bool changed = true; changed;) {
        changed = false;
        for (Element x : out.members())
            for (Element y = 0; y < L.size(); ++y)
                if (!out.contains(y) && out.contains(impl(x, y))) {
                    out.insert(y);
                    changed = true;
                }
    }
    return out;
}

ElementSet ds_join(const FiniteLattice& L, const UnaryTable& star, const ElementSet& a, const ElementSet& b,
                   DsKind kind) {
    return ds_closure(L, star, a.unite(b), kind);
}

Verdict is_filter(const FiniteLattice& L, const ElementSet& A) {
    if (A.empty()) return Verdict::fail({{}, "A nonempty", std::nullopt, std::nullopt});
    const auto members = A.members();
    for (Element x : members)
        for (Element y = 0; y < L.size(); ++y)
            if (L.leq(x, y) && !A.contains(y))
                return Verdict::fail({{{"x", x}, {"y", y}}, "x in A and x<=y implies y in A", x, y});
    for (Element x : members)
        for (Element y : members)
            if (!A.contains(L.meet(x, y)))
                return Verdict::fail({{{"x", x}, {"y", y}}, "x, y in A implies x^y in A", L.meet(x, y), std::nullopt});
    return Verdict::pass();
}

ElementSet principal_filter(const FiniteLattice& L, Element a) {
    ElementSet up(L.size());
    for (Element y = 0; y < L.size(); ++y)
        if (L.leq(a, y)) up.insert(y);
    return up;
}

std::vector<ElementSet> enumerate_filters(const FiniteLattice& L) {
    std::vector<ElementSet> out;
    for (Element a = 0; a < L.size(); ++a) out.push_back(principal_filter(L, a));
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace pclatt
