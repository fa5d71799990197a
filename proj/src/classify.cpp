#include "pclatt/classify.hpp"

namespace pclatt {

Verdict is_distributive(const FiniteLattice& L) {
    const auto n = L.size();
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            for (Element z = 0; z < n; ++z) {
                Element lhs = L.meet(x, L.join(y, z));
                Element rhs = L.join(L.meet(x, y), L.meet(x, z));
                if (lhs != rhs)
                    return Verdict::fail({{{"x", x}, {"y", y}, {"z", z}}, "x^(y v z) = (x^y) v (x^z)", lhs, rhs});
            }
    return Verdict::pass();
}

Verdict satisfies_stone_identity(const FiniteLattice& L, const UnaryTable& star) {
    for (Element x = 0; x < L.size(); ++x) {
        Element lhs = L.join(star(x), star(star(x)));
        if (lhs != L.top()) return Verdict::fail({{{"x", x}}, "x* v x** = 1", lhs, L.top()});
    }
    return Verdict::pass();
}

Verdict is_stone(const FiniteLattice& L, const UnaryTable& star) {
    if (auto d = is_distributive(L); !d.holds) return d;
    return satisfies_stone_identity(L, star);
}

Verdict is_brouwerian(const FiniteLattice& L) {
    if (auto failure = find_pseudocomplement_failure(L)) {
        std::string clause = "pseudocomplement of x exists; maximal annihilators {";
        for (std::size_t i = 0; i < failure->maximal.size(); ++i)
            clause += (i ? "," : "") + L.label(failure->maximal[i]);
        return Verdict::fail({{{"x", failure->element}}, clause + "}", std::nullopt, std::nullopt});
    }
    return is_distributive(L);
}

std::string_view to_string(LatticeClass c) {
    switch (c) {
    case LatticeClass::Any: return "any";
    case LatticeClass::Pseudocomplemented: return "pseudocomplemented";
    case LatticeClass::Distributive: return "distributive";
    case LatticeClass::StoneIdentity: return "stone-identity";
    case LatticeClass::Stone: return "stone";
    case LatticeClass::Brouwerian: return "brouwerian";
    }
    return "any";
}

std::optional<LatticeClass> parse_lattice_class(std::string_view name) {
    for (auto c : {LatticeClass::Any, LatticeClass::Pseudocomplemented, LatticeClass::Distributive,
                   LatticeClass::StoneIdentity, LatticeClass::Stone, LatticeClass::Brouwerian})
        if (to_string(c) == name) return c;
    if (name == "all") return LatticeClass::Any;
    return std::nullopt;
}

bool Classification::satisfies(LatticeClass c) const {
    switch (c) {
    case LatticeClass::Any: return true;
    case LatticeClass::Pseudocomplemented: return pseudocomplemented;
    // Finite distributive lattices are always pseudocomplemented.
    case LatticeClass::Distributive: return distributive;
    case LatticeClass::StoneIdentity: return stone_identity;
    case LatticeClass::Stone: return stone;
    case LatticeClass::Brouwerian: return brouwerian;
    }
    return false;
}

Classification classify(const FiniteLattice& L) {
    Classification c;
    c.distributive = is_distributive(L).holds;
    c.pseudocomplemented = !find_pseudocomplement_failure(L).has_value();
    if (c.pseudocomplemented) {
        auto star = pseudocomplement_table(L);
        c.stone_identity = satisfies_stone_identity(L, star).holds;
    }
    c.stone = c.distributive && c.pseudocomplemented && c.stone_identity;
    c.brouwerian = c.distributive && c.pseudocomplemented;
    return c;
}

}  // namespace pclatt
