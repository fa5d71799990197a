#include "pclatt/pseudo.hpp"

namespace pclatt {

namespace {

std::vector<Element> maximal_annihilators(const FiniteLattice& L, Element a) {
    const auto n = L.size();
    std::vector<Element> zero_meet;
    for (Element x = 0; x < n; ++x)
        if (L.meet(a, x) == L.bottom()) zero_meet.push_back(x);
    std::vector<Element> maximal;
    for (Element x : zero_meet) {
        bool dominated = false;
        for (Element y : zero_meet)
            if (y != x && L.leq(x, y)) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(x);
    }
    return maximal;
}

}  // namespace

std::optional<PseudocomplementFailure> find_pseudocomplement_failure(const FiniteLattice& L) {
    for (Element a = 0; a < L.size(); ++a) {
        auto maximal = maximal_annihilators(L, a);
        if (maximal.size() != 1) return PseudocomplementFailure{a, std::move(maximal)};
    }
    return std::nullopt;
}

UnaryTable pseudocomplement_table(const FiniteLattice& L) {
    std::vector<Element> map(L.size());
    for (Element a = 0; a < L.size(); ++a) {
        auto maximal = maximal_annihilators(L, a);
        if (maximal.size() != 1) {
            std::string msg = "element " + L.label(a) + " has no pseudocomplement; maximal x with " + L.label(a) +
                              "^x=0: {";
            for (std::size_t i = 0; i < maximal.size(); ++i) msg += (i ? "," : "") + L.label(maximal[i]);
            throw LatticeError(ErrorKind::NotPseudocomplemented, msg + "}");
        }
        map[a] = maximal.front();
    }
    return UnaryTable(UnaryKind::Star, std::move(map));
}

UnaryTable double_star(const UnaryTable& star) {
    std::vector<Element> map(star.size());
    for (Element a = 0; a < star.size(); ++a) map[a] = star(star(a));
    return UnaryTable(UnaryKind::DoubleStar, std::move(map));
}

ElementSet dense_elements(const FiniteLattice& L, const UnaryTable& star) {
    ElementSet dense(L.size());
    for (Element a = 0; a < L.size(); ++a)
        if (star(a) == L.bottom()) dense.insert(a);
    return dense;
}

}  // namespace pclatt
