#include "pclatt/congruence.hpp"

#include <algorithm>

#include "pclatt/classify.hpp"
#include "pclatt/deduction.hpp"
#include "pclatt/implication.hpp"

namespace pclatt {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<ElementSet> blocks) : blocks_(std::move(blocks)) {
    std::erase_if(blocks_, [](const ElementSet& b) { return b.empty(); });
    std::sort(blocks_.begin(), blocks_.end(),
              [](const ElementSet& a, const ElementSet& b) { return a.members().front() < b.members().front(); });
    const auto n = universe();
    std::vector<int> seen(n, 0);
    for (const auto& b : blocks_)
        for (Element e : b.members()) ++seen[e];
    for (Element e = 0; e < n; ++e)
        if (seen[e] != 1)
            throw LatticeError(ErrorKind::InvalidInput, "partition blocks must be disjoint and cover the universe");
}

std::size_t Partition::universe() const { return blocks_.empty() ? 0 : blocks_.front().universe(); }

std::size_t Partition::block_of(Element e) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i].contains(e)) return i;
    throw LatticeError(ErrorKind::InvalidInput, "element not covered by partition");
}

Partition Partition::discrete(std::size_t n) {
    std::vector<ElementSet> blocks;
    for (Element e = 0; e < n; ++e) {
        blocks.emplace_back(n);
        blocks.back().insert(e);
    }
    return Partition(std::move(blocks));
}

Partition Partition::total(std::size_t n) { return Partition({ElementSet::full(n)}); }

// ---------------------------------------------------------------------------
// BinRel

BinRel BinRel::from_partition(const Partition& p) {
    BinRel r(p.universe());
    for (const auto& b : p.blocks()) {
        auto m = b.members();
        for (Element x : m)
            for (Element y : m) r.insert(x, y);
    }
    return r;
}

bool BinRel::is_reflexive() const {
    for (Element x = 0; x < n_; ++x)
        if (!contains(x, x)) return false;
    return true;
}

bool BinRel::is_symmetric() const {
    for (Element x = 0; x < n_; ++x)
        for (Element y = 0; y < n_; ++y)
            if (contains(x, y) != contains(y, x)) return false;
    return true;
}

bool BinRel::is_transitive() const {
    for (Element x = 0; x < n_; ++x)
        for (Element y = 0; y < n_; ++y) {
            if (!contains(x, y)) continue;
            for (Element z = 0; z < n_; ++z)
                if (contains(y, z) && !contains(x, z)) return false;
        }
    return true;
}

std::optional<Partition> BinRel::to_partition() const {
    if (!is_reflexive() || !is_symmetric() || !is_transitive()) return std::nullopt;
    std::vector<ElementSet> blocks;
    std::vector<bool> placed(n_, false);
    for (Element x = 0; x < n_; ++x) {
        if (placed[x]) continue;
        ElementSet block(n_);
        for (Element y = 0; y < n_; ++y)
            if (contains(x, y)) {
                block.insert(y);
                placed[y] = true;
            }
        blocks.push_back(std::move(block));
    }
    return Partition(std::move(blocks));
}

BinRel BinRel::intersect(const BinRel& other) const {
    BinRel out(n_);
    for (Element x = 0; x < n_; ++x)
        for (Element y = 0; y < n_; ++y)
            if (contains(x, y) && other.contains(x, y)) out.insert(x, y);
    return out;
}

// ---------------------------------------------------------------------------
// Θ(A)

BinRel theta_of(const FiniteLattice& L, const UnaryTable& star, const ElementSet& A) {
    if (auto v = is_deductive_system(L, star, A, DsKind::Second); !v.holds)
        throw LatticeError(ErrorKind::NotADeductiveSystem,
                           "set is not a deductive system of the second kind (" + v.counterexample->clause + ")");
    const auto impl = darrow_table(L, star);
    BinRel r(L.size());
    for (Element x = 0; x < L.size(); ++x)
        for (Element y = 0; y < L.size(); ++y)
            if (A.contains(impl(x, y)) && A.contains(impl(y, x))) r.insert(x, y);
    return r;
}

bool ThetaReport::passed() const {
    return reflexive && symmetric && compatible_join && compatible_meet && compatible_star && top_class_matches &&
           (!meet_closed || transitive);
}

ThetaReport check_theta_theorem(const FiniteLattice& L, const UnaryTable& star, const ElementSet& A) {
    if (!is_stone(L, star).holds) throw LatticeError(ErrorKind::HypothesisViolated, "lattice is not a Stone lattice");
    if (!is_deductive_system(L, star, A, DsKind::Second).holds)
        throw LatticeError(ErrorKind::HypothesisViolated, "set is not a deductive system of the second kind");
    return evaluate_theta_conditions(L, star, A);
}

ThetaReport evaluate_theta_conditions(const FiniteLattice& L, const UnaryTable& star, const ElementSet& A) {
    const auto n = L.size();
    ThetaReport rep;
    rep.relation = theta_of(L, star, A);
    const auto& r = rep.relation;

    rep.reflexive = true;
    for (Element x = 0; x < n; ++x)
        if (!r.contains(x, x)) {
            rep.reflexive = false;
            rep.failures.push_back({{{"x", x}}, "(x,x) in Theta(A)", std::nullopt, std::nullopt});
            break;
        }

    rep.symmetric = r.is_symmetric();
    if (!rep.symmetric) rep.failures.push_back({{}, "Theta(A) symmetric", std::nullopt, std::nullopt});

    rep.compatible_join = rep.compatible_meet = rep.compatible_star = true;
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            if (!r.contains(a, b)) continue;
            if (rep.compatible_star && !r.contains(star(a), star(b))) {
                rep.compatible_star = false;
                rep.failures.push_back(
                    {{{"a", a}, {"b", b}}, "(a,b) in Theta implies (a*,b*) in Theta", star(a), star(b)});
            }
            for (Element c = 0; c < n; ++c) {
                if (rep.compatible_join && !r.contains(L.join(a, c), L.join(b, c))) {
                    rep.compatible_join = false;
                    rep.failures.push_back({{{"a", a}, {"b", b}, {"c", c}},
                                            "(a,b) in Theta implies (a v c, b v c) in Theta",
                                            L.join(a, c),
                                            L.join(b, c)});
                }
                if (rep.compatible_meet && !r.contains(L.meet(a, c), L.meet(b, c))) {
                    rep.compatible_meet = false;
                    rep.failures.push_back({{{"a", a}, {"b", b}, {"c", c}},
                                            "(a,b) in Theta implies (a ^ c, b ^ c) in Theta",
                                            L.meet(a, c),
                                            L.meet(b, c)});
                }
            }
        }

    rep.top_class = class_of_top(L, r);
    ElementSet expected(n);
    for (Element x = 0; x < n; ++x)
        if (A.contains(star(star(x)))) expected.insert(x);
    rep.top_class_matches = rep.top_class == expected;
    if (!rep.top_class_matches)
        rep.failures.push_back({{}, "[1]Theta(A) = {x : x** in A}", std::nullopt, std::nullopt});

    rep.meet_closed = true;
    for (Element x : A.members())
        for (Element y : A.members())
            if (!A.contains(L.meet(x, y))) rep.meet_closed = false;

    rep.transitive = r.is_transitive();
    if (rep.meet_closed && !rep.transitive)
        rep.failures.push_back({{}, "A meet closed implies Theta(A) transitive", std::nullopt, std::nullopt});
    return rep;
}

// ---------------------------------------------------------------------------
// Congruences

bool is_congruence(const FiniteLattice& L, const UnaryTable& star, const Partition& p) {
    const auto n = L.size();
    std::vector<std::size_t> block(n);
    for (Element e = 0; e < n; ++e) block[e] = p.block_of(e);
    for (Element a = 0; a < n; ++a)
        for (Element b = a + 1; b < n; ++b) {
            if (block[a] != block[b]) continue;
            if (block[star(a)] != block[star(b)]) return false;
            for (Element c = 0; c < n; ++c)
                if (block[L.join(a, c)] != block[L.join(b, c)] || block[L.meet(a, c)] != block[L.meet(b, c)])
                    return false;
        }
    return true;
}

std::vector<Partition> enumerate_congruences(const FiniteLattice& L, const UnaryTable& star) {
    const auto n = L.size();
    if (n > kMaxCongruenceEnumerationSize)
        throw LatticeError(ErrorKind::SizeLimit, "congruence enumeration is limited to " +
                                                     std::to_string(kMaxCongruenceEnumerationSize) + " elements");

    struct Candidate {
        std::size_t blocks;
        std::vector<std::size_t> rgs;
        Partition partition;
    };
    std::vector<Candidate> found;

    // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
    std::vector<std::size_t> rgs(n, 0);
    auto emit = [&](std::size_t nblocks) {
        std::vector<ElementSet> blocks(nblocks, ElementSet(n));
        for (Element e = 0; e < n; ++e) blocks[rgs[e]].insert(e);
        Partition p(std::move(blocks));
        if (is_congruence(L, star, p)) found.push_back({nblocks, rgs, std::move(p)});
    };
    auto recurse = [&](auto&& self, std::size_t i, std::size_t max_block) -> void {
        if (i == n) {
            emit(max_block + 1);
            return;
        }
        for (std::size_t b = 0; b <= max_block + 1; ++b) {
            rgs[i] = b;
            self(self, i + 1, std::max(max_block, b));
        }
    };
    recurse(recurse, 1, 0);

    std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
        if (a.blocks != b.blocks) return a.blocks > b.blocks;
        return a.rgs < b.rgs;
    });
    std::vector<Partition> out;
    out.reserve(found.size());
    for (auto& c : found) out.push_back(std::move(c.partition));
    return out;
}

ElementSet class_of_top(const FiniteLattice& L, const Partition& p) { return p.blocks()[p.block_of(L.top())]; }

ElementSet class_of_top(const FiniteLattice& L, const BinRel& r) {
    ElementSet out(L.size());
    for (Element x = 0; x < L.size(); ++x)
        if (r.contains(L.top(), x)) out.insert(x);
    return out;
}

}  // namespace pclatt
