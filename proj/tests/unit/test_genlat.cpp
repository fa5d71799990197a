#include <random>
#include <set>

#include "doctest.h"
#include "../helpers.hpp"
#include "../oracles.hpp"
#include "pclatt/genlat.hpp"

using namespace pclatt;
using namespace testing_support;

namespace {

FiniteLattice relabel(const FiniteLattice& L, const std::vector<Element>& perm) {
    std::vector<std::string> labels(L.size());
    for (Element i = 0; i < L.size(); ++i) labels[perm[i]] = "e" + std::to_string(i);
    std::vector<std::pair<std::string, std::string>> covers;
    for (auto [lo, hi] : L.covers()) covers.emplace_back("e" + std::to_string(lo), "e" + std::to_string(hi));
    return build_lattice(labels, covers);
}

}  // namespace

TEST_CASE("isomorphism class counts up to 8 elements") {
    const std::size_t expected[] = {0, 1, 1, 1, 2, 5, 15, 53, 222};
    for (std::size_t n = 1; n <= 8; ++n) CHECK(generate_all(n, true).lattices.size() == expected[n]);
}

TEST_CASE("isomorphism class counts match an independent brute-force count") {
    for (std::size_t n = 1; n <= 6; ++n) CHECK(generate_all(n, true).lattices.size() == oracle::count_unlabeled_lattices(n));
}

TEST_CASE("generated lattices are naturally labeled with bounds at the ends") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& L : generate_all(n, false).lattices) {
            REQUIRE(L.size() == n);
            CHECK(L.bottom() == 0);
            CHECK(L.top() == n - 1);
            for (Element x = 0; x < n; ++x)
                for (Element y = 0; y < n; ++y)
                    if (L.leq(x, y)) REQUIRE(x <= y);
        }
    }
}

TEST_CASE("dedup keeps pairwise non-isomorphic representatives covering the full family") {
    for (std::size_t n = 1; n <= 7; ++n) {
        auto reps = generate_all(n, true).lattices;
        std::set<std::vector<std::uint8_t>> forms;
        for (const auto& r : reps) forms.insert(canonical_form(r));
        CHECK(forms.size() == reps.size());
        auto all = generate_all(n, false).lattices;
        CHECK(all.size() >= reps.size());
        for (const auto& L : all) REQUIRE(forms.count(canonical_form(L)) == 1);
        // The representative is the first member met in generation order.
        if (!all.empty()) CHECK(reps.front() == all.front());
    }
}

TEST_CASE("naturally labeled family sizes") {
    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(generate_all(n, false).lattices.size() == oracle::count_naturally_labeled_lattices(n));
    CHECK(generate_all(5, false).lattices.size() == 7);
}

TEST_CASE("canonical form is invariant under random relabeling") {
    std::mt19937 rng(7);
    for (std::size_t n = 3; n <= 8; ++n) {
        auto reps = generate_all(n, true).lattices;
        for (const auto& L : reps) {
            std::vector<Element> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            auto M = relabel(L, perm);
            REQUIRE(is_isomorphic(L, M));
            REQUIRE(canonical_form(L) == canonical_form(M));
        }
    }
}

TEST_CASE("fixtures are isomorphic to exactly one generated representative") {
    for (const auto& f : fixtures()) {
        auto L = parse_lattice(f.text);
        std::size_t hits = 0;
        for (const auto& r : generate_all(L.size(), true).lattices) hits += is_isomorphic(L, r);
        CHECK(hits == 1);
    }
    CHECK_FALSE(is_isomorphic(load_fixture("fig1a"), load_fixture("fig1c")));
}

TEST_CASE("class filters") {
    auto f = parse_class_filter("stone-identity,!distributive");
    REQUIRE(f.terms.size() == 2);
    CHECK(f.terms[1].negated);
    CHECK(f.accepts(classify(load_fixture("fig1a"))));
    CHECK_FALSE(f.accepts(classify(load_fixture("fig1b"))));
    CHECK(parse_class_filter("not-distributive").terms[0].negated);
    CHECK(parse_class_filter("non-stone").terms[0].cls == LatticeClass::Stone);
    CHECK(parse_class_filter("").terms.empty());
    CHECK_THROWS_AS(parse_class_filter("modular"), LatticeError);

    // Stone lattices on 5 elements: the 5-chain and 2x2 with a new bottom.
    auto stone5 = filter_family(generate_all(5, true), LatticeClass::Stone);
    CHECK(stone5.lattices.size() == 2);
    for (const auto& L : stone5.lattices) CHECK(classify(L).stone);
    auto si_nd = filter_family(generate_all(5, true), parse_class_filter("stone-identity,!distributive"));
    REQUIRE(si_nd.lattices.size() == 1);
    CHECK(is_isomorphic(si_nd.lattices[0], load_fixture("fig1a")));
    CHECK(filter_family(generate_all(6, true), ClassFilter{}).lattices.size() == 15);
    auto c_like = filter_family(generate_all(5, true), parse_class_filter("distributive,!stone-identity"));
    REQUIRE(c_like.lattices.size() == 1);
    CHECK(is_isomorphic(c_like.lattices[0], load_fixture("fig1c")));
}

TEST_CASE("size limits") {
    CHECK_THROWS_AS(generate_all(0, true), LatticeError);
    CHECK_THROWS_AS(generate_all(kMaxGeneratedSize + 1, true), LatticeError);
}

TEST_CASE("generation is deterministic") {
    CHECK(generate_all(6, true).lattices == generate_all(6, true).lattices);
}
