#include "doctest.h"
#include "../helpers.hpp"
#include "../oracles.hpp"
#include "pclatt/deduction.hpp"

using namespace pclatt;
using namespace testing_support;

using Strings = std::vector<std::string>;

namespace {

Strings systems(const char* fixture, DsKind kind) {
    auto L = load_fixture(fixture);
    return format_all(L, enumerate_deductive_systems(L, pseudocomplement_table(L), kind));
}

}  // namespace

TEST_CASE("first-kind systems of the fixtures") {
    CHECK(systems("fig1a", DsKind::First) == Strings{"{1}", "{b,1}", "{a,c,1}", "{0,a,b,c,1}"});
    CHECK(systems("fig1b", DsKind::First) ==
          Strings{"{1}", "{c,1}", "{d,1}", "{a,c,1}", "{b,d,1}", "{b,c,d,1}", "{0,a,b,c,d,1}"});
    CHECK(systems("fig1c", DsKind::First) ==
          Strings{"{1}", "{a,1}", "{b,1}", "{c,1}", "{a,c,1}", "{b,c,1}", "{0,a,b,c,1}"});
}

TEST_CASE("second-kind systems of the fixtures") {
    CHECK(systems("fig1a", DsKind::Second) == Strings{"{1}", "{b,1}", "{a,c,1}", "{0,a,b,c,1}"});
    // {1} is absent whenever a dense element other than 1 exists: 1 => c = c** = 1.
    CHECK(systems("fig1b", DsKind::Second) == Strings{"{c,1}", "{a,c,1}", "{b,c,d,1}", "{0,a,b,c,d,1}"});
    CHECK(systems("fig1c", DsKind::Second) == Strings{"{c,1}", "{a,c,1}", "{b,c,1}", "{0,a,b,c,1}"});
}

TEST_CASE("{1} is not a second-kind system of fig1b") {
    auto L = load_fixture("fig1b");
    auto v = is_deductive_system(L, pseudocomplement_table(L), set(L, "1"), DsKind::Second);
    REQUIRE_FALSE(v.holds);
    const auto& cx = *v.counterexample;
    CHECK(L.label(cx.assignment[0].second) == "1");
    CHECK(L.label(cx.assignment[1].second) == "c");
    CHECK(L.label(*cx.lhs) == "1");
    CHECK(L.label(*cx.rhs) == "c");
}

TEST_CASE("{b,d,1} on fig1b: first kind, not second kind, not a filter") {
    auto L = load_fixture("fig1b");
    auto star = pseudocomplement_table(L);
    auto A = set(L, "b,d,1");
    CHECK(is_deductive_system(L, star, A, DsKind::First).holds);
    auto second = is_deductive_system(L, star, A, DsKind::Second);
    REQUIRE_FALSE(second.holds);
    const auto& cx = *second.counterexample;
    CHECK(A.contains(cx.assignment[0].second));
    CHECK(A.contains(*cx.lhs));
    CHECK_FALSE(A.contains(cx.assignment[1].second));
    // d => c = 1 detaches c, which is missing.
    auto darrow = darrow_table(L, star);
    CHECK(darrow(L.index_of("d"), L.index_of("c")) == L.top());
    CHECK_FALSE(is_filter(L, A).holds);
}

TEST_CASE("a set without 1 is never a deductive system") {
    auto L = load_fixture("fig1c");
    auto v = is_deductive_system(L, pseudocomplement_table(L), set(L, "a,c"), DsKind::First);
    REQUIRE_FALSE(v.holds);
    CHECK(v.counterexample->clause == "1 in A");
}

TEST_CASE("filters") {
    auto c = load_fixture("fig1c");
    CHECK(is_filter(c, set(c, "c,1")).holds);
    CHECK_FALSE(is_filter(c, ElementSet(c.size())).holds);
    CHECK(format_all(c, enumerate_filters(c)) == Strings{"{1}", "{c,1}", "{a,c,1}", "{b,c,1}", "{0,a,b,c,1}"});
    auto b = load_fixture("fig1b");
    CHECK(format_set(b, principal_filter(b, b.index_of("b"))) == "{b,c,d,1}");
}

TEST_CASE("closure examples") {
    auto L = load_fixture("fig1b");
    auto star = pseudocomplement_table(L);
    CHECK(format_set(L, ds_closure(L, star, set(L, "d"), DsKind::First)) == "{d,1}");
    CHECK(format_set(L, ds_closure(L, star, set(L, "d"), DsKind::Second)) == "{b,c,d,1}");
    CHECK(format_set(L, ds_closure(L, star, ElementSet(L.size()), DsKind::First)) == "{1}");
    CHECK(format_set(L, ds_closure(L, star, ElementSet(L.size()), DsKind::Second)) == "{c,1}");
    CHECK(format_set(L, ds_join(L, star, set(L, "c,1"), set(L, "d,1"), DsKind::First)) == "{b,c,d,1}");
}

TEST_CASE("enumerations agree with brute force up to 7 elements") {
    for (const auto& L : corpus(7)) {
        const auto o = oracle::Order::of(L);
        if (!o.pseudocomplemented()) continue;
        const auto star = pseudocomplement_table(L);
        for (bool second : {false, true}) {
            auto kind = second ? DsKind::Second : DsKind::First;
            auto got = enumerate_deductive_systems(L, star, kind);
            std::vector<std::uint64_t> masks;
            for (const auto& s : got) masks.push_back(oracle::mask_of(s));
            auto expected = o.all_ds(second);
            std::sort(masks.begin(), masks.end());
            REQUIRE(masks == expected);
            REQUIRE(std::is_sorted(got.begin(), got.end(), canonical_less));
            CHECK(got.back() == ElementSet::full(L.size()));
            for (const auto& a : got)
                for (const auto& b : got)
                    REQUIRE(std::find(got.begin(), got.end(), a.intersect(b)) != got.end());
        }
        std::vector<std::uint64_t> filters;
        for (const auto& f : enumerate_filters(L)) filters.push_back(oracle::mask_of(f));
        std::sort(filters.begin(), filters.end());
        std::vector<std::uint64_t> expected;
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << L.size()); ++m)
            if (o.is_filter(m)) expected.push_back(m);
        REQUIRE(filters == expected);
    }
}

TEST_CASE("closure is extensive, monotone and idempotent") {
    for (const auto& L : corpus(5)) {
        if (!classify(L).pseudocomplemented) continue;
        const auto star = pseudocomplement_table(L);
        const auto n = L.size();
        for (auto kind : {DsKind::First, DsKind::Second}) {
            std::vector<ElementSet> closures;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                auto seed = ElementSet::from_mask(n, m);
                auto c = ds_closure(L, star, seed, kind);
                REQUIRE(seed.is_subset_of(c));
                REQUIRE(ds_closure(L, star, c, kind) == c);
                REQUIRE(is_deductive_system(L, star, c, kind).holds);
                closures.push_back(c);
            }
            for (std::uint64_t a = 0; a < closures.size(); ++a)
                for (std::uint64_t b = 0; b < closures.size(); ++b)
                    if ((a & b) == a) REQUIRE(closures[a].is_subset_of(closures[b]));
        }
    }
}

TEST_CASE("filters are first-kind systems on distributive lattices; the converse can fail") {
    for (const auto& L : corpus(7)) {
        if (!classify(L).distributive) continue;
        const auto star = pseudocomplement_table(L);
        for (const auto& f : enumerate_filters(L)) REQUIRE(is_deductive_system(L, star, f, DsKind::First).holds);
    }
}

TEST_CASE("on fig1c every second-kind system is first-kind") {
    auto L = load_fixture("fig1c");
    auto star = pseudocomplement_table(L);
    for (const auto& A : enumerate_deductive_systems(L, star, DsKind::Second))
        CHECK(is_deductive_system(L, star, A, DsKind::First).holds);
}

TEST_CASE("enumeration refuses large lattices") {
    auto L = chain(kMaxSubsetEnumerationSize + 1);
    try {
        enumerate_deductive_systems(L, pseudocomplement_table(L), DsKind::First);
        FAIL("expected SizeLimit");
    } catch (const LatticeError& e) {
        CHECK(e.kind() == ErrorKind::SizeLimit);
    }
}
