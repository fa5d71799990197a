#include "doctest.h"
#include "../helpers.hpp"
#include "../oracles.hpp"
#include "pclatt/implication.hpp"

using namespace pclatt;
using namespace testing_support;

namespace {

void check_table(const FiniteLattice& L, const ImplTable& t, const std::vector<std::string>& rows) {
    REQUIRE(rows.size() == L.size());
    for (Element x = 0; x < L.size(); ++x) {
        CAPTURE(L.label(x));
        auto expected = row(L, rows[x]);
        std::vector<Element> actual;
        for (Element y = 0; y < L.size(); ++y) actual.push_back(t(x, y));
        CHECK(actual == expected);
    }
}

}  // namespace

TEST_CASE("arrow tables of the fixtures") {
    auto a = load_fixture("fig1a");
    check_table(a, arrow_table(a, pseudocomplement_table(a)),
                {"1 1 1 1 1", "b 1 b 1 1", "c c 1 c 1", "b 1 b 1 1", "0 a b c 1"});
    auto b = load_fixture("fig1b");
    check_table(b, arrow_table(b, pseudocomplement_table(b)),
                {"1 1 1 1 1 1", "d 1 d 1 d 1", "a a c c 1 1", "0 a b c d 1", "a a c c 1 1", "0 a b c d 1"});
    auto c = load_fixture("fig1c");
    check_table(c, arrow_table(c, pseudocomplement_table(c)),
                {"1 1 1 1 1", "b c b c 1", "a a c c 1", "0 a b c 1", "0 a b c 1"});
}

TEST_CASE("double arrow tables of the fixtures") {
    auto a = load_fixture("fig1a");
    check_table(a, darrow_table(a, pseudocomplement_table(a)),
                {"1 1 1 1 1", "b 1 b 1 1", "c c 1 c 1", "b 1 b 1 1", "0 c b c 1"});
    auto b = load_fixture("fig1b");
    check_table(b, darrow_table(b, pseudocomplement_table(b)),
                {"1 1 1 1 1 1", "d 1 d 1 d 1", "a a 1 1 1 1", "0 a d 1 d 1", "a a 1 1 1 1", "0 a d 1 d 1"});
    auto c = load_fixture("fig1c");
    check_table(c, darrow_table(c, pseudocomplement_table(c)),
                {"1 1 1 1 1", "b c b 1 1", "a a c 1 1", "0 a b 1 1", "0 a b 1 1"});
}

TEST_CASE("implication tables agree with the oracle on every pseudocomplemented lattice up to 7 elements") {
    for (const auto& L : corpus(7)) {
        const auto o = oracle::Order::of(L);
        if (!o.pseudocomplemented()) continue;
        const auto star = pseudocomplement_table(L);
        const auto to = implication_table(L, star, ImplKind::Arrow);
        const auto dto = implication_table(L, star, ImplKind::DoubleArrow);
        CHECK(to.kind == ImplKind::Arrow);
        CHECK(dto.kind == ImplKind::DoubleArrow);
        for (Element x = 0; x < L.size(); ++x)
            for (Element y = 0; y < L.size(); ++y) {
                REQUIRE(to(x, y) == o.arrow(x, y));
                REQUIRE(dto(x, y) == o.darrow(x, y));
                REQUIRE(L.leq(to(x, y), dto(x, y)));
            }
    }
}

TEST_CASE("binary tables validate their shape") {
    CHECK_THROWS_AS(BinaryTable(2, {0, 1, 1}), LatticeError);
    CHECK_THROWS_AS(BinaryTable(2, {0, 1, 1, 2}), LatticeError);
    BinaryTable t(2, {0, 1, 1, 1});
    CHECK(t(1, 0) == 1);
    CHECK(t.size() == 2);
}
