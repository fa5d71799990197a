#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "../helpers.hpp"

using namespace pclatt;
using namespace testing_support;

namespace {

std::string syntax_message(const std::string& text) {
    try {
        parse_lattice(text);
    } catch (const LatticeError& e) {
        CHECK(e.kind() == ErrorKind::Syntax);
        return e.what();
    }
    FAIL("expected a syntax error");
    return {};
}

std::size_t count(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("two-element chain") {
    auto L = parse_lattice("elements: 0 1\ncover: 0 1");
    CHECK(L.size() == 2);
    CHECK(L.leq(0, 1));
}

TEST_CASE("comments, blank lines and CRLF are accepted") {
    auto L = parse_lattice("# chain\r\n\r\nelements: 0 1\r\n  cover: 0 1  \r\n");
    CHECK(L.size() == 2);
}

TEST_CASE("syntax errors carry the line number") {
    CHECK(syntax_message("elements: 0 1\nbogus: 0 1\n").find("line 2") != std::string::npos);
    CHECK(syntax_message("elements: 0 1\ncover: 0\n").find("line 2") != std::string::npos);
    CHECK(syntax_message("elements: 0 1\ncover: 0 x\n").find("undeclared") != std::string::npos);
    CHECK(syntax_message("cover: 0 1\nelements: 0 1\n").find("line 1") != std::string::npos);
    CHECK(syntax_message("elements: 0 1\nelements: 0 1\n").find("line 2") != std::string::npos);
    CHECK(syntax_message("elements: 0 a-b 1\n").find("invalid label") != std::string::npos);
    CHECK(syntax_message("# nothing\n").find("elements") != std::string::npos);
    CHECK(syntax_message("elements 0 1\n").find("line 1") != std::string::npos);
}

TEST_CASE("fixture parses to N5 with the expected pseudocomplements") {
    auto L = load_fixture("fig1a");
    auto star = pseudocomplement_table(L);
    CHECK(L.label(star(L.index_of("a"))) == "b");
    CHECK(L.label(star(L.index_of("b"))) == "c");
    CHECK(L.label(star(L.index_of("c"))) == "b");
    CHECK_THROWS_AS(load_fixture("fig9"), LatticeError);
}

TEST_CASE("parse after serialize is the identity") {
    for (const auto& L : corpus(7, true, false)) {
        auto text = serialize_lattice(L);
        auto M = parse_lattice(text);
        REQUIRE(M == L);
        REQUIRE(serialize_lattice(M) == text);
    }
}

TEST_CASE("DOT export") {
    auto two = parse_lattice("elements: 0 1\ncover: 0 1\n");
    CHECK(export_dot(two) == "digraph lattice {\n  rankdir=BT;\n  \"0\";\n  \"1\";\n  \"0\" -> \"1\";\n}\n");
    CHECK(count(export_dot(load_fixture("fig1c")), "->") == 5);
    CHECK(count(export_dot(load_fixture("fig1b")), "->") == 7);
    CHECK(export_dot(load_fixture("fig1b")) == export_dot(load_fixture("fig1b")));
}

TEST_CASE("sets and partitions") {
    auto L = load_fixture("fig1b");
    CHECK(format_set(L, parse_set(L, "1,c,a")) == "{a,c,1}");
    CHECK(format_set(L, parse_set(L, "{ b , d }")) == "{b,d}");
    CHECK(parse_set(L, "").empty());
    CHECK_THROWS_AS(parse_set(L, "a,q"), LatticeError);
    CHECK(format_partition(L, Partition::discrete(2)) == "{0} {a}");
}

TEST_CASE("table layout has rows for left operands") {
    auto L = load_fixture("fig1c");
    auto star = pseudocomplement_table(L);
    CHECK(format_star_table(L, star) == "x   x*  x**\n0   1   0\na   b   a\nb   a   b\nc   0   1\n1   0   1\n");
    auto text = format_impl_table(L, arrow_table(L, star));
    CHECK(text.rfind("-> | 0  a  b  c  1\n", 0) == 0);
    CHECK(text.find("a  | b  c  b  c  1\n") != std::string::npos);
}

TEST_CASE("load_lattice reads files and fixtures") {
    auto path = std::filesystem::temp_directory_path() / "pclatt_io_test.lat";
    {
        std::ofstream out(path);
        out << serialize_lattice(load_fixture("fig1b"));
    }
    CHECK(load_lattice(path.string()) == load_fixture("fig1b"));
    CHECK(load_lattice("fixture:fig1c") == load_fixture("fig1c"));
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_lattice(path.string()), LatticeError);
}

TEST_CASE("counterexample formatting") {
    auto L = load_fixture("fig1a");
    Counterexample cx{{{"a", L.index_of("c")}, {"b", L.index_of("a")}}, "a ^ (a -> b) <= b", L.index_of("c"),
                      L.index_of("a")};
    CHECK(format_counterexample(L, cx) == "a=c, b=a: a ^ (a -> b) <= b [c vs a]");
}
