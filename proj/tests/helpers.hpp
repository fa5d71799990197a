#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "pclatt/genlat.hpp"
#include "pclatt/io.hpp"
#include "pclatt/lattice.hpp"

namespace testing_support {

using namespace pclatt;

/// "1 b c b 0" -> element indices of those labels.
inline std::vector<Element> row(const FiniteLattice& L, const std::string& text) {
    std::vector<Element> out;
    std::istringstream in(text);
    for (std::string tok; in >> tok;) out.push_back(L.index_of(tok));
    return out;
}

inline ElementSet set(const FiniteLattice& L, const std::string& text) { return parse_set(L, text); }

inline std::vector<std::string> format_all(const FiniteLattice& L, const std::vector<ElementSet>& sets) {
    std::vector<std::string> out;
    for (const auto& s : sets) out.push_back(format_set(L, s));
    return out;
}

/// All dedup lattices with min_n..max_n elements, fixtures first.
inline std::vector<FiniteLattice> corpus(std::size_t max_n, bool with_fixtures = true, bool dedup = true) {
    std::vector<FiniteLattice> out;
    if (with_fixtures)
        for (const auto& f : fixtures()) out.push_back(parse_lattice(f.text));
    for (std::size_t n = 1; n <= max_n; ++n)
        for_each_lattice(n, dedup, [&](const FiniteLattice& L) { out.push_back(L); });
    return out;
}

inline FiniteLattice chain(std::size_t n) {
    std::string text = "elements:";
    for (std::size_t i = 0; i < n; ++i) text += " c" + std::to_string(i);
    text += "\n";
    for (std::size_t i = 0; i + 1 < n; ++i)
        text += "cover: c" + std::to_string(i) + " c" + std::to_string(i + 1) + "\n";
    return parse_lattice(text);
}

inline FiniteLattice m3() {
    return parse_lattice("elements: 0 a b c 1\ncover: 0 a\ncover: 0 b\ncover: 0 c\ncover: a 1\ncover: b 1\ncover: c 1\n");
}

inline FiniteLattice boolean4() {
    return parse_lattice("elements: 0 a b 1\ncover: 0 a\ncover: 0 b\ncover: a 1\ncover: b 1\n");
}

}  // namespace testing_support
