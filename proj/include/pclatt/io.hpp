#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pclatt/congruence.hpp"
#include "pclatt/implication.hpp"
#include "pclatt/lattice.hpp"
#include "pclatt/pseudo.hpp"

namespace pclatt {

/// Parses the line-oriented lattice format:
///
///     # comment
///     elements: 0 a b 1
///     cover: 0 a
///     cover: 0 b
///     cover: a 1
///     cover: b 1
///
/// Syntax problems throw LatticeError(Syntax) with "line N:" in the message;
/// structural problems propagate from build_lattice.
FiniteLattice parse_lattice(std::string_view text);

/// Inverse of parse_lattice: elements in index order, one line per cover.
std::string serialize_lattice(const FiniteLattice& L);

/// Graphviz digraph, one edge per cover from lower to upper, rankdir=BT.
std::string export_dot(const FiniteLattice& L);

struct Fixture {
    std::string_view name;
    std::string_view text;
};

/// The three pseudocomplemented lattices used throughout the test suite:
/// fig1a (N5), fig1b (six-element Stone lattice), fig1c (2x2 with a new top).
const std::vector<Fixture>& fixtures();
FiniteLattice load_fixture(std::string_view name);

/// Reads a lattice from a file, or from an embedded fixture when `source`
/// has the form "fixture:<name>".
FiniteLattice load_lattice(const std::string& source);

/// "{a,c,1}"
std::string format_set(const FiniteLattice& L, const ElementSet& s);
/// Parses "a,c,1" (braces optional). Throws InvalidInput on unknown labels.
ElementSet parse_set(const FiniteLattice& L, std::string_view text);

std::string format_partition(const FiniteLattice& L, const Partition& p);

/// One line per element: x, x*, x**.
std::string format_star_table(const FiniteLattice& L, const UnaryTable& star);

/// Operation table, rows = left operand.
std::string format_impl_table(const FiniteLattice& L, const ImplTable& table);

std::string format_counterexample(const FiniteLattice& L, const Counterexample& cx);

}  // namespace pclatt
