#include "pclatt/laws.hpp"

#include <algorithm>
#include <initializer_list>

#include "pclatt/congruence.hpp"
#include "pclatt/deduction.hpp"
#include "pclatt/io.hpp"

namespace pclatt {

LawContext::LawContext(const FiniteLattice& L, std::optional<UnaryTable> s) : lattice(L), star(std::move(s)) {
    if (star) {
        dstar = double_star(*star);
        arrow = arrow_table(L, *star);
        darrow = darrow_table(L, *star);
    }
}

namespace {

using Check = std::optional<Violation>;
using Vars = std::span<const Element>;

struct Ops {
    const LawContext& c;
    const FiniteLattice& L;

    explicit Ops(const LawContext& ctx) : c(ctx), L(ctx.lattice) {}

    Element zero() const { return L.bottom(); }
    Element one() const { return L.top(); }
    Element m(Element x, Element y) const { return L.meet(x, y); }
    Element j(Element x, Element y) const { return L.join(x, y); }
    Element s(Element x) const { return (*c.star)(x); }
    Element ss(Element x) const { return (*c.dstar)(x); }
    Element to(Element x, Element y) const { return (*c.arrow)(x, y); }
    Element dto(Element x, Element y) const { return (*c.darrow)(x, y); }
    bool le(Element x, Element y) const { return L.leq(x, y); }

    Check eq(std::string_view clause, Element l, Element r) const {
        if (l == r) return std::nullopt;
        return Violation{std::string(clause), l, r};
    }
    Check leq(std::string_view clause, Element l, Element r) const {
        if (le(l, r)) return std::nullopt;
        return Violation{std::string(clause), l, r};
    }
    /// l and r are complements: l ∧ r = 0 and l ∨ r = 1.
    Check complementary(std::string_view clause, Element l, Element r) const {
        if (m(l, r) != zero()) return Violation{std::string(clause) + " (meet)", m(l, r), zero()};
        if (j(l, r) != one()) return Violation{std::string(clause) + " (join)", j(l, r), one()};
        return std::nullopt;
    }
    bool are_complements(Element l, Element r) const { return m(l, r) == zero() && j(l, r) == one(); }
};

Check first_of(std::initializer_list<Check> checks) {
    for (const auto& c : checks)
        if (c) return c;
    return std::nullopt;
}

using OpsCheck = std::function<Check(const Ops&, Vars)>;

Law elementwise(std::string id, LatticeClass hyp, std::string statement, std::vector<std::string> vars, OpsCheck f,
                bool needs_star = true) {
    Law law;
    law.id = std::move(id);
    law.hypothesis = hyp;
    law.statement = std::move(statement);
    law.needs_star = needs_star;
    law.variables = std::move(vars);
    law.elementwise = [f = std::move(f)](const LawContext& ctx, Vars v) { return f(Ops(ctx), v); };
    return law;
}

Law structural(std::string id, LatticeClass hyp, std::string statement, StructuralCheck f, bool needs_star = true) {
    Law law;
    law.id = std::move(id);
    law.hypothesis = hyp;
    law.statement = std::move(statement);
    law.needs_star = needs_star;
    law.structural = std::move(f);
    return law;
}

// Prefix an inner counterexample with the object it was found on.
Verdict fail_on(const FiniteLattice& L, const std::string& what, const ElementSet& s, const Counterexample& inner) {
    Counterexample cx = inner;
    cx.clause = what + " " + format_set(L, s) + ": " + inner.clause;
    return Verdict::fail(std::move(cx));
}

constexpr auto P = LatticeClass::Pseudocomplemented;
constexpr auto D = LatticeClass::Distributive;
constexpr auto SI = LatticeClass::StoneIdentity;
constexpr auto S = LatticeClass::Stone;

// Row/column headers of the restricted operation tables on {0, a, a*, a**, 1}.
std::vector<Element> remark_points(const Ops& o, Element a) { return {o.zero(), a, o.s(a), o.ss(a), o.one()}; }

Check remark_table(const Ops& o, Element a, bool double_arrow) {
    static const char* names[] = {"0", "a", "a*", "a**", "1"};
    const Element z = o.zero(), u = o.one(), s = o.s(a), ss = o.ss(a);
    const Element a_or_s = double_arrow ? o.j(s, ss) : o.j(a, s);
    const Element s_or_ss = o.j(s, ss);
    const Element last_row_a = double_arrow ? ss : a;
    // clang-format off
    const Element expected[5][5] = {
        {u,  u,          u,       u,       u},
        {s,  a_or_s,     s,       s_or_ss, u},
        {ss, ss,         s_or_ss, ss,      u},
        {s,  a_or_s,     s,       s_or_ss, u},
        {z,  last_row_a, s,       ss,      u},
    };
    // clang-format on
    const auto pts = remark_points(o, a);
    const char* op = double_arrow ? "=>" : "->";
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) {
            Element got = double_arrow ? o.dto(pts[r], pts[c]) : o.to(pts[r], pts[c]);
            if (got != expected[r][c])
                return Violation{std::string("table cell ") + names[r] + op + names[c], got, expected[r][c]};
        }
    return std::nullopt;
}

// Stone characterization identities, checked in order (1)..(4).
Verdict stone_identities(const FiniteLattice& L, const BinaryTable& op) {
    const auto n = L.size();
    const Element zero = L.bottom(), one = L.top();
    for (Element x = 0; x < n; ++x)
        if (Element lhs = L.meet(x, op(zero, zero)); lhs != x)
            return Verdict::fail({{{"x", x}}, "(1) x ^ (0->0) = x", lhs, x});
    for (Element x = 0; x < n; ++x)
        if (Element lhs = L.meet(x, op(x, zero)); lhs != zero)
            return Verdict::fail({{{"x", x}}, "(2) x ^ (x->0) = 0", lhs, zero});
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            Element lhs = L.meet(x, op(L.meet(x, y), zero));
            Element rhs = L.meet(x, op(y, zero));
            if (lhs != rhs) return Verdict::fail({{{"x", x}, {"y", y}}, "(3) x ^ ((x^y)->0) = x ^ (y->0)", lhs, rhs});
        }
    for (Element x = 0; x < n; ++x) {
        Element neg = op(x, zero);
        if (Element lhs = L.join(neg, op(neg, zero)); lhs != one)
            return Verdict::fail({{{"x", x}}, "(4) (x->0) v ((x->0)->0) = 1", lhs, one});
    }
    return Verdict::pass();
}

// Largest lattice on which the candidate-operation sweep (n^n candidates) runs.
constexpr std::size_t kMaxCandidateSweepSize = 7;

Verdict stone_characterization_law(const LawContext& ctx) {
    const auto& L = ctx.lattice;
    const auto& star = *ctx.star;
    const bool stone = is_stone(L, star).holds;
    const bool identities = stone_identities(L, ctx.arrow->table).holds;
    if (stone && !identities)
        return Verdict::fail({{}, "Stone lattice implies identities (1)-(4) for x->y := x* v y", std::nullopt,
                              std::nullopt});
    if (!stone && identities)
        return Verdict::fail({{}, "identities (1)-(4) imply Stone lattice", std::nullopt, std::nullopt});

    // Identities (1)-(4) only read the operation at right argument 0, so
    // ranging x->0 over every unary map covers every binary operation.
    const auto n = L.size();
    if (n > kMaxCandidateSweepSize) return Verdict::pass();
    std::vector<Element> neg(n, 0);
    std::vector<Element> cells(n * n);
    while (true) {
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y) cells[x * n + y] = L.join(neg[x], y);
        if (stone_identities(L, BinaryTable(n, cells)).holds) {
            if (neg != star.map())
                return Verdict::fail({{}, "identities (1)-(4) force x->0 to be the pseudocomplement", std::nullopt,
                                      std::nullopt});
            if (!stone)
                return Verdict::fail(
                    {{}, "identities (1)-(4) for some operation imply Stone lattice", std::nullopt, std::nullopt});
        }
        std::size_t i = 0;
        while (i < n && ++neg[i] == n) neg[i++] = 0;
        if (i == n) break;
    }
    return Verdict::pass();
}

std::vector<Law> make_registry() {
    std::vector<Law> r;

    // --- pseudocomplementation --------------------------------------------
    r.push_back(elementwise("lem3-i", P, "0*=1, 1*=0, a<=a**, a***=a*", {"a"}, [](const Ops& o, Vars v) {
        Element a = v[0];
        return first_of({o.eq("0* = 1", o.s(o.zero()), o.one()), o.eq("1* = 0", o.s(o.one()), o.zero()),
                         o.leq("a <= a**", a, o.ss(a)), o.eq("a*** = a*", o.s(o.ss(a)), o.s(a))});
    }));
    r.push_back(elementwise("lem3-ii", P, "a<=b implies b*<=a*", {"a", "b"}, [](const Ops& o, Vars v) -> Check {
        Element a = v[0], b = v[1];
        if (!o.le(a, b)) return std::nullopt;
        return o.leq("b* <= a*", o.s(b), o.s(a));
    }));
    r.push_back(elementwise("lem3-iii", P, "(a v b)* = a* ^ b*", {"a", "b"}, [](const Ops& o, Vars v) {
        return o.eq("(a v b)* = a* ^ b*", o.s(o.j(v[0], v[1])), o.m(o.s(v[0]), o.s(v[1])));
    }));
    r.push_back(elementwise("lem3-iv", P, "(a ^ b)** = a** ^ b**", {"a", "b"}, [](const Ops& o, Vars v) {
        return o.eq("(a ^ b)** = a** ^ b**", o.ss(o.m(v[0], v[1])), o.m(o.ss(v[0]), o.ss(v[1])));
    }));
    r.push_back(elementwise("lem3-v", P, "a ^ (a* ^ b)* = a", {"a", "b"}, [](const Ops& o, Vars v) {
        Element a = v[0], b = v[1];
        return o.eq("a ^ (a* ^ b)* = a", o.m(a, o.s(o.m(o.s(a), b))), a);
    }));
    r.push_back(elementwise("dist-join-dense", D, "a v a* is dense: (a v a*)* = 0", {"a"}, [](const Ops& o, Vars v) {
        return o.eq("(a v a*)* = 0", o.s(o.j(v[0], o.s(v[0]))), o.zero());
    }));
    r.push_back(structural(
        "dist-pseudocomplemented", D, "every finite distributive lattice is pseudocomplemented",
        [](const LawContext& ctx) {
            if (auto f = find_pseudocomplement_failure(ctx.lattice))
                return Verdict::fail({{{"a", f->element}}, "a has a pseudocomplement", std::nullopt, std::nullopt});
            return Verdict::pass();
        },
        false));
    r.push_back(elementwise("lem6-i", S, "(a v b)** = a** v b**", {"a", "b"}, [](const Ops& o, Vars v) {
        return o.eq("(a v b)** = a** v b**", o.ss(o.j(v[0], v[1])), o.j(o.ss(v[0]), o.ss(v[1])));
    }));
    r.push_back(elementwise("lem6-ii", S, "(a ^ b)* = a* v b*", {"a", "b"}, [](const Ops& o, Vars v) {
        return o.eq("(a ^ b)* = a* v b*", o.s(o.m(v[0], v[1])), o.j(o.s(v[0]), o.s(v[1])));
    }));
    r.push_back(elementwise("lem7-i", D, "complementary a, b are pseudocomplements of each other", {"a", "b"},
                            [](const Ops& o, Vars v) -> Check {
                                Element a = v[0], b = v[1];
                                if (!o.are_complements(a, b)) return std::nullopt;
                                return first_of({o.eq("a* = b", o.s(a), b), o.eq("b* = a", o.s(b), a)});
                            }));
    r.push_back(elementwise(
        "lem7-ii", D,
        "a,c complementary and b,d complementary imply a v b, c ^ d complementary and a ^ b, c v d complementary",
        {"a", "b", "c", "d"},
        [](const Ops& o, Vars v) -> Check {
            Element a = v[0], b = v[1], c = v[2], d = v[3];
            if (!o.are_complements(a, c) || !o.are_complements(b, d)) return std::nullopt;
            return first_of({o.complementary("a v b, c ^ d complementary", o.j(a, b), o.m(c, d)),
                             o.complementary("a ^ b, c v d complementary", o.m(a, b), o.j(c, d))});
        },
        false));

    // --- the arrow x -> y := x* v y ----------------------------------------
    r.push_back(elementwise("arrow-idem-star", P, "x** -> y = x -> y = x -> (x -> y)", {"x", "y"},
                            [](const Ops& o, Vars v) {
                                Element x = v[0], y = v[1];
                                return first_of({o.eq("x** -> y = x -> y", o.to(o.ss(x), y), o.to(x, y)),
                                                 o.eq("x -> y = x -> (x -> y)", o.to(x, y), o.to(x, o.to(x, y)))});
                            }));
    r.push_back(elementwise("arrow-y-le", P, "y <= x -> y", {"x", "y"}, [](const Ops& o, Vars v) {
        return o.leq("y <= x -> y", v[1], o.to(v[0], v[1]));
    }));
    r.push_back(elementwise("arrow-zero", P, "x -> 0 = x*", {"x"}, [](const Ops& o, Vars v) {
        return o.eq("x -> 0 = x*", o.to(v[0], o.zero()), o.s(v[0]));
    }));
    r.push_back(elementwise("arrow-remark-table", P, "-> restricted to {0,a,a*,a**,1} matches the symbolic table",
                            {"a"}, [](const Ops& o, Vars v) { return remark_table(o, v[0], false); }));
    r.push_back(elementwise("lem4-i", P, "a <= b implies (a -> b)* = 0", {"a", "b"}, [](const Ops& o, Vars v) -> Check {
        if (!o.le(v[0], v[1])) return std::nullopt;
        return o.eq("(a -> b)* = 0", o.s(o.to(v[0], v[1])), o.zero());
    }));
    r.push_back(elementwise("lem4-ii", P, "(a -> b) v c = a -> (b v c) = (a -> c) v b", {"a", "b", "c"},
                            [](const Ops& o, Vars v) {
                                Element a = v[0], b = v[1], c = v[2];
                                Element mid = o.to(a, o.j(b, c));
                                return first_of({o.eq("(a -> b) v c = a -> (b v c)", o.j(o.to(a, b), c), mid),
                                                 o.eq("a -> (b v c) = (a -> c) v b", mid, o.j(o.to(a, c), b))});
                            }));
    r.push_back(elementwise("lem4-iii", P, "a -> (b -> c) = (a -> c) v (b -> c) = b -> (a -> c)", {"a", "b", "c"},
                            [](const Ops& o, Vars v) {
                                Element a = v[0], b = v[1], c = v[2];
                                Element lhs = o.to(a, o.to(b, c));
                                return first_of(
                                    {o.eq("a -> (b -> c) = (a -> c) v (b -> c)", lhs, o.j(o.to(a, c), o.to(b, c))),
                                     o.eq("a -> (b -> c) = b -> (a -> c)", lhs, o.to(b, o.to(a, c)))});
                            }));
    r.push_back(elementwise("lem4-iv", P, "(a -> (b -> a))* = 0", {"a", "b"}, [](const Ops& o, Vars v) {
        return o.eq("(a -> (b -> a))* = 0", o.s(o.to(v[0], o.to(v[1], v[0]))), o.zero());
    }));
    r.push_back(elementwise("lem4-v", P, "a <= b implies c -> a <= c -> b and b -> c <= a -> c", {"a", "b", "c"},
                            [](const Ops& o, Vars v) -> Check {
                                Element a = v[0], b = v[1], c = v[2];
                                if (!o.le(a, b)) return std::nullopt;
                                return first_of({o.leq("c -> a <= c -> b", o.to(c, a), o.to(c, b)),
                                                 o.leq("b -> c <= a -> c", o.to(b, c), o.to(a, c))});
                            }));
    r.push_back(elementwise("lem1-i", D, "a ^ (a -> b) <= b", {"a", "b"}, [](const Ops& o, Vars v) {
        return o.leq("a ^ (a -> b) <= b", o.m(v[0], o.to(v[0], v[1])), v[1]);
    }));
    r.push_back(elementwise("lem1-ii", D, "a <= b -> c implies a ^ b <= c", {"a", "b", "c"},
                            [](const Ops& o, Vars v) -> Check {
                                Element a = v[0], b = v[1], c = v[2];
                                if (!o.le(a, o.to(b, c))) return std::nullopt;
                                return o.leq("a ^ b <= c", o.m(a, b), c);
                            }));
    r.push_back(elementwise("lem1-iii", D, "a -> b = 1 implies a <= b", {"a", "b"}, [](const Ops& o, Vars v) -> Check {
        if (o.to(v[0], v[1]) != o.one()) return std::nullopt;
        return o.leq("a <= b", v[0], v[1]);
    }));
    r.push_back(elementwise("prop1-i", S, "(a* -> b*) -> b* = a* v b* = (b* -> a*) -> a*", {"a", "b"},
                            [](const Ops& o, Vars v) {
                                Element sa = o.s(v[0]), sb = o.s(v[1]);
                                Element mid = o.j(sa, sb);
                                return first_of({o.eq("(a* -> b*) -> b* = a* v b*", o.to(o.to(sa, sb), sb), mid),
                                                 o.eq("a* v b* = (b* -> a*) -> a*", mid, o.to(o.to(sb, sa), sa))});
                            }));
    r.push_back(elementwise("prop1-ii", S, "a ^ b* <= c iff a <= b* -> c", {"a", "b", "c"},
                            [](const Ops& o, Vars v) -> Check {
                                Element a = v[0], b = v[1], c = v[2];
                                bool left = o.le(o.m(a, o.s(b)), c);
                                bool right = o.le(a, o.to(o.s(b), c));
                                if (left && !right)
                                    return Violation{"a ^ b* <= c implies a <= b* -> c", a, o.to(o.s(b), c)};
                                if (right && !left)
                                    return Violation{"a <= b* -> c implies a ^ b* <= c", o.m(a, o.s(b)), c};
                                return std::nullopt;
                            }));
    r.push_back(structural("stone-char", D,
                           "on a bounded distributive lattice, identities (1)-(4) for -> hold iff the lattice with "
                           "x* := x -> 0 is Stone",
                           stone_characterization_law));

    // --- the double arrow x => y := x* v y** ---------------------------------
    r.push_back(elementwise(
        "darrow-defs", P,
        "x => y = x -> y**; x => y* = x -> y*; x => y = x** => y = x => y** = x** => y**; x -> y <= x => y; "
        "x => y = y* => x* = y* -> x*; x => 0 = x*",
        {"x", "y"}, [](const Ops& o, Vars v) {
            Element x = v[0], y = v[1];
            Element d = o.dto(x, y);
            return first_of({o.eq("x => y = x -> y**", d, o.to(x, o.ss(y))),
                             o.eq("x => y* = x -> y*", o.dto(x, o.s(y)), o.to(x, o.s(y))),
                             o.eq("x => y = x** => y", d, o.dto(o.ss(x), y)),
                             o.eq("x => y = x => y**", d, o.dto(x, o.ss(y))),
                             o.eq("x => y = x** => y**", d, o.dto(o.ss(x), o.ss(y))),
                             o.leq("x -> y <= x => y", o.to(x, y), d),
                             o.eq("x => y = y* => x*", d, o.dto(o.s(y), o.s(x))),
                             o.eq("x => y = y* -> x*", d, o.to(o.s(y), o.s(x))),
                             o.eq("x => 0 = x*", o.dto(x, o.zero()), o.s(x))});
        }));
    r.push_back(elementwise("darrow-remark-table", P, "=> restricted to {0,a,a*,a**,1} matches the symbolic table",
                            {"a"}, [](const Ops& o, Vars v) { return remark_table(o, v[0], true); }));
    r.push_back(elementwise("lem9-i", P, "a => b <= a => (a => b)", {"a", "b"}, [](const Ops& o, Vars v) {
        return o.leq("a => b <= a => (a => b)", o.dto(v[0], v[1]), o.dto(v[0], o.dto(v[0], v[1])));
    }));
    r.push_back(elementwise("lem9-ii", P, "a <= b implies c => a <= c => b and b => c <= a => c", {"a", "b", "c"},
                            [](const Ops& o, Vars v) -> Check {
                                Element a = v[0], b = v[1], c = v[2];
                                if (!o.le(a, b)) return std::nullopt;
                                return first_of({o.leq("c => a <= c => b", o.dto(c, a), o.dto(c, b)),
                                                 o.leq("b => c <= a => c", o.dto(b, c), o.dto(a, c))});
                            }));
    r.push_back(elementwise("lem9-iii", P, "a <= b implies (a => b)* = 0", {"a", "b"},
                            [](const Ops& o, Vars v) -> Check {
                                if (!o.le(v[0], v[1])) return std::nullopt;
                                return o.eq("(a => b)* = 0", o.s(o.dto(v[0], v[1])), o.zero());
                            }));
    r.push_back(elementwise("lem9-iv", P, "(a => b) => a = a**", {"a", "b"}, [](const Ops& o, Vars v) {
        return o.eq("(a => b) => a = a**", o.dto(o.dto(v[0], v[1]), v[0]), o.ss(v[0]));
    }));
    r.push_back(elementwise("lem2-i", SI, "a <= b** implies a => b = 1", {"a", "b"}, [](const Ops& o, Vars v) -> Check {
        if (!o.le(v[0], o.ss(v[1]))) return std::nullopt;
        return o.eq("a => b = 1", o.dto(v[0], v[1]), o.one());
    }));
    r.push_back(elementwise("lem2-ii", SI, "a => (b => a) = 1", {"a", "b"}, [](const Ops& o, Vars v) {
        return o.eq("a => (b => a) = 1", o.dto(v[0], o.dto(v[1], v[0])), o.one());
    }));
    r.push_back(elementwise("lem2-i'", SI, "a <= b implies a => b = 1", {"a", "b"}, [](const Ops& o, Vars v) -> Check {
        if (!o.le(v[0], v[1])) return std::nullopt;
        return o.eq("a => b = 1", o.dto(v[0], v[1]), o.one());
    }));
    r.push_back(elementwise("lem8-i", D, "a ^ (a => b) <= b**", {"a", "b"}, [](const Ops& o, Vars v) {
        return o.leq("a ^ (a => b) <= b**", o.m(v[0], o.dto(v[0], v[1])), o.ss(v[1]));
    }));
    r.push_back(elementwise("lem8-ii", D, "a <= b => c implies a ^ b <= c**", {"a", "b", "c"},
                            [](const Ops& o, Vars v) -> Check {
                                Element a = v[0], b = v[1], c = v[2];
                                if (!o.le(a, o.dto(b, c))) return std::nullopt;
                                return o.leq("a ^ b <= c**", o.m(a, b), o.ss(c));
                            }));
    r.push_back(elementwise("lem8-iii", D, "a -> b = a => b implies a** ^ b = a** ^ b**", {"a", "b"},
                            [](const Ops& o, Vars v) -> Check {
                                Element a = v[0], b = v[1];
                                if (o.to(a, b) != o.dto(a, b)) return std::nullopt;
                                return o.eq("a** ^ b = a** ^ b**", o.m(o.ss(a), b), o.m(o.ss(a), o.ss(b)));
                            }));
    r.push_back(elementwise("th1-i", S, "(a => b) => b = a** v b** = (b => a) => a", {"a", "b"},
                            [](const Ops& o, Vars v) {
                                Element a = v[0], b = v[1];
                                Element mid = o.j(o.ss(a), o.ss(b));
                                return first_of({o.eq("(a => b) => b = a** v b**", o.dto(o.dto(a, b), b), mid),
                                                 o.eq("a** v b** = (b => a) => a", mid, o.dto(o.dto(b, a), a))});
                            }));
    r.push_back(elementwise("th1-ii", S, "a ^ b* <= c** iff a <= b* => c", {"a", "b", "c"},
                            [](const Ops& o, Vars v) -> Check {
                                Element a = v[0], b = v[1], c = v[2];
                                bool left = o.le(o.m(a, o.s(b)), o.ss(c));
                                bool right = o.le(a, o.dto(o.s(b), c));
                                if (left && !right)
                                    return Violation{"a ^ b* <= c** implies a <= b* => c", a, o.dto(o.s(b), c)};
                                if (right && !left)
                                    return Violation{"a <= b* => c implies a ^ b* <= c**", o.m(a, o.s(b)), o.ss(c)};
                                return std::nullopt;
                            }));
    r.push_back(elementwise("th1-iii", S, "a -> b = a => b iff a** ^ b = a** ^ b**", {"a", "b"},
                            [](const Ops& o, Vars v) -> Check {
                                Element a = v[0], b = v[1];
                                bool left = o.to(a, b) == o.dto(a, b);
                                bool right = o.m(o.ss(a), b) == o.m(o.ss(a), o.ss(b));
                                if (left && !right)
                                    return Violation{"a -> b = a => b implies a** ^ b = a** ^ b**", o.m(o.ss(a), b),
                                                     o.m(o.ss(a), o.ss(b))};
                                if (right && !left)
                                    return Violation{"a** ^ b = a** ^ b** implies a -> b = a => b", o.to(a, b),
                                                     o.dto(a, b)};
                                return std::nullopt;
                            }));
    r.push_back(elementwise("th1-iv", S, "a => (b => c) = (a => c) v (b => c) = b => (a => c)", {"a", "b", "c"},
                            [](const Ops& o, Vars v) {
                                Element a = v[0], b = v[1], c = v[2];
                                Element lhs = o.dto(a, o.dto(b, c));
                                return first_of(
                                    {o.eq("a => (b => c) = (a => c) v (b => c)", lhs, o.j(o.dto(a, c), o.dto(b, c))),
                                     o.eq("a => (b => c) = b => (a => c)", lhs, o.dto(b, o.dto(a, c)))});
                            }));
    r.push_back(elementwise("th1-v", S, "(a => b*) v c* = a => (b* v c*) = (a => c*) v b*", {"a", "b", "c"},
                            [](const Ops& o, Vars v) {
                                Element a = v[0], sb = o.s(v[1]), sc = o.s(v[2]);
                                Element mid = o.dto(a, o.j(sb, sc));
                                return first_of({o.eq("(a => b*) v c* = a => (b* v c*)", o.j(o.dto(a, sb), sc), mid),
                                                 o.eq("a => (b* v c*) = (a => c*) v b*", mid, o.j(o.dto(a, sc), sb))});
                            }));
    r.push_back(elementwise("th1-vi", S, "a => b = 1 iff a <= b**", {"a", "b"}, [](const Ops& o, Vars v) -> Check {
        Element a = v[0], b = v[1];
        bool left = o.dto(a, b) == o.one();
        bool right = o.le(a, o.ss(b));
        if (left && !right) return Violation{"a => b = 1 implies a <= b**", a, o.ss(b)};
        if (right && !left) return Violation{"a <= b** implies a => b = 1", o.dto(a, b), o.one()};
        return std::nullopt;
    }));

    // --- comparison with implication-algebra and Lukasiewicz axioms ---------
    r.push_back(elementwise("axiom-a-modified", S, "(x => y) => x = x**", {"x", "y"}, [](const Ops& o, Vars v) {
        return o.eq("(x => y) => x = x**", o.dto(o.dto(v[0], v[1]), v[0]), o.ss(v[0]));
    }));
    r.push_back(elementwise("axiom-b", S, "(x => y) => y = (y => x) => x", {"x", "y"}, [](const Ops& o, Vars v) {
        Element x = v[0], y = v[1];
        return o.eq("(x => y) => y = (y => x) => x", o.dto(o.dto(x, y), y), o.dto(o.dto(y, x), x));
    }));
    r.push_back(elementwise("axiom-c", S, "x => (y => z) = y => (x => z)", {"x", "y", "z"}, [](const Ops& o, Vars v) {
        Element x = v[0], y = v[1], z = v[2];
        return o.eq("x => (y => z) = y => (x => z)", o.dto(x, o.dto(y, z)), o.dto(y, o.dto(x, z)));
    }));
    r.push_back(elementwise("unit-laws", S, "x => 1 = 1 and 1 => x = x**", {"x"}, [](const Ops& o, Vars v) {
        return first_of({o.eq("x => 1 = 1", o.dto(v[0], o.one()), o.one()),
                         o.eq("1 => x = x**", o.dto(o.one(), v[0]), o.ss(v[0]))});
    }));

    // --- deductive systems, filters, congruences ------------------------------
    // The least second-kind system is D(L), since 1=>y = y**; it is {1} only when D(L) = {1}.
    r.push_back(structural("ds-complete-lattice", P,
                           "deductive systems of either kind contain L, are closed under intersection, and have "
                           "least member {1} (first kind) or D(L) (second kind)",
                           [](const LawContext& ctx) {
                               const auto& L = ctx.lattice;
                               for (auto kind : {DsKind::First, DsKind::Second}) {
                                   const char* name = kind == DsKind::First ? "first kind" : "second kind";
                                   auto systems = enumerate_deductive_systems(L, *ctx.star, kind);
                                   ElementSet least(L.size());
                                   if (kind == DsKind::First)
                                       least.insert(L.top());
                                   else
                                       least = dense_elements(L, *ctx.star);
                                   auto has = [&](const ElementSet& s) {
                                       return std::find(systems.begin(), systems.end(), s) != systems.end();
                                   };
                                   if (!has(ElementSet::full(L.size())))
                                       return Verdict::fail({{}, std::string(name) + " systems contain L",
                                                             std::nullopt, std::nullopt});
                                   if (!has(least))
                                       return Verdict::fail({{}, std::string(name) + " systems contain " +
                                                                     format_set(L, least),
                                                             std::nullopt, std::nullopt});
                                   for (const auto& a : systems) {
                                       if (!least.is_subset_of(a))
                                           return Verdict::fail({{}, std::string(name) + " system " +
                                                                         format_set(L, a) + " omits " +
                                                                         format_set(L, least),
                                                                 std::nullopt, std::nullopt});
                                       for (const auto& b : systems)
                                           if (!has(a.intersect(b)))
                                               return Verdict::fail({{},
                                                                     std::string(name) + " systems " +
                                                                         format_set(L, a) + " and " + format_set(L, b) +
                                                                         " have intersection outside the family",
                                                                     std::nullopt, std::nullopt});
                                   }
                               }
                               return Verdict::pass();
                           }));
    r.push_back(structural("lem10", D, "every filter is a deductive system of the first kind",
                           [](const LawContext& ctx) {
                               for (const auto& f : enumerate_filters(ctx.lattice)) {
                                   auto v = is_deductive_system(ctx.lattice, *ctx.star, f, DsKind::First);
                                   if (!v.holds) return fail_on(ctx.lattice, "filter", f, *v.counterexample);
                               }
                               return Verdict::pass();
                           }));
    r.push_back(structural("lem5-i", SI, "every deductive system of the second kind is upward closed",
                           [](const LawContext& ctx) {
                               const auto& L = ctx.lattice;
                               for (const auto& A : enumerate_deductive_systems(L, *ctx.star, DsKind::Second))
                                   for (Element a : A.members())
                                       for (Element b = 0; b < L.size(); ++b)
                                           if (L.leq(a, b) && !A.contains(b))
                                               return fail_on(L, "second-kind system", A,
                                                              {{{"a", a}, {"b", b}},
                                                               "a in A and a <= b implies b in A",
                                                               a,
                                                               b});
                               return Verdict::pass();
                           }));
    r.push_back(structural("lem5-ii", SI,
                           "every deductive system of the second kind is a deductive system of the first kind",
                           [](const LawContext& ctx) {
                               const auto& L = ctx.lattice;
                               for (const auto& A : enumerate_deductive_systems(L, *ctx.star, DsKind::Second)) {
                                   auto v = is_deductive_system(L, *ctx.star, A, DsKind::First);
                                   if (!v.holds) return fail_on(L, "second-kind system", A, *v.counterexample);
                               }
                               return Verdict::pass();
                           }));
    r.push_back(structural("cong-top-class", P,
                           "for every congruence, the class of 1 is a first-kind deductive system and a sublattice",
                           [](const LawContext& ctx) {
                               const auto& L = ctx.lattice;
                               for (const auto& p : enumerate_congruences(L, *ctx.star)) {
                                   auto top = class_of_top(L, p);
                                   auto v = is_deductive_system(L, *ctx.star, top, DsKind::First);
                                   if (!v.holds) return fail_on(L, "class of 1", top, *v.counterexample);
                                   for (Element x : top.members())
                                       for (Element y : top.members()) {
                                           if (!top.contains(L.join(x, y)))
                                               return fail_on(L, "class of 1", top,
                                                              {{{"x", x}, {"y", y}}, "x v y in class", L.join(x, y),
                                                               std::nullopt});
                                           if (!top.contains(L.meet(x, y)))
                                               return fail_on(L, "class of 1", top,
                                                              {{{"x", x}, {"y", y}}, "x ^ y in class", L.meet(x, y),
                                                               std::nullopt});
                                       }
                               }
                               return Verdict::pass();
                           }));
    r.push_back(structural(
        "theta-theorem", S,
        "for every second-kind system A, Theta(A) is reflexive, symmetric, compatible with v, ^, *, has "
        "[1]Theta(A) = {x : x** in A}, and is transitive when A is meet closed",
        [](const LawContext& ctx) {
            const auto& L = ctx.lattice;
            for (const auto& A : enumerate_deductive_systems(L, *ctx.star, DsKind::Second)) {
                auto rep = evaluate_theta_conditions(L, *ctx.star, A);
                if (!rep.passed()) return fail_on(L, "Theta of", A, rep.failures.front());
            }
            return Verdict::pass();
        }));
    return r;
}

}  // namespace

const std::vector<Law>& law_registry() {
    static const std::vector<Law> registry = make_registry();
    return registry;
}

const Law& find_law(std::string_view id) {
    for (const auto& law : law_registry())
        if (law.id == id) return law;
    throw LatticeError(ErrorKind::UnknownLaw, "unknown law '" + std::string(id) + "'");
}

bool law_is_evaluable(const Law& law, const Classification& cls) { return !law.needs_star || cls.pseudocomplemented; }

std::optional<Violation> evaluate_law_at(const LawContext& ctx, const Law& law, std::span<const Element> assignment) {
    if (!law.is_elementwise() || assignment.size() != law.variables.size())
        throw LatticeError(ErrorKind::InvalidInput, "assignment does not match law '" + law.id + "'");
    return law.elementwise(ctx, assignment);
}

Verdict check_law(const LawContext& ctx, const Law& law, const Classification& cls) {
    if (law.needs_star && !ctx.star)
        throw LatticeError(ErrorKind::NotPseudocomplemented, "law '" + law.id + "' needs a pseudocomplemented lattice");

    Verdict verdict;
    if (law.is_elementwise()) {
        const auto n = ctx.lattice.size();
        const auto k = law.variables.size();
        std::vector<Element> tuple(k, 0);
        while (true) {
            if (auto v = law.elementwise(ctx, tuple)) {
                Counterexample cx;
                for (std::size_t i = 0; i < k; ++i) cx.assignment.emplace_back(law.variables[i], tuple[i]);
                cx.clause = std::move(v->clause);
                cx.lhs = v->lhs;
                cx.rhs = v->rhs;
                verdict = Verdict::fail(std::move(cx));
                break;
            }
            // Odometer with the last variable fastest, so tuples are visited
            // in lexicographic order.
            std::size_t i = k;
            while (i > 0 && ++tuple[i - 1] == n) tuple[--i] = 0;
            if (i == 0) break;
        }
    } else {
        verdict = law.structural(ctx);
    }
    verdict.hypothesis_met = cls.satisfies(law.hypothesis);
    return verdict;
}

Verdict check_law(const FiniteLattice& L, const UnaryTable& star, std::string_view law_id) {
    const auto& law = find_law(law_id);
    LawContext ctx(L, star);
    return check_law(ctx, law, classify(L));
}

Verdict check_stone_characterization(const FiniteLattice& L, const BinaryTable& op) {
    if (auto d = is_distributive(L); !d.holds)
        throw LatticeError(ErrorKind::NotDistributive, "the characterization needs a bounded distributive lattice");
    if (op.size() != L.size()) throw LatticeError(ErrorKind::InvalidInput, "operation table size mismatch");
    return stone_identities(L, op);
}

Verdict check_stone_characterization(const FiniteLattice& L) {
    if (auto d = is_distributive(L); !d.holds)
        throw LatticeError(ErrorKind::NotDistributive, "the characterization needs a bounded distributive lattice");
    return stone_identities(L, arrow_table(L, pseudocomplement_table(L)).table);
}

}  // namespace pclatt
