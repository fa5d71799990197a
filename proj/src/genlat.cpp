#include "pclatt/genlat.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

namespace pclatt {

namespace {

using Mask = std::uint32_t;

std::vector<std::string> generated_labels(std::size_t n) {
    if (n == 1) return {"0"};
    std::vector<std::string> labels{"0"};
    for (std::size_t i = 0; i + 2 < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    labels.push_back("1");
    return labels;
}

// down[x] has bit y set iff y <= x.
bool has_meets_and_joins(const std::vector<Mask>& down, const std::vector<Mask>& up) {
    const auto n = down.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            Mask lower = down[x] & down[y];
            Mask upper = up[x] & up[y];
            bool glb = false, lub = false;
            for (std::size_t z = 0; z < n && !(glb && lub); ++z) {
                if ((lower >> z & 1U) && down[z] == lower) glb = true;
                if ((upper >> z & 1U) && up[z] == upper) lub = true;
            }
            if (!glb || !lub) return false;
        }
    return true;
}

FiniteLattice lattice_from_down_sets(const std::vector<std::string>& labels, const std::vector<Mask>& down) {
    const auto n = down.size();
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) {
            if (x == y || !(down[y] >> x & 1U)) continue;
            bool between = false;
            for (std::size_t z = 0; z < n && !between; ++z)
                between = z != x && z != y && (down[y] >> z & 1U) && (down[z] >> x & 1U);
            if (!between) covers.emplace_back(labels[x], labels[y]);
        }
    return build_lattice(labels, covers);
}

void check_size(std::size_t n) {
    if (n == 0 || n > kMaxGeneratedSize)
        throw LatticeError(ErrorKind::SizeLimit,
                           "lattice generation supports 1 to " + std::to_string(kMaxGeneratedSize) + " elements");
}

}  // namespace

void for_each_lattice(std::size_t n, bool dedup, const std::function<void(const FiniteLattice&)>& visit) {
    check_size(n);
    const auto labels = generated_labels(n);
    if (n <= 2) {
        std::vector<std::pair<std::string, std::string>> covers;
        if (n == 2) covers.emplace_back("0", "1");
        visit(build_lattice(labels, covers));
        return;
    }

    // Interior elements are 1..m; a strict order among them is built one
    // element at a time, choosing a down-closed predecessor set among the
    // earlier elements, so index order is always a linear extension.
    const std::size_t m = n - 2;
    const Element top = n - 1;
    std::vector<Mask> interior_pred(m, 0);
    std::set<std::vector<std::uint8_t>> seen;

    auto emit = [&] {
        std::vector<Mask> down(n, 0), up(n, 0);
        down[0] = 1;
        for (std::size_t i = 0; i < m; ++i) down[i + 1] = (interior_pred[i] << 1) | 1U | (Mask{1} << (i + 1));
        down[top] = (Mask{1} << n) - 1;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (down[y] >> x & 1U) up[x] |= Mask{1} << y;
        if (!has_meets_and_joins(down, up)) return;
        auto L = lattice_from_down_sets(labels, down);
        if (dedup && !seen.insert(canonical_form(L)).second) return;
        visit(L);
    };

    auto recurse = [&](auto&& self, std::size_t j) -> void {
        if (j == m) {
            emit();
            return;
        }
        for (Mask pred = 0; pred < (Mask{1} << j); ++pred) {
            bool closed = true;
            for (std::size_t i = 0; i < j && closed; ++i)
                if (pred >> i & 1U) closed = (interior_pred[i] & ~pred) == 0;
            if (!closed) continue;
            interior_pred[j] = pred;
            self(self, j + 1);
        }
    };
    recurse(recurse, 0);
}

LatticeFamily generate_all(std::size_t n, bool dedup) {
    LatticeFamily family{n, dedup, {}};
    for_each_lattice(n, dedup, [&](const FiniteLattice& L) { family.lattices.push_back(L); });
    return family;
}

std::vector<std::uint8_t> canonical_form(const FiniteLattice& L) {
    const auto n = L.size();
    using Invariant = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;
    std::vector<Invariant> inv(n);
    for (Element x = 0; x < n; ++x) {
        std::size_t below = 0, above = 0, lower_covers = 0, upper_covers = 0;
        for (Element y = 0; y < n; ++y) {
            below += L.leq(y, x);
            above += L.leq(x, y);
        }
        for (const auto& [lo, hi] : L.covers()) {
            lower_covers += hi == x;
            upper_covers += lo == x;
        }
        inv[x] = {below, above, lower_covers, upper_covers};
    }

    std::vector<Element> order(n);
    for (Element x = 0; x < n; ++x) order[x] = x;
    std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) { return inv[a] < inv[b]; });

    std::vector<std::vector<Element>> groups;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0 || inv[order[i]] != inv[order[i - 1]]) groups.emplace_back();
        groups.back().push_back(order[i]);
    }
    double permutations = 1;
    for (const auto& g : groups)
        for (std::size_t k = 2; k <= g.size(); ++k) permutations *= static_cast<double>(k);
    if (permutations > 5e6) throw LatticeError(ErrorKind::SizeLimit, "canonical form search space too large");

    std::vector<std::uint8_t> prefix;
    prefix.push_back(static_cast<std::uint8_t>(n));
    for (Element x : order) {
        auto [a, b, c, d] = inv[x];
        for (auto v : {a, b, c, d}) prefix.push_back(static_cast<std::uint8_t>(v));
    }

    std::vector<std::uint8_t> best;
    std::vector<Element> perm(n);
    std::vector<std::uint8_t> code(n * n);
    auto recurse = [&](auto&& self, std::size_t g, std::size_t offset) -> void {
        if (g == groups.size()) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) code[i * n + j] = L.leq(perm[i], perm[j]) ? 1 : 0;
            if (best.empty() || code < best) best = code;
            return;
        }
        auto members = groups[g];
        std::sort(members.begin(), members.end());
        do {
            std::copy(members.begin(), members.end(), perm.begin() + static_cast<std::ptrdiff_t>(offset));
            self(self, g + 1, offset + members.size());
        } while (std::next_permutation(members.begin(), members.end()));
    };
    recurse(recurse, 0, 0);

    prefix.insert(prefix.end(), best.begin(), best.end());
    return prefix;
}

bool is_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
    return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

bool ClassFilter::accepts(const Classification& c) const {
    return std::all_of(terms.begin(), terms.end(), [&](const Term& t) { return c.satisfies(t.cls) != t.negated; });
}

ClassFilter parse_class_filter(std::string_view text) {
    ClassFilter filter;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto token = text.substr(start, end - start);
        start = end + 1;
        if (token.empty()) continue;
        bool negated = false;
        if (token.front() == '!') {
            negated = true;
            token.remove_prefix(1);
        } else if (token.starts_with("not-")) {
            negated = true;
            token.remove_prefix(4);
        } else if (token.starts_with("non-")) {
            negated = true;
            token.remove_prefix(4);
        }
        auto cls = parse_lattice_class(token);
        if (!cls) throw LatticeError(ErrorKind::InvalidInput, "unknown lattice class '" + std::string(token) + "'");
        filter.terms.push_back({*cls, negated});
    }
    return filter;
}

LatticeFamily filter_family(const LatticeFamily& family, const ClassFilter& filter) {
    LatticeFamily out{family.n, family.dedup, {}};
    for (const auto& L : family.lattices)
        if (filter.accepts(classify(L))) out.lattices.push_back(L);
    return out;
}

LatticeFamily filter_family(const LatticeFamily& family, LatticeClass predicate) {
    return filter_family(family, ClassFilter{{{predicate, false}}});
}

}  // namespace pclatt
