#include "pclatt/lattice.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <unordered_map>

namespace pclatt {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::NotPseudocomplemented: return "NotPseudocomplemented";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotADeductiveSystem: return "NotADeductiveSystem";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::UnknownLaw: return "UnknownLaw";
    case ErrorKind::SizeLimit: return "SizeLimit";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// ElementSet

ElementSet::ElementSet(std::size_t universe, std::span<const Element> members) : bits_(universe, false) {
    for (Element e : members) insert(e);
}

ElementSet ElementSet::full(std::size_t universe) {
    ElementSet s(universe);
    s.bits_.assign(universe, true);
    return s;
}

ElementSet ElementSet::from_mask(std::size_t universe, std::uint64_t mask) {
    ElementSet s(universe);
    for (Element e = 0; e < universe && e < 64; ++e)
        if (mask >> e & 1U) s.bits_[e] = true;
    return s;
}

void ElementSet::insert(Element e) {
    if (e >= bits_.size())
        throw LatticeError(ErrorKind::InvalidInput, "element index " + std::to_string(e) + " out of range");
    bits_[e] = true;
}

void ElementSet::erase(Element e) {
    if (e < bits_.size()) bits_[e] = false;
}

std::size_t ElementSet::size() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<Element> ElementSet::members() const {
    std::vector<Element> out;
    for (Element e = 0; e < bits_.size(); ++e)
        if (bits_[e]) out.push_back(e);
    return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
    for (Element e = 0; e < bits_.size(); ++e)
        if (bits_[e] && !other.contains(e)) return false;
    return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
    ElementSet out(universe());
    for (Element e = 0; e < bits_.size(); ++e)
        if (bits_[e] && other.contains(e)) out.bits_[e] = true;
    return out;
}

ElementSet ElementSet::unite(const ElementSet& other) const {
    ElementSet out(std::max(universe(), other.universe()));
    for (Element e = 0; e < out.bits_.size(); ++e)
        if (contains(e) || other.contains(e)) out.bits_[e] = true;
    return out;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
    auto sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    auto ma = a.members(), mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

// ---------------------------------------------------------------------------
// FiniteLattice

std::optional<Element> FiniteLattice::find(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Element>(it - labels_.begin());
}

Element FiniteLattice::index_of(std::string_view label) const {
    if (auto e = find(label)) return *e;
    throw LatticeError(ErrorKind::InvalidInput, "unknown element '" + std::string(label) + "'");
}

namespace {

// Kahn's algorithm, always releasing the smallest declared index first so the
// resulting order is a deterministic function of the input.
std::vector<Element> stable_topological_order(std::size_t n, const std::vector<std::vector<Element>>& succ,
                                               const std::vector<std::string>& labels) {
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& out : succ)
        for (Element v : out) ++indegree[v];

    std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
    for (Element v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push(v);

    std::vector<Element> order;
    order.reserve(n);
    while (!ready.empty()) {
        Element u = ready.top();
        ready.pop();
        order.push_back(u);
        for (Element v : succ[u])
            if (--indegree[v] == 0) ready.push(v);
    }
    if (order.size() != n) {
        std::string on_cycle;
        for (Element v = 0; v < n; ++v)
            if (indegree[v] > 0) on_cycle += (on_cycle.empty() ? "" : " ") + labels[v];
        throw LatticeError(ErrorKind::NotAPoset, "cover relation has a cycle through {" + on_cycle + "}");
    }
    return order;
}

}  // namespace

FiniteLattice build_lattice(std::span<const std::string> labels,
                            std::span<const std::pair<std::string, std::string>> covers) {
    const std::size_t n = labels.size();
    if (n == 0) throw LatticeError(ErrorKind::InvalidInput, "a lattice needs at least one element");

    std::unordered_map<std::string, Element> declared;
    for (Element i = 0; i < n; ++i) {
        if (labels[i].empty()) throw LatticeError(ErrorKind::InvalidInput, "empty element label");
        if (!declared.emplace(labels[i], i).second)
            throw LatticeError(ErrorKind::InvalidInput, "duplicate element label '" + labels[i] + "'");
    }

    std::vector<std::string> decl_labels(labels.begin(), labels.end());
    std::vector<std::vector<Element>> succ(n);
    for (const auto& [lo, hi] : covers) {
        auto a = declared.find(lo);
        auto b = declared.find(hi);
        if (a == declared.end() || b == declared.end())
            throw LatticeError(ErrorKind::InvalidInput,
                               "cover (" + lo + ", " + hi + ") references an undeclared element");
        if (a->second == b->second)
            throw LatticeError(ErrorKind::NotAPoset, "cover (" + lo + ", " + hi + ") is a self-loop");
        succ[a->second].push_back(b->second);
    }
    for (auto& out : succ) {
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }

    const auto order = stable_topological_order(n, succ, decl_labels);
    std::vector<Element> position(n);
    for (Element i = 0; i < n; ++i) position[order[i]] = i;

    FiniteLattice L;
    L.labels_.resize(n);
    for (Element i = 0; i < n; ++i) L.labels_[i] = decl_labels[order[i]];

    // Reflexive-transitive closure. Walking the topological order backwards,
    // each element's up-set is itself plus the up-sets of its successors.
    L.leq_.assign(n * n, 0);
    for (Element i = n; i-- > 0;) {
        L.leq_[i * n + i] = 1;
        for (Element s : succ[order[i]]) {
            Element j = position[s];
            for (Element k = 0; k < n; ++k)
                if (L.leq_[j * n + k]) L.leq_[i * n + k] = 1;
        }
    }

    auto leq = [&](Element x, Element y) { return L.leq_[x * n + y] != 0; };

    std::optional<Element> bottom, top;
    for (Element x = 0; x < n && !bottom; ++x) {
        bool all = true;
        for (Element y = 0; y < n && all; ++y) all = leq(x, y);
        if (all) bottom = x;
    }
    for (Element x = 0; x < n && !top; ++x) {
        bool all = true;
        for (Element y = 0; y < n && all; ++y) all = leq(y, x);
        if (all) top = x;
    }
    if (!bottom) throw LatticeError(ErrorKind::NotBounded, "no least element");
    if (!top) throw LatticeError(ErrorKind::NotBounded, "no greatest element");
    L.bottom_ = *bottom;
    L.top_ = *top;

    L.meet_.assign(n * n, 0);
    L.join_.assign(n * n, 0);
    for (Element x = 0; x < n; ++x) {
        for (Element y = x; y < n; ++y) {
            // glb: a common lower bound above every other common lower bound.
            std::optional<Element> glb, lub;
            for (Element z = 0; z < n; ++z) {
                if (leq(z, x) && leq(z, y) && (!glb || leq(*glb, z))) glb = z;
                if (leq(x, z) && leq(y, z) && (!lub || leq(z, *lub))) lub = z;
            }
            // The candidate is the greatest only if it dominates all others.
            for (Element z = 0; z < n && glb; ++z)
                if (leq(z, x) && leq(z, y) && !leq(z, *glb)) glb.reset();
            for (Element z = 0; z < n && lub; ++z)
                if (leq(x, z) && leq(y, z) && !leq(*lub, z)) lub.reset();
            if (!glb)
                throw LatticeError(ErrorKind::NotALattice,
                                   "pair (" + L.labels_[x] + ", " + L.labels_[y] + ") has no greatest lower bound");
            if (!lub)
                throw LatticeError(ErrorKind::NotALattice,
                                   "pair (" + L.labels_[x] + ", " + L.labels_[y] + ") has no least upper bound");
            L.meet_[x * n + y] = L.meet_[y * n + x] = *glb;
            L.join_[x * n + y] = L.join_[y * n + x] = *lub;
        }
    }

    // Transitive reduction: x < y with nothing strictly between.
    for (Element x = 0; x < n; ++x) {
        for (Element y = x + 1; y < n; ++y) {
            if (!leq(x, y)) continue;
            bool between = false;
            for (Element z = x + 1; z < y && !between; ++z) between = leq(x, z) && leq(z, y);
            if (!between) L.covers_.emplace_back(x, y);
        }
    }
    return L;
}

}  // namespace pclatt
