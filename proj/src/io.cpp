#include "pclatt/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pclatt {

namespace {

bool is_label_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '*' ||
           c == '\'';
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
    throw LatticeError(ErrorKind::Syntax, "line " + std::to_string(line) + ": " + what);
}

constexpr std::string_view kFig1a = R"(# N5: 0 < a < c < 1, 0 < b < 1
elements: 0 a b c 1
cover: 0 a
cover: 0 b
cover: a c
cover: c 1
cover: b 1
)";

constexpr std::string_view kFig1b = R"(# six-element Stone lattice
elements: 0 a b c d 1
cover: 0 a
cover: 0 b
cover: a c
cover: b c
cover: b d
cover: c 1
cover: d 1
)";

constexpr std::string_view kFig1c = R"(# 2x2 Boolean lattice with a new top above c
elements: 0 a b c 1
cover: 0 a
cover: 0 b
cover: a c
cover: b c
cover: c 1
)";

}  // namespace

FiniteLattice parse_lattice(std::string_view text) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> covers;
    bool have_elements = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        auto colon = line.find(':');
        if (colon == std::string_view::npos) syntax_error(line_no, "expected 'elements:' or 'cover:'");
        auto key = trim(line.substr(0, colon));
        auto fields = split_ws(line.substr(colon + 1));
        for (const auto& f : fields)
            if (!std::all_of(f.begin(), f.end(), is_label_char))
                syntax_error(line_no, "invalid label '" + f + "'");

        if (key == "elements") {
            if (have_elements) syntax_error(line_no, "duplicate 'elements:' line");
            if (fields.empty()) syntax_error(line_no, "'elements:' needs at least one label");
            for (std::size_t i = 0; i < fields.size(); ++i)
                if (std::find(fields.begin(), fields.begin() + i, fields[i]) != fields.begin() + i)
                    syntax_error(line_no, "duplicate label '" + fields[i] + "'");
            labels = std::move(fields);
            have_elements = true;
        } else if (key == "cover") {
            if (!have_elements) syntax_error(line_no, "'cover:' before 'elements:'");
            if (fields.size() != 2) syntax_error(line_no, "'cover:' needs exactly two labels");
            for (const auto& f : fields)
                if (std::find(labels.begin(), labels.end(), f) == labels.end())
                    syntax_error(line_no, "undeclared label '" + f + "'");
            covers.emplace_back(fields[0], fields[1]);
        } else {
            syntax_error(line_no, "unknown directive '" + std::string(key) + "'");
        }
    }
    if (!have_elements) throw LatticeError(ErrorKind::Syntax, "missing 'elements:' line");
    return build_lattice(labels, covers);
}

std::string serialize_lattice(const FiniteLattice& L) {
    std::string out = "elements:";
    for (const auto& l : L.labels()) out += " " + l;
    out += "\n";
    for (const auto& [lo, hi] : L.covers()) out += "cover: " + L.label(lo) + " " + L.label(hi) + "\n";
    return out;
}

std::string export_dot(const FiniteLattice& L) {
    std::string out = "digraph lattice {\n  rankdir=BT;\n";
    for (const auto& l : L.labels()) out += "  \"" + l + "\";\n";
    for (const auto& [lo, hi] : L.covers()) out += "  \"" + L.label(lo) + "\" -> \"" + L.label(hi) + "\";\n";
    return out + "}\n";
}

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all{{"fig1a", kFig1a}, {"fig1b", kFig1b}, {"fig1c", kFig1c}};
    return all;
}

FiniteLattice load_fixture(std::string_view name) {
    for (const auto& f : fixtures())
        if (f.name == name) return parse_lattice(f.text);
    throw LatticeError(ErrorKind::InvalidInput, "unknown fixture '" + std::string(name) + "'");
}

FiniteLattice load_lattice(const std::string& source) {
    constexpr std::string_view prefix = "fixture:";
    if (std::string_view(source).starts_with(prefix)) return load_fixture(std::string_view(source).substr(prefix.size()));
    std::ifstream in(source, std::ios::binary);
    if (!in) throw LatticeError(ErrorKind::InvalidInput, "cannot open '" + source + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_lattice(buf.str());
}

std::string format_set(const FiniteLattice& L, const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    for (Element e : s.members()) {
        out += (first ? "" : ",") + L.label(e);
        first = false;
    }
    return out + "}";
}

ElementSet parse_set(const FiniteLattice& L, std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '{') text.remove_prefix(1);
    if (!text.empty() && text.back() == '}') text.remove_suffix(1);
    ElementSet s(L.size());
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto token = trim(text.substr(start, end - start));
        start = end + 1;
        if (!token.empty()) s.insert(L.index_of(token));
    }
    return s;
}

std::string format_partition(const FiniteLattice& L, const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.blocks().size(); ++i) out += (i ? " " : "") + format_set(L, p.blocks()[i]);
    return out;
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
    return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

std::size_t label_width(const FiniteLattice& L) {
    std::size_t w = 1;
    for (const auto& l : L.labels()) w = std::max(w, l.size());
    return w;
}

}  // namespace

std::string format_star_table(const FiniteLattice& L, const UnaryTable& star) {
    const auto w = std::max<std::size_t>(label_width(L), 3);
    std::string out = pad("x", w) + " " + pad("x*", w) + " x**\n";
    for (Element x = 0; x < L.size(); ++x)
        out += pad(L.label(x), w) + " " + pad(L.label(star(x)), w) + " " + L.label(star(star(x))) + "\n";
    return out;
}

std::string format_impl_table(const FiniteLattice& L, const ImplTable& table) {
    const auto w = std::max<std::size_t>(label_width(L), 2);
    const std::string op = table.kind == ImplKind::Arrow ? "->" : "=>";
    std::string out = pad(op, w) + " |";
    for (Element y = 0; y < L.size(); ++y) out += " " + pad(L.label(y), w);
    out += "\n" + std::string(w + 1, '-') + "+" + std::string(L.size() * (w + 1), '-') + "\n";
    for (Element x = 0; x < L.size(); ++x) {
        out += pad(L.label(x), w) + " |";
        for (Element y = 0; y < L.size(); ++y) out += " " + pad(L.label(table(x, y)), w);
        out += "\n";
    }
    // Trailing pad spaces make diffs noisy.
    std::string cleaned;
    std::istringstream lines(out);
    for (std::string line; std::getline(lines, line);) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        cleaned += line + "\n";
    }
    return cleaned;
}

std::string format_counterexample(const FiniteLattice& L, const Counterexample& cx) {
    std::string out;
    for (std::size_t i = 0; i < cx.assignment.size(); ++i)
        out += (i ? ", " : "") + cx.assignment[i].first + "=" + L.label(cx.assignment[i].second);
    if (!out.empty()) out += ": ";
    out += cx.clause;
    if (cx.lhs || cx.rhs) {
        out += " [";
        out += cx.lhs ? L.label(*cx.lhs) : "-";
        out += " vs ";
        out += cx.rhs ? L.label(*cx.rhs) : "-";
        out += "]";
    }
    return out;
}

}  // namespace pclatt
