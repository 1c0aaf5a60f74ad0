#include "hyperlap/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace hyperlap {

namespace {

struct Token {
    std::string_view text;
    std::size_t column = 1;
};

struct Line {
    std::size_t number = 1;
    std::string_view raw;
    std::vector<Token> tokens;

    SourceLocation at(std::size_t token) const {
        const std::size_t column = token < tokens.size() ? tokens[token].column
                                   : tokens.empty()      ? 1
                                                         : tokens.back().column;
        return {number, column, std::string(raw)};
    }
    [[noreturn]] void fail(std::size_t token, const std::string& message) const {
        throw parse_error(message, at(token));
    }
};

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\v' || c == '\f';
}

// Splits into lines, drops comments and blank lines.
std::vector<Line> lex(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++number;
        if (!raw.empty() && raw.back() == '\r')
            raw.remove_suffix(1);

        Line line{number, raw, {}};
        std::string_view body = raw.substr(0, std::min(raw.find('#'), raw.size()));
        std::size_t pos = 0;
        while (pos < body.size()) {
            while (pos < body.size() && is_space(body[pos]))
                ++pos;
            const std::size_t begin = pos;
            while (pos < body.size() && !is_space(body[pos]))
                ++pos;
            if (pos > begin)
                line.tokens.push_back({body.substr(begin, pos - begin), begin + 1});
        }
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
        if (end == text.size())
            break;
        start = end + 1;
    }
    return lines;
}

std::size_t number_at(const Line& line, std::size_t token, const char* what) {
    const auto text = line.tokens[token].text;
    std::size_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || !std::all_of(first, last, [](char c) { return c >= '0' && c <= '9'; }) ||
        ec != std::errc{} || ptr != last)
        line.fail(token, std::string("expected a non-negative integer for ") + what + ", found '" +
                             std::string(text) + "'");
    return value;
}

void expect_arity(const Line& line, std::size_t min_tokens, std::size_t max_tokens,
                  const char* usage) {
    const std::size_t count = line.tokens.size();
    if (count < min_tokens || count > max_tokens)
        line.fail(std::min(count, max_tokens), std::string("malformed directive, expected '") + usage +
                                                   "'");
}

// Reads tokens [first, end) as a vertex set in [1..n]; returns it sorted.
VertexSet vertex_list(const Line& line, std::size_t first, std::size_t n, const char* what) {
    VertexSet set;
    std::set<std::size_t> seen;
    for (std::size_t t = first; t < line.tokens.size(); ++t) {
        const std::size_t v = number_at(line, t, "a vertex index");
        if (v < 1 || v > n)
            line.fail(t, "vertex index out of range: " + std::to_string(v) + " not in [1.." +
                             std::to_string(n) + "]");
        if (!seen.insert(v).second)
            line.fail(t, "duplicate vertex " + std::to_string(v) + " in " + what);
        set.push_back(v);
    }
    if (set.empty())
        line.fail(line.tokens.size(), std::string("empty ") + what);
    std::sort(set.begin(), set.end());
    return set;
}

} // namespace

Hypergraph parse_hg(std::string_view text) {
    Hypergraph h;
    bool have_vertices = false;
    std::set<std::string, std::less<>> names;
    for (const Line& line : lex(text)) {
        const auto keyword = line.tokens[0].text;
        if (keyword == "vertices") {
            if (have_vertices)
                line.fail(0, "duplicate 'vertices' declaration");
            expect_arity(line, 2, 2, "vertices <n>");
            h.n = number_at(line, 1, "the vertex count");
            if (h.n == 0)
                line.fail(1, "vertex count must be positive");
            have_vertices = true;
        } else if (keyword == "edge") {
            if (!have_vertices)
                line.fail(0, "'edge' before 'vertices' declaration");
            if (line.tokens.size() < 2)
                line.fail(1, "malformed directive, expected 'edge <name> <i1> <i2> ...'");
            const std::string name(line.tokens[1].text);
            if (!names.insert(name).second)
                line.fail(1, "duplicate edge name '" + name + "'");
            h.edges.push_back(vertex_list(line, 2, h.n, "edge"));
            h.edge_names.push_back(name);
        } else {
            line.fail(0, "unknown directive '" + std::string(keyword) + "'");
        }
    }
    if (!have_vertices)
        throw parse_error("missing 'vertices' declaration", {1, 1, ""});
    return h;
}

CWHypergraph parse_cw(std::string_view text) {
    CWHypergraph x;
    std::set<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> pairs;
    for (const Line& line : lex(text)) {
        const auto keyword = line.tokens[0].text;
        if (keyword == "cells") {
            expect_arity(line, 3, 3, "cells <d> <count>");
            const std::size_t d = number_at(line, 1, "the dimension");
            if (d != x.counts.size())
                line.fail(1, "expected 'cells " + std::to_string(x.counts.size()) +
                                 "': dimensions must be declared in order starting at 0");
            const std::size_t count = number_at(line, 2, "the cell count");
            if (d == 0 && count == 0)
                line.fail(2, "at least one 0-cell is required");
            x.counts.push_back(count);
            if (d > 0)
                x.levels.emplace_back();
        } else if (keyword == "inc") {
            expect_arity(line, 5, 5, "inc <d> <i> <j> <+1|-1>");
            const std::size_t d = number_at(line, 1, "the level");
            if (d + 1 >= x.counts.size())
                line.fail(1, "level " + std::to_string(d) + " needs 'cells " + std::to_string(d) +
                                 "' and 'cells " + std::to_string(d + 1) + "' declared first");
            const std::size_t i = number_at(line, 2, "the lower cell index");
            const std::size_t j = number_at(line, 3, "the upper cell index");
            if (i < 1 || i > x.counts[d])
                line.fail(2, "cell index out of range: " + std::to_string(i) + " not in [1.." +
                                 std::to_string(x.counts[d]) + "]");
            if (j < 1 || j > x.counts[d + 1])
                line.fail(3, "cell index out of range: " + std::to_string(j) + " not in [1.." +
                                 std::to_string(x.counts[d + 1]) + "]");
            const auto sign_token = line.tokens[4].text;
            int sign = 0;
            if (sign_token == "+1")
                sign = 1;
            else if (sign_token == "-1")
                sign = -1;
            else
                line.fail(4, "sign must be '+1' or '-1', found '" + std::string(sign_token) + "'");
            if (!pairs.insert({d, {i, j}}).second)
                line.fail(2, "duplicate incidence pair (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") at level " + std::to_string(d));
            x.levels[d].push_back({i, j, sign});
        } else if (keyword == "skel") {
            if (line.tokens.size() < 3)
                line.fail(line.tokens.size(), "malformed directive, expected 'skel <d> <j> <v1> ...'");
            if (x.counts.empty())
                line.fail(0, "'skel' before 'cells 0' declaration");
            const std::size_t d = number_at(line, 1, "the dimension");
            if (d == 0 || d >= x.counts.size())
                line.fail(1, "skeletons are given for declared cells of dimension >= 1");
            const std::size_t j = number_at(line, 2, "the cell index");
            if (j < 1 || j > x.counts[d])
                line.fail(2, "cell index out of range: " + std::to_string(j) + " not in [1.." +
                                 std::to_string(x.counts[d]) + "]");
            if (x.skeletons.contains({d, j}))
                line.fail(2, "duplicate skeleton for cell e^" + std::to_string(d) + "_" +
                                 std::to_string(j));
            x.skeletons[{d, j}] = vertex_list(line, 3, x.counts[0], "skeleton");
        } else {
            line.fail(0, "unknown directive '" + std::string(keyword) + "'");
        }
    }
    if (x.counts.empty())
        throw parse_error("missing 'cells 0' declaration", {1, 1, ""});
    return x;
}

std::string serialize(const Hypergraph& h) {
    std::ostringstream out;
    out << "vertices " << h.n << '\n';
    for (std::size_t j = 1; j <= h.edge_count(); ++j) {
        out << "edge " << h.edge_name(j);
        for (std::size_t v : h.edges[j - 1])
            out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

std::string serialize(const CWHypergraph& x) {
    std::ostringstream out;
    for (std::size_t d = 0; d < x.counts.size(); ++d)
        out << "cells " << d << ' ' << x.counts[d] << '\n';
    for (std::size_t d = 0; d < x.levels.size(); ++d)
        for (const auto& inc : x.levels[d])
            out << "inc " << d << ' ' << inc.lower << ' ' << inc.upper << ' '
                << (inc.sign > 0 ? "+1" : "-1") << '\n';
    for (const auto& [cell, skeleton] : x.skeletons) {
        out << "skel " << cell.first << ' ' << cell.second;
        for (std::size_t v : skeleton)
            out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

AnyObject builtin_fixture(std::string_view name) {
    if (name == "fig1")
        return parse_hg(fig1_text);
    if (name == "fig2")
        return parse_cw(fig2_text);
    throw input_error("unknown fixture '" + std::string(name) + "' (expected fig1 or fig2)");
}

AnyObject load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw input_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    auto ends_with = [&](std::string_view suffix) {
        return path.size() >= suffix.size() &&
               path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    try {
        if (ends_with(".hg"))
            return parse_hg(text);
        if (ends_with(".cw"))
            return parse_cw(text);
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.message(), e.location());
    }
    throw input_error("cannot tell the format of '" + path + "' (expected a .hg or .cw extension)");
}

} // namespace hyperlap
