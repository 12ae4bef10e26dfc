#include "biparrow/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace biparrow {

namespace {

struct Line {
    int number;
    std::istringstream tokens;
};

// Yields non-comment, non-blank lines with their line numbers.
template <typename Fn>
void for_each_line(std::istream &in, Fn &&fn) {
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        const auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        std::istringstream tokens(raw);
        fn(number, tokens);
    }
}

[[noreturn]] void fail(int line, const std::string &message) {
    throw ParseError("line " + std::to_string(line) + ": " + message);
}

struct Header {
    std::string kind;
    int n1 = 0, n2 = 0;
    bool seen = false;
};

void parse_header(Header &header, int line, std::istringstream &tokens,
                  const std::string &expected) {
    if (header.seen) fail(line, "duplicate header");
    std::string kind;
    if (!(tokens >> kind >> header.n1 >> header.n2)) fail(line, "malformed header");
    if (kind != expected) fail(line, "expected 'p " + expected + " <n1> <n2>'");
    if (header.n1 < 0 || header.n2 < 0) fail(line, "negative side size");
    header.kind = kind;
    header.seen = true;
}

}  // namespace

BipartiteGraph read_graph(std::istream &in) {
    Header header;
    std::vector<Edge> edges;
    for_each_line(in, [&](int line, std::istringstream &tokens) {
        std::string tag;
        tokens >> tag;
        if (tag == "p") {
            parse_header(header, line, tokens, "bgraph");
        } else if (tag == "e") {
            if (!header.seen) fail(line, "edge before header");
            int x, y;
            if (!(tokens >> x >> y)) fail(line, "malformed edge line");
            if (x < 0 || x >= header.n1 || y < 0 || y >= header.n2)
                fail(line, "edge (" + std::to_string(x) + ", " + std::to_string(y) +
                               ") out of range");
            edges.push_back({x, y});
        } else {
            fail(line, "unknown line tag '" + tag + "'");
        }
    });
    if (!header.seen) throw ParseError("missing 'p bgraph' header");
    return BipartiteGraph::from_edge_list(header.n1, header.n2, edges);
}

void write_graph(std::ostream &out, const BipartiteGraph &g) {
    out << "p bgraph " << g.n1() << ' ' << g.n2() << '\n';
    for (const Edge &e : g.edges()) out << "e " << e.x << ' ' << e.y << '\n';
}

namespace {

struct ColoredEdge {
    Edge e;
    Color c;
};

std::vector<ColoredEdge> read_colored_edges(std::istream &in, Header &header) {
    std::vector<ColoredEdge> edges;
    std::set<std::pair<int, int>> seen;
    for_each_line(in, [&](int line, std::istringstream &tokens) {
        std::string tag;
        tokens >> tag;
        if (tag == "p") {
            parse_header(header, line, tokens, "bcol");
        } else if (tag == "e") {
            if (!header.seen) fail(line, "edge before header");
            int x, y;
            std::string color;
            if (!(tokens >> x >> y >> color)) fail(line, "malformed colored edge line");
            if (x < 0 || x >= header.n1 || y < 0 || y >= header.n2)
                fail(line, "edge (" + std::to_string(x) + ", " + std::to_string(y) +
                               ") out of range");
            if (color != "r" && color != "b") fail(line, "color must be 'r' or 'b'");
            if (!seen.insert({x, y}).second)
                fail(line, "duplicate edge (" + std::to_string(x) + ", " + std::to_string(y) +
                               ")");
            edges.push_back({{x, y}, color == "r" ? Color::red : Color::blue});
        } else {
            fail(line, "unknown line tag '" + tag + "'");
        }
    });
    if (!header.seen) throw ParseError("missing 'p bcol' header");
    return edges;
}

}  // namespace

EdgeColoring read_coloring(std::istream &in) {
    Header header;
    const std::vector<ColoredEdge> colored = read_colored_edges(in, header);
    std::vector<Edge> edges;
    edges.reserve(colored.size());
    for (const ColoredEdge &ce : colored) edges.push_back(ce.e);
    auto base = std::make_shared<const BipartiteGraph>(
        BipartiteGraph::from_edge_list(header.n1, header.n2, edges));
    EdgeColoring coloring(base);
    for (const ColoredEdge &ce : colored) coloring.set(ce.e.x, ce.e.y, ce.c);
    return coloring;
}

EdgeColoring read_coloring(std::istream &in, std::shared_ptr<const BipartiteGraph> base) {
    Header header;
    const std::vector<ColoredEdge> colored = read_colored_edges(in, header);
    if (header.n1 != base->n1() || header.n2 != base->n2())
        throw ParseError("coloring sides do not match the base graph");
    EdgeColoring coloring(std::move(base));
    for (const ColoredEdge &ce : colored) {
        if (!coloring.base().has_edge(ce.e.x, ce.e.y))
            throw ParseError("colored edge (" + std::to_string(ce.e.x) + ", " +
                             std::to_string(ce.e.y) + ") is not a base edge");
        coloring.set(ce.e.x, ce.e.y, ce.c);
    }
    return coloring;
}

void write_coloring(std::ostream &out, const EdgeColoring &c) {
    out << "p bcol " << c.base().n1() << ' ' << c.base().n2() << '\n';
    for (const Edge &e : c.base().edges()) {
        const auto color = c.get(e.x, e.y);
        if (!color) continue;
        out << "e " << e.x << ' ' << e.y << ' ' << color_char(*color) << '\n';
    }
}

namespace {

template <typename Reader>
auto from_file(const std::string &path, Reader &&reader) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return reader(in);
    } catch (const ParseError &e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace

BipartiteGraph read_graph_file(const std::string &path) {
    return from_file(path, [](std::istream &in) { return read_graph(in); });
}

void write_graph_file(const std::string &path, const BipartiteGraph &g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    write_graph(out, g);
}

EdgeColoring read_coloring_file(const std::string &path) {
    return from_file(path, [](std::istream &in) { return read_coloring(in); });
}

void write_coloring_file(const std::string &path, const EdgeColoring &c) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    write_coloring(out, c);
}

std::string sniff_format(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::string result;
    for_each_line(in, [&](int, std::istringstream &tokens) {
        if (!result.empty()) return;
        std::string tag, kind;
        if (tokens >> tag >> kind && tag == "p") result = kind;
    });
    if (result.empty()) throw ParseError(path + ": no 'p' header found");
    return result;
}

}  // namespace biparrow
