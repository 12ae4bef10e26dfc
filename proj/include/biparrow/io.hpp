#pragma once

// Text formats:
//
//   p bgraph <n1> <n2>          p bcol <n1> <n2>
//   e <x> <y>                   e <x> <y> <r|b>
//
// Lines beginning '#' are comments. Graph readers de-duplicate edges and
// reject out-of-range indices; coloring readers reject duplicate edge lines
// (and therefore contradictions).

#include <iosfwd>
#include <string>

#include "biparrow/coloring.hpp"

namespace biparrow {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BipartiteGraph read_graph(std::istream &in);
BipartiteGraph read_graph_file(const std::string &path);
void write_graph(std::ostream &out, const BipartiteGraph &g);
void write_graph_file(const std::string &path, const BipartiteGraph &g);

// Standalone coloring file: the base graph is the listed edge set, so the
// coloring is total by construction.
EdgeColoring read_coloring(std::istream &in);
EdgeColoring read_coloring_file(const std::string &path);

// Coloring read against a known base: listed edges must be base edges;
// unlisted base edges stay unassigned.
EdgeColoring read_coloring(std::istream &in, std::shared_ptr<const BipartiteGraph> base);

void write_coloring(std::ostream &out, const EdgeColoring &c);
void write_coloring_file(const std::string &path, const EdgeColoring &c);

// Peeks the header keyword ("bgraph" or "bcol") of a file.
std::string sniff_format(const std::string &path);

}  // namespace biparrow
