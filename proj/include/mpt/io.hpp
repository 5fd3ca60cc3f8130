#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "mpt/graph.hpp"
#include "mpt/matrix.hpp"
#include "mpt/walk.hpp"

namespace mpt {

struct UniformGraph;

// Text formats. Blank lines and lines starting with '#' are skipped; all
// errors are ParseError with 1-based line/column.
//
//   matrix (tmx):  N, then N rows of N tokens (integer, p/q, or -inf)
//   vector:        N, then N tokens
//   digraph:       "N E", then E lines "src dst" (1-based)
//   uniform graph: "T E", then E lines "src dst weight height" (1-based)
//   walk literal:  "start: i->j j->k ..." (1-based)

MaxPlusMatrix parse_matrix(std::string_view text);
MaxPlusVector parse_vector(std::string_view text);
Digraph parse_digraph(std::string_view text);
UniformGraph parse_uniform_graph(std::string_view text);
Walk parse_walk(std::string_view text);

std::string format_matrix(const MaxPlusMatrix& a);
std::string format_vector(const MaxPlusVector& v);
std::string format_digraph(const Digraph& g);
std::string format_uniform_graph(const UniformGraph& g);
std::string format_walk(const Walk& w);

/// Reads a whole file; throws InputError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace mpt
