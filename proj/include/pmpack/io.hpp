#pragma once

#include <iosfwd>
#include <string>

#include "pmpack/family.hpp"
#include "pmpack/graph.hpp"

namespace pmpack {

/// Graph text format: first line "n m", then m lines "u v" with
/// 0 <= u < v < n in lexicographic order; lines starting with '#' are
/// comments. ASCII, LF line endings.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);
std::string graph_to_string(const Graph& g);

/// Matching family format: one line "u-v" per edge, sorted; matchings
/// separated by "--" lines.
MatchingFamily read_family(std::istream& in, int host_n);
MatchingFamily read_family_file(const std::string& path, int host_n);
void write_family(std::ostream& out, const MatchingFamily& fam);
void write_family_file(const std::string& path, const MatchingFamily& fam);
std::string family_to_string(const MatchingFamily& fam);

} // namespace pmpack
