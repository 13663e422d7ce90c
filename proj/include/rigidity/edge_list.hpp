#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "rigidity/graph.hpp"

namespace rigidity {

// Edge-list text format shared by all tools: first significant line
// "n <count>", then one "u v" line per edge, 1-based ids, '#' comments.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Companion lengths format: "n <count>" then "u v value" per edge.
using SquaredLengthMap = std::map<std::pair<int, int>, double>;
SquaredLengthMap read_lengths(std::istream& in, int* n_out = nullptr);
void write_lengths(std::ostream& out, int n, const SquaredLengthMap& lengths);

}  // namespace rigidity
