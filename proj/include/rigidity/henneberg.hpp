#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

enum class StepKind { H1, H2 };

// One Henneberg extension: H1 joins the new vertex to 2 existing vertices,
// H2 joins it to 3 and removes one edge among them.
struct HennebergStep {
  StepKind kind;
  int new_vertex;
  std::vector<int> attach;                  // 2 (H1) or 3 (H2), sorted
  std::pair<int, int> removed_edge{0, 0};   // H2 only, endpoints in attach
};

// Construction starting from a triangle on `base` (default {1,2,3}); vertex
// ids are explicit so that a decomposition replays to the original graph.
struct HennebergSequence {
  std::array<int, 3> base{1, 2, 3};
  std::vector<HennebergStep> steps;
};

enum class GraphClass { H1, H2 };

// Builds the graph described by the sequence. The base triangle plus the new
// vertices must cover exactly 1..n. Throws on invalid steps.
Graph replay(const HennebergSequence& seq);

// Reverse search: removes a degree-2 vertex when possible, otherwise a
// degree-3 vertex with a reinserted edge keeping the graph Laman; backtracks
// on dead ends. Requires is_laman_pebble(g).
HennebergSequence henneberg_decompose(const Graph& g);

// All-H1 construction if one exists, found by exhaustive backtracking over
// reverse-H1 moves. Requires is_laman_pebble(g).
std::optional<HennebergSequence> h1_witness(const Graph& g);

// H1 iff some construction uses only H1 steps.
GraphClass classify(const Graph& g);

}  // namespace rigidity
