#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rigidity {

// Undirected simple graph on vertices 1..n.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  // All edges as pairs (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int edge_count_ = 0;
  std::vector<std::vector<bool>> adj_;
};

// Laman decision via the (2,3)-pebble game: |E| = 2n-3 and every edge
// insertion finds 4 pebbles across its endpoints. Requires n >= 3.
bool is_laman_pebble(const Graph& g);

// Oracle for the pebble game: direct enumeration of all vertex subsets of
// size 3..n-1. Requires 3 <= n <= 9.
bool is_laman_bruteforce(const Graph& g);

// Minimum lexicographic upper-triangular adjacency bitstring over all vertex
// relabelings. Equal strings <=> isomorphic graphs.
std::string canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// All Laman graphs on n vertices up to isomorphism (3 <= n <= 8), each in
// canonical labeling, sorted by canonical form.
std::vector<Graph> generate_laman(int n);

}  // namespace rigidity
