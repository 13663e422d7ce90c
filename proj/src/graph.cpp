#include "rigidity/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace rigidity {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(n + 1, std::vector<bool>(n + 1, false));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex id out of 1..n");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u][v];
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop");
  if (adj_[u][v]) throw std::invalid_argument("duplicate edge");
  adj_[u][v] = adj_[v][u] = true;
  ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (!adj_[u][v]) throw std::invalid_argument("edge not present");
  adj_[u][v] = adj_[v][u] = false;
  --edge_count_;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int u = 1; u <= n_; ++u)
    if (adj_[v][u]) ++d;
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int u = 1; u <= n_; ++u)
    if (adj_[v][u]) out.push_back(u);
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u)
    for (int v = u + 1; v <= n_; ++v)
      if (adj_[u][v]) out.emplace_back(u, v);
  return out;
}

namespace {

// (2,3)-pebble game state. Every vertex holds 2 pebbles; accepting an edge
// u-v requires gathering 4 pebbles on {u, v}, then spends one from u.
class PebbleGame {
 public:
  explicit PebbleGame(int n)
      : n_(n), pebbles_(n + 1, 2), out_(n + 1) {}

  bool insert(int u, int v) {
    while (pebbles_[u] + pebbles_[v] < 4) {
      if (!pull_pebble(u, v) && !pull_pebble(v, u)) return false;
    }
    pebbles_[u] -= 1;
    out_[u].push_back(v);
    return true;
  }

 private:
  // Searches from `root` for a vertex with a free pebble, avoiding `other`
  // (its pebbles are already reserved), and moves one pebble back to root by
  // reversing the path.
  bool pull_pebble(int root, int other) {
    std::vector<int> parent(n_ + 1, 0);
    std::vector<bool> seen(n_ + 1, false);
    std::vector<int> stack{root};
    seen[root] = seen[other] = true;
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      for (int x : out_[w]) {
        if (seen[x]) continue;
        seen[x] = true;
        parent[x] = w;
        if (pebbles_[x] > 0) {
          pebbles_[x] -= 1;
          pebbles_[root] += 1;
          // Reverse edges along the path root -> ... -> x.
          int cur = x;
          while (cur != root) {
            int p = parent[cur];
            auto& po = out_[p];
            po.erase(std::find(po.begin(), po.end(), cur));
            out_[cur].push_back(p);
            cur = p;
          }
          return true;
        }
        stack.push_back(x);
      }
    }
    return false;
  }

  int n_;
  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;
};

}  // namespace

bool is_laman_pebble(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3) throw std::invalid_argument("is_laman_pebble requires n >= 3");
  if (g.edge_count() != 2 * n - 3) return false;
  PebbleGame game(n);
  for (auto [u, v] : g.edges())
    if (!game.insert(u, v)) return false;
  return true;
}

bool is_laman_bruteforce(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3) throw std::invalid_argument("is_laman_bruteforce requires n >= 3");
  if (n > 9) throw std::invalid_argument("is_laman_bruteforce requires n <= 9");
  if (g.edge_count() != 2 * n - 3) return false;
  const auto edges = g.edges();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int k = __builtin_popcount(mask);
    if (k < 3 || k >= n) continue;
    int inside = 0;
    for (auto [u, v] : edges)
      if ((mask >> (u - 1) & 1) && (mask >> (v - 1) & 1)) ++inside;
    if (inside > 2 * k - 3) return false;
  }
  return true;
}

namespace {

// Backtracking search for the lexicographically minimal relabeled adjacency
// bitstring. Positions are filled one vertex at a time; the bits added when
// vertex k is placed are its adjacencies to positions 0..k-1, so the string
// grows monotonically and prefixes prune the search.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  std::string run() {
    best_.assign(n_ * (n_ - 1) / 2, '1');
    best_[0] = '2';  // sentinel: larger than any real bitstring
    std::vector<int> perm;
    std::vector<bool> used(n_ + 1, false);
    std::string cur;
    extend(perm, used, cur);
    return best_;
  }

 private:
  void extend(std::vector<int>& perm, std::vector<bool>& used,
              std::string& cur) {
    if (static_cast<int>(perm.size()) == n_) {
      if (cur < best_) best_ = cur;
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (used[v]) continue;
      std::size_t old_len = cur.size();
      for (int pos = 0; pos < static_cast<int>(perm.size()); ++pos)
        cur.push_back(g_.has_edge(perm[pos], v) ? '1' : '0');
      if (std::string_view(cur).substr(0, best_.size()) <=
          std::string_view(best_).substr(0, cur.size())) {
        perm.push_back(v);
        used[v] = true;
        extend(perm, used, cur);
        used[v] = false;
        perm.pop_back();
      }
      cur.resize(old_len);
    }
  }

  const Graph& g_;
  int n_;
  std::string best_;
};

// Recovers a labeling achieving the canonical string by following only
// branches that match it.
Graph apply_canonical_labeling(const Graph& g, const std::string& canon) {
  const int n = g.vertex_count();
  std::vector<int> perm, best_perm;
  std::vector<bool> used(n + 1, false);
  std::string cur;
  std::function<bool(void)> go = [&]() -> bool {
    if (static_cast<int>(perm.size()) == n) {
      best_perm = perm;
      return true;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      std::size_t old_len = cur.size();
      bool ok = true;
      for (int pos = 0; pos < static_cast<int>(perm.size()); ++pos) {
        char bit = g.has_edge(perm[pos], v) ? '1' : '0';
        if (bit != canon[cur.size()]) ok = false;
        cur.push_back(bit);
      }
      if (ok) {
        perm.push_back(v);
        used[v] = true;
        if (go()) return true;
        used[v] = false;
        perm.pop_back();
      }
      cur.resize(old_len);
    }
    return false;
  };
  go();
  Graph out(n);
  std::vector<int> pos_of(n + 1, 0);
  for (int i = 0; i < n; ++i) pos_of[best_perm[i]] = i + 1;
  for (auto [u, v] : g.edges()) out.add_edge(pos_of[u], pos_of[v]);
  return out;
}

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.vertex_count() < 2) return "";
  return CanonicalSearch(g).run();
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Graph> generate_laman(int n) {
  if (n < 3 || n > 8)
    throw std::invalid_argument("generate_laman requires 3 <= n <= 8");
  Graph triangle(3, {{1, 2}, {2, 3}, {1, 3}});
  std::map<std::string, Graph> census;
  census.emplace(canonical_form(triangle), triangle);
  for (int k = 4; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (const auto& [form, g] : census) {
      auto keep = [&next](const Graph& h) {
        std::string form = canonical_form(h);
        if (!next.count(form)) next.emplace(form, apply_canonical_labeling(h, form));
      };
      // H1: attach the new vertex k to every pair of existing vertices.
      for (int a = 1; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
          Graph h(k);
          for (auto [u, v] : g.edges()) h.add_edge(u, v);
          h.add_edge(a, k);
          h.add_edge(b, k);
          keep(h);
        }
      // H2: attach to every triple with at least one edge among it, removing
      // one such edge.
      for (int a = 1; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          for (int c = b + 1; c < k; ++c)
            for (auto [u, v] : {std::pair{a, b}, {a, c}, {b, c}}) {
              if (!g.has_edge(u, v)) continue;
              Graph h(k);
              for (auto [x, y] : g.edges())
                if (!(x == u && y == v)) h.add_edge(x, y);
              h.add_edge(a, k);
              h.add_edge(b, k);
              h.add_edge(c, k);
              keep(h);
            }
    }
    census = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(census.size());
  for (auto& [form, g] : census) out.push_back(std::move(g));
  return out;
}

}  // namespace rigidity
