#include "rigidity/henneberg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rigidity {

namespace {

using AdjMap = std::map<int, std::set<int>>;

AdjMap adjacency_of(const Graph& g) {
  AdjMap adj;
  for (int v = 1; v <= g.vertex_count(); ++v) adj[v] = {};
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  return adj;
}

// Laman test for a graph given on an arbitrary id set: relabel to 1..m.
bool is_laman_sub(const AdjMap& adj) {
  std::map<int, int> idx;
  int m = 0;
  for (const auto& [v, nb] : adj) idx[v] = ++m;
  Graph g(m);
  for (const auto& [v, nb] : adj)
    for (int u : nb)
      if (u > v) g.add_edge(idx[v], idx[u]);
  return is_laman_pebble(g);
}

struct ReverseSearch {
  // Steps are collected in removal order and reversed at the end.
  std::vector<HennebergStep> removed;
  std::array<int, 3> base{};

  bool run(AdjMap& adj) {
    if (adj.size() == 3) {
      int i = 0;
      for (const auto& [v, nb] : adj) base[i++] = v;
      return true;
    }
    // Reverse H1: removing a degree-2 vertex always keeps the graph Laman.
    for (const auto& [v, nb] : adj) {
      if (nb.size() != 2) continue;
      HennebergStep step{StepKind::H1, v, {nb.begin(), nb.end()}, {0, 0}};
      AdjMap sub = adj;
      for (int u : nb) sub[u].erase(v);
      sub.erase(v);
      removed.push_back(step);
      if (run(sub)) return true;
      removed.pop_back();
    }
    // Reverse H2: degree-3 vertex plus a reinserted non-edge among its
    // neighbors that restores the Laman property.
    for (const auto& [v, nb] : adj) {
      if (nb.size() != 3) continue;
      std::vector<int> a(nb.begin(), nb.end());
      for (auto [p, q] : {std::pair{a[0], a[1]}, {a[0], a[2]}, {a[1], a[2]}}) {
        if (adj.at(p).count(q)) continue;
        AdjMap sub = adj;
        for (int u : nb) sub[u].erase(v);
        sub.erase(v);
        sub[p].insert(q);
        sub[q].insert(p);
        if (!is_laman_sub(sub)) continue;
        removed.push_back({StepKind::H2, v, a, {p, q}});
        if (run(sub)) return true;
        removed.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

Graph replay(const HennebergSequence& seq) {
  const int n = 3 + static_cast<int>(seq.steps.size());
  std::set<int> ids(seq.base.begin(), seq.base.end());
  if (ids.size() != 3) throw std::invalid_argument("base triangle not distinct");
  for (const auto& s : seq.steps) ids.insert(s.new_vertex);
  if (static_cast<int>(ids.size()) != n || *ids.begin() != 1 || *ids.rbegin() != n)
    throw std::invalid_argument("vertex ids do not cover 1..n");

  Graph g(n);
  std::set<int> present(seq.base.begin(), seq.base.end());
  g.add_edge(seq.base[0], seq.base[1]);
  g.add_edge(seq.base[0], seq.base[2]);
  g.add_edge(seq.base[1], seq.base[2]);
  for (const auto& s : seq.steps) {
    std::set<int> attach(s.attach.begin(), s.attach.end());
    if (attach.size() != s.attach.size())
      throw std::invalid_argument("attach vertices not distinct");
    for (int u : s.attach)
      if (!present.count(u))
        throw std::invalid_argument("attach vertex does not exist yet");
    if (present.count(s.new_vertex))
      throw std::invalid_argument("new vertex already present");
    if (s.kind == StepKind::H1) {
      if (s.attach.size() != 2)
        throw std::invalid_argument("H1 step needs exactly 2 attach vertices");
    } else {
      if (s.attach.size() != 3)
        throw std::invalid_argument("H2 step needs exactly 3 attach vertices");
      auto [p, q] = s.removed_edge;
      if (!attach.count(p) || !attach.count(q))
        throw std::invalid_argument("removed edge not among attach vertices");
      if (!g.has_edge(p, q))
        throw std::invalid_argument("removed edge absent");
      g.remove_edge(p, q);
    }
    present.insert(s.new_vertex);
    for (int u : s.attach) g.add_edge(s.new_vertex, u);
  }
  return g;
}

HennebergSequence henneberg_decompose(const Graph& g) {
  if (!is_laman_pebble(g))
    throw std::invalid_argument("henneberg_decompose requires a Laman graph");
  AdjMap adj = adjacency_of(g);
  ReverseSearch search;
  if (!search.run(adj))
    throw std::logic_error("no Henneberg sequence found for Laman input");
  HennebergSequence seq;
  seq.base = search.base;
  seq.steps.assign(search.removed.rbegin(), search.removed.rend());
  return seq;
}

namespace {

bool h1_search(AdjMap& adj, std::vector<HennebergStep>& removed,
               std::array<int, 3>& base) {
  if (adj.size() == 3) {
    int i = 0;
    for (const auto& [v, nb] : adj) base[i++] = v;
    return true;
  }
  // Intermediate graphs can regain degree-2 vertices after other removals,
  // so every branch is explored, not just the first.
  for (const auto& [v, nb] : adj) {
    if (nb.size() != 2) continue;
    AdjMap sub = adj;
    for (int u : nb) sub[u].erase(v);
    sub.erase(v);
    removed.push_back({StepKind::H1, v, {nb.begin(), nb.end()}, {0, 0}});
    if (h1_search(sub, removed, base)) return true;
    removed.pop_back();
  }
  return false;
}

}  // namespace

std::optional<HennebergSequence> h1_witness(const Graph& g) {
  if (!is_laman_pebble(g))
    throw std::invalid_argument("h1_witness requires a Laman graph");
  AdjMap adj = adjacency_of(g);
  std::vector<HennebergStep> removed;
  std::array<int, 3> base{};
  if (!h1_search(adj, removed, base)) return std::nullopt;
  HennebergSequence seq;
  seq.base = base;
  seq.steps.assign(removed.rbegin(), removed.rend());
  return seq;
}

GraphClass classify(const Graph& g) {
  return h1_witness(g) ? GraphClass::H1 : GraphClass::H2;
}

}  // namespace rigidity
