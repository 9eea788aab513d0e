#include "dynmpc/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dynmpc::oracle {
namespace {

std::map<Word, Word> mate_map(const Matching& m) {
  std::map<Word, Word> mate;
  for (const auto& [u, v] : m) {
    mate[u] = v;
    mate[v] = u;
  }
  return mate;
}

struct UnionFind {
  std::vector<Word> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  Word find(Word x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Word a, Word b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b); // smaller id becomes the root
    parent[b] = a;
    return true;
  }
};

} // namespace

Verdict check_maximal(const Graph& g, const Matching& m) {
  auto mate = mate_map(m);
  if (mate.size() != 2 * m.size())
    return {false, "matching is not vertex-disjoint", {}};
  for (const auto& [u, v] : m) {
    if (!g.has_edge(u, v))
      return {false, "matched edge not in graph", {u, v}};
  }
  for (const auto& [edge, w] : g.edges()) {
    (void)w;
    if (!mate.count(edge.first) && !mate.count(edge.second))
      return {false, "edge with two free endpoints", {edge.first, edge.second}};
  }
  return {};
}

Verdict check_no_short_augmenting(const Graph& g, const Matching& m) {
  auto mate = mate_map(m);
  for (const auto& [edge, w] : g.edges()) {
    (void)w;
    if (!mate.count(edge.first) && !mate.count(edge.second))
      return {false, "augmenting path of length 1", {edge.first, edge.second}};
  }
  // length 3: free a - b - c - free d over a matched edge (b,c), a != d
  for (const auto& [b, c] : m) {
    std::vector<Word> free_b, free_c;
    for (Word a : g.neighbors(b))
      if (!mate.count(a)) free_b.push_back(a);
    if (free_b.empty()) continue;
    for (Word d : g.neighbors(c))
      if (!mate.count(d)) free_c.push_back(d);
    if (free_c.empty()) continue;
    for (Word a : free_b)
      for (Word d : free_c)
        if (a != d) return {false, "augmenting path of length 3", {a, b, c, d}};
  }
  return {};
}

namespace {

int max_matching_rec(std::vector<std::pair<Word, Word>>& edges, std::size_t i,
                     std::map<Word, int>& used, int current, int& best) {
  // bound: even taking every remaining edge cannot beat best
  if (current + static_cast<int>(edges.size() - i) <= best) return best;
  if (i == edges.size()) {
    best = std::max(best, current);
    return best;
  }
  auto [u, v] = edges[i];
  if (!used[u] && !used[v]) {
    used[u] = used[v] = 1;
    max_matching_rec(edges, i + 1, used, current + 1, best);
    used[u] = used[v] = 0;
  }
  max_matching_rec(edges, i + 1, used, current, best);
  return best;
}

} // namespace

int max_matching_exhaustive(const Graph& g) {
  if (g.edge_count() > 24)
    throw std::invalid_argument("max_matching_exhaustive: graph too large");
  std::vector<std::pair<Word, Word>> edges;
  for (const auto& [e, w] : g.edges()) {
    (void)w;
    edges.push_back(e);
  }
  std::map<Word, int> used;
  int best = 0;
  max_matching_rec(edges, 0, used, 0, best);
  return best;
}

std::vector<Word> components_oracle(const Graph& g) {
  UnionFind uf(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& [e, w] : g.edges()) {
    (void)w;
    uf.unite(e.first, e.second);
  }
  std::vector<Word> label(static_cast<std::size_t>(g.vertex_count()));
  for (Word v = 0; v < g.vertex_count(); ++v) label[v] = uf.find(v);
  return label;
}

long long mst_weight_kruskal(const Graph& g) {
  std::vector<std::pair<Word, std::pair<Word, Word>>> edges;
  for (const auto& [e, w] : g.edges()) edges.push_back({w, e});
  std::sort(edges.begin(), edges.end());
  UnionFind uf(static_cast<std::size_t>(g.vertex_count()));
  long long total = 0;
  for (const auto& [w, e] : edges)
    if (uf.unite(e.first, e.second)) total += w;
  return total;
}

long long mst_weight_prim(const Graph& g) {
  // Prim from every unvisited vertex; lazy deletion heap.
  std::vector<char> in_tree(static_cast<std::size_t>(g.vertex_count()), 0);
  long long total = 0;
  for (Word s = 0; s < g.vertex_count(); ++s) {
    if (in_tree[s]) continue;
    std::vector<std::pair<Word, Word>> heap; // (weight, vertex), min-heap
    auto push = [&](Word v) {
      in_tree[v] = 1;
      for (Word u : g.neighbors(v)) {
        if (!in_tree[u]) {
          heap.push_back({*g.weight(v, u), u});
          std::push_heap(heap.begin(), heap.end(), std::greater<>());
        }
      }
    };
    push(s);
    while (!heap.empty()) {
      std::pop_heap(heap.begin(), heap.end(), std::greater<>());
      auto [w, v] = heap.back();
      heap.pop_back();
      if (in_tree[v]) continue;
      total += w;
      push(v);
    }
  }
  return total;
}

Verdict check_spanning_forest(const Graph& g, const Matching& tree_edges) {
  UnionFind uf(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& [u, v] : tree_edges) {
    if (!g.has_edge(u, v)) return {false, "tree edge not in graph", {u, v}};
    if (!uf.unite(u, v)) return {false, "cycle in forest", {u, v}};
  }
  auto label = components_oracle(g);
  std::set<Word> comps(label.begin(), label.end());
  std::size_t expected = static_cast<std::size_t>(g.vertex_count()) - comps.size();
  if (tree_edges.size() != expected)
    return {false, "forest does not span: " + std::to_string(tree_edges.size()) +
                       " tree edges, expected " + std::to_string(expected),
            {}};
  return {};
}

} // namespace dynmpc::oracle
