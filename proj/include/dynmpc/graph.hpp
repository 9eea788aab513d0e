#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dynmpc/words.hpp"

namespace dynmpc {

inline std::pair<Word, Word> canon(Word u, Word v) {
  return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

// Plain adjacency-set graph. This is the shadow copy the harness keeps in
// lockstep with the update stream; all oracles run against it and never
// look at simulator state.
class Graph {
public:
  explicit Graph(Word n = 0) : n_(n), adj_(static_cast<std::size_t>(n)) {}

  Word vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(Word u, Word v) const { return edges_.count(canon(u, v)) != 0; }

  void add_edge(Word u, Word v, Word w = 0) {
    auto e = canon(u, v);
    edges_[e] = w;
    adj_[u].insert(v);
    adj_[v].insert(u);
  }

  void remove_edge(Word u, Word v) {
    auto e = canon(u, v);
    edges_.erase(e);
    adj_[u].erase(v);
    adj_[v].erase(u);
  }

  std::optional<Word> weight(Word u, Word v) const {
    auto it = edges_.find(canon(u, v));
    if (it == edges_.end()) return std::nullopt;
    return it->second;
  }

  const std::set<Word>& neighbors(Word v) const { return adj_[v]; }
  Word degree(Word v) const { return static_cast<Word>(adj_[v].size()); }
  const std::map<std::pair<Word, Word>, Word>& edges() const { return edges_; }

private:
  Word n_;
  std::vector<std::set<Word>> adj_;
  std::map<std::pair<Word, Word>, Word> edges_;
};

// Edge set as a matching: canonical pairs, vertex-disjointness not implied.
using Matching = std::set<std::pair<Word, Word>>;

} // namespace dynmpc
