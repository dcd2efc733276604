#ifndef AFCOUNT_GRAPH_HPP
#define AFCOUNT_GRAPH_HPP

#include <utility>
#include <vector>

#include "afcount/af.hpp"

namespace afc {

// Simple undirected graph; no parallel edges, loops dropped.
class UGraph {
public:
  explicit UGraph(int n) : adj_(n, ArgSet(n)) {}

  int size() const { return int(adj_.size()); }

  void add_edge(int u, int v) {
    if (u == v) return;
    adj_[u].set(v);
    adj_[v].set(u);
  }
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  const ArgSet& neighbors(int v) const { return adj_[v]; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < size(); ++u)
      neighbors(u).for_each([&](int v) {
        if (u < v) e.emplace_back(u, v);
      });
    return e;
  }

private:
  std::vector<ArgSet> adj_;
};

// Symmetric closure of the attack relation with self-loops dropped from the
// edge set (the vertex itself remains).
UGraph underlying_graph(const Framework& f);

}  // namespace afc

#endif
