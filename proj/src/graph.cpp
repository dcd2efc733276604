#include "afcount/graph.hpp"

namespace afc {

UGraph underlying_graph(const Framework& f) {
  UGraph g(f.size());
  for (auto [a, b] : f.attacks()) g.add_edge(a, b);
  return g;
}

}  // namespace afc
