#ifndef AFCOUNT_TD_HPP
#define AFCOUNT_TD_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "afcount/graph.hpp"

namespace afc {

// Rooted tree decomposition. Node 0..size()-1, root is `root`.
struct Td {
  struct Node {
    ArgSet bag;
    std::vector<int> children;
  };
  std::vector<Node> nodes;
  int root = -1;

  int size() const { return int(nodes.size()); }
  int width() const;
};

enum class NodeType { Leaf, Int, Rem, Join };
const char* to_string(NodeType t);

// Nice tree decomposition: leaf and root bags empty, introduce/remove nodes
// change exactly one argument, join nodes have two children with the same
// non-empty bag.
struct NiceTd {
  struct Node {
    ArgSet bag;
    NodeType type = NodeType::Leaf;
    int arg = -1;  // introduced/removed argument for Int/Rem
    int child1 = -1;
    int child2 = -1;
  };
  std::vector<Node> nodes;
  int root = -1;

  int size() const { return int(nodes.size()); }
  int width() const;
  // Children ids of node t (0, 1 or 2 entries).
  std::vector<int> children(int t) const;
  // Node ids in post-order ending at the root.
  std::vector<int> post_order() const;
};

// Repeated randomized min-fill; returns the smallest-width decomposition over
// `passes` elimination orderings. Deterministic for a fixed seed.
Td compute_td(const UGraph& g, uint64_t seed = 0, int passes = 10);

// Normalizes a TD without increasing its width.
NiceTd make_nice(const Td& td);

// Violations of the TD conditions; empty means valid.
std::vector<std::string> validate(const UGraph& g, const Td& td);
std::vector<std::string> validate(const UGraph& g, const NiceTd& td);

// PACE-style .td text format ("s td <#bags> <width+1> <#vertices>", bag lines,
// edge lines). Vertices are printed 1-based.
void write_pace_td(std::ostream& os, const Td& td, int n_vertices);
Td read_pace_td(std::istream& is, int n_vertices);

}  // namespace afc

#endif
