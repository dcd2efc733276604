#include "afcount/td.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "afcount/errors.hpp"

namespace afc {

const char* to_string(NodeType t) {
  switch (t) {
    case NodeType::Leaf: return "leaf";
    case NodeType::Int: return "int";
    case NodeType::Rem: return "rem";
    case NodeType::Join: return "join";
  }
  return "?";
}

int Td::width() const {
  int w = 0;
  for (const auto& n : nodes) w = std::max(w, n.bag.count());
  return w - 1;
}

int NiceTd::width() const {
  int w = 0;
  for (const auto& n : nodes) w = std::max(w, n.bag.count());
  return w - 1;
}

std::vector<int> NiceTd::children(int t) const {
  std::vector<int> c;
  if (nodes[t].child1 >= 0) c.push_back(nodes[t].child1);
  if (nodes[t].child2 >= 0) c.push_back(nodes[t].child2);
  return c;
}

std::vector<int> NiceTd::post_order() const {
  std::vector<int> order;
  order.reserve(size());
  // iterative post-order: (node, child-phase)
  std::vector<std::pair<int, int>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [t, phase] = stack.back();
    const Node& nd = nodes[t];
    if (phase == 0 && nd.child1 >= 0) {
      phase = 1;
      stack.emplace_back(nd.child1, 0);
    } else if (phase <= 1 && nd.child2 >= 0) {
      phase = 2;
      stack.emplace_back(nd.child2, 0);
    } else {
      order.push_back(t);
      stack.pop_back();
    }
  }
  return order;
}

namespace {

// One min-fill elimination pass; ties broken uniformly at random.
Td min_fill_pass(const UGraph& g, std::mt19937_64& rng) {
  const int n = g.size();
  std::vector<ArgSet> adj(n, ArgSet(n));
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);

  std::vector<char> gone(n, 0);
  std::vector<int> pos(n, -1);       // elimination position of each vertex
  std::vector<ArgSet> bags;          // bag of the i-th eliminated vertex
  std::vector<int> order;

  for (int step = 0; step < n; ++step) {
    long best = -1;
    std::vector<int> ties;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      // number of missing edges among the remaining neighbors of v
      long fill = 0;
      std::vector<int> nb = adj[v].bits();
      for (size_t i = 0; i < nb.size(); ++i) {
        ArgSet missing = adj[v] - adj[nb[i]];
        missing.reset(nb[i]);
        // count only pairs (nb[i], u) with u later in the list
        for (size_t j = i + 1; j < nb.size(); ++j)
          if (missing.test(nb[j])) ++fill;
      }
      if (best < 0 || fill < best) {
        best = fill;
        ties.assign(1, v);
      } else if (fill == best) {
        ties.push_back(v);
      }
    }
    int v = ties[std::uniform_int_distribution<size_t>(0, ties.size() - 1)(rng)];

    ArgSet bag = adj[v].plus(v);
    bags.push_back(bag);
    pos[v] = step;
    order.push_back(v);
    gone[v] = 1;

    std::vector<int> nb = adj[v].bits();
    for (int u : nb) adj[u].reset(v);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        adj[nb[i]].set(nb[j]);
        adj[nb[j]].set(nb[i]);
      }
  }

  Td td;
  td.nodes.resize(n);
  std::vector<int> parent(n, -1);
  std::vector<int> loose;  // nodes with no remaining neighbor at elimination
  for (int i = 0; i < n; ++i) {
    td.nodes[i].bag = bags[i];
    int v = order[i];
    int best_pos = -1;
    bags[i].for_each([&](int u) {
      if (u == v) return;
      if (best_pos < 0 || pos[u] < best_pos) best_pos = pos[u];
    });
    if (best_pos >= 0)
      parent[i] = best_pos;
    else
      loose.push_back(i);
  }
  // Chain component roots (and isolated vertices) near the root.
  for (size_t i = 0; i + 1 < loose.size(); ++i) parent[loose[i]] = loose[i + 1];
  td.root = loose.back();
  for (int i = 0; i < n; ++i)
    if (parent[i] >= 0) td.nodes[parent[i]].children.push_back(i);
  return td;
}

}  // namespace

Td compute_td(const UGraph& g, uint64_t seed, int passes) {
  if (passes < 1) throw usage_error("td passes must be >= 1");
  Td best;
  int best_width = -1;
  for (int p = 0; p < passes; ++p) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + uint64_t(p) + 1);
    Td td = min_fill_pass(g, rng);
    int w = td.width();
    if (best_width < 0 || w < best_width) {
      best = std::move(td);
      best_width = w;
    }
  }
  return best;
}

namespace {

struct NiceBuilder {
  const Td& td;
  NiceTd out;
  int universe;

  int add(NodeType type, ArgSet bag, int arg, int c1, int c2) {
    NiceTd::Node n;
    n.type = type;
    n.bag = std::move(bag);
    n.arg = arg;
    n.child1 = c1;
    n.child2 = c2;
    out.nodes.push_back(std::move(n));
    return int(out.nodes.size()) - 1;
  }

  // Chain of rem/int nodes turning bag `from` (at node id `top`) into `to`.
  int morph(int top, const ArgSet& from, const ArgSet& to) {
    ArgSet cur = from;
    for (int a : (from - to).bits()) {
      cur.reset(a);
      top = add(NodeType::Rem, cur, a, top, -1);
    }
    for (int a : (to - from).bits()) {
      cur.set(a);
      top = add(NodeType::Int, cur, a, top, -1);
    }
    return top;
  }

  int build(int v) {
    const ArgSet& bag = td.nodes[v].bag;
    std::vector<int> tops;
    for (int c : td.nodes[v].children) {
      int sub = build(c);
      tops.push_back(morph(sub, td.nodes[c].bag, bag));
    }
    if (tops.empty()) {
      int leaf = add(NodeType::Leaf, ArgSet(universe), -1, -1, -1);
      return morph(leaf, ArgSet(universe), bag);
    }
    int j = tops[0];
    for (size_t i = 1; i < tops.size(); ++i)
      j = add(NodeType::Join, bag, -1, j, tops[i]);
    return j;
  }
};

// Splices empty-bag nodes out of an (imported) TD so join bags stay non-empty.
Td drop_empty_bags(const Td& td) {
  bool any_empty = false;
  for (const auto& n : td.nodes)
    if (n.bag.none()) any_empty = true;
  if (!any_empty) return td;

  Td out;
  // collect surviving children of v, skipping empty-bag descendants
  std::vector<int> map(td.nodes.size(), -1);
  auto gather = [&](auto&& self, int v, std::vector<int>& into) -> void {
    for (int c : td.nodes[v].children) {
      if (td.nodes[c].bag.none())
        self(self, c, into);
      else
        into.push_back(c);
    }
  };
  auto copy = [&](auto&& self, int v) -> int {
    Td::Node n;
    n.bag = td.nodes[v].bag;
    out.nodes.push_back(n);
    int id = int(out.nodes.size()) - 1;
    std::vector<int> kids;
    gather(gather, v, kids);
    for (int c : kids) out.nodes[id].children.push_back(self(self, c));
    return id;
  };

  int r = td.root;
  std::vector<int> top_level;
  if (td.nodes[r].bag.none()) {
    gather(gather, r, top_level);
    if (top_level.empty()) throw internal_error("tree decomposition has only empty bags");
  } else {
    top_level.push_back(r);
  }
  out.root = copy(copy, top_level[0]);
  // remaining top-level subtrees are vertex-disjoint; hang them off the root
  for (size_t i = 1; i < top_level.size(); ++i)
    out.nodes[out.root].children.push_back(copy(copy, top_level[i]));
  return out;
}

}  // namespace

NiceTd make_nice(const Td& td) {
  if (td.root < 0 || td.nodes.empty()) throw internal_error("make_nice: empty decomposition");
  Td clean = drop_empty_bags(td);
  int universe = clean.nodes[clean.root].bag.universe();
  NiceBuilder b{clean, NiceTd{}, universe};
  int top = b.build(clean.root);
  top = b.morph(top, clean.nodes[clean.root].bag, ArgSet(universe));
  b.out.root = top;
  return std::move(b.out);
}

namespace {

// Checks shared by Td and NiceTd: tree shape, coverage, connectedness.
template <typename Tree>
void validate_core(const UGraph& g, const Tree& td, int root,
                   const std::vector<std::vector<int>>& children,
                   std::vector<std::string>& bad) {
  const int n = g.size();
  const int m = int(td.nodes.size());
  if (root < 0 || root >= m) {
    bad.push_back("invalid root");
    return;
  }
  std::vector<int> indeg(m, 0);
  for (int v = 0; v < m; ++v)
    for (int c : children[v]) {
      if (c < 0 || c >= m) {
        bad.push_back("child id out of range");
        return;
      }
      ++indeg[c];
    }
  for (int v = 0; v < m; ++v) {
    if (v == root && indeg[v] != 0) bad.push_back("root has a parent");
    if (v != root && indeg[v] != 1) bad.push_back("node " + std::to_string(v) + " not in tree");
  }
  std::vector<char> seen(m, 0);
  std::vector<int> stack{root};
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (seen[v]) {
      bad.push_back("cycle in decomposition tree");
      return;
    }
    seen[v] = 1;
    ++reached;
    for (int c : children[v]) stack.push_back(c);
  }
  if (reached != m) bad.push_back("decomposition tree not connected");
  if (!bad.empty()) return;

  ArgSet covered(n);
  for (const auto& nd : td.nodes) covered |= nd.bag;
  for (int v = 0; v < n; ++v)
    if (!covered.test(v)) bad.push_back("vertex-uncovered: " + std::to_string(v));
  for (auto [u, v] : g.edges()) {
    bool ok = false;
    for (const auto& nd : td.nodes)
      if (nd.bag.test(u) && nd.bag.test(v)) {
        ok = true;
        break;
      }
    if (!ok) bad.push_back("edge-uncovered: " + std::to_string(u) + "-" + std::to_string(v));
  }

  // connectedness: the nodes containing each vertex must form a subtree
  std::vector<std::vector<int>> nbr(m);
  for (int v = 0; v < m; ++v)
    for (int c : children[v]) {
      nbr[v].push_back(c);
      nbr[c].push_back(v);
    }
  for (int x = 0; x < n; ++x) {
    int first = -1, total = 0;
    for (int v = 0; v < m; ++v)
      if (td.nodes[v].bag.test(x)) {
        ++total;
        if (first < 0) first = v;
      }
    if (total == 0) continue;
    std::vector<char> vis(m, 0);
    std::vector<int> st{first};
    vis[first] = 1;
    int cnt = 0;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      ++cnt;
      for (int u : nbr[v])
        if (!vis[u] && td.nodes[u].bag.test(x)) {
          vis[u] = 1;
          st.push_back(u);
        }
    }
    if (cnt != total) bad.push_back("connectedness: vertex " + std::to_string(x));
  }
}

}  // namespace

std::vector<std::string> validate(const UGraph& g, const Td& td) {
  std::vector<std::string> bad;
  std::vector<std::vector<int>> children(td.nodes.size());
  for (size_t v = 0; v < td.nodes.size(); ++v) children[v] = td.nodes[v].children;
  validate_core(g, td, td.root, children, bad);
  return bad;
}

std::vector<std::string> validate(const UGraph& g, const NiceTd& td) {
  std::vector<std::string> bad;
  std::vector<std::vector<int>> children(td.nodes.size());
  for (int v = 0; v < td.size(); ++v) children[v] = td.children(v);
  validate_core(g, td, td.root, children, bad);
  if (!bad.empty()) return bad;

  for (int v = 0; v < td.size(); ++v) {
    const auto& nd = td.nodes[v];
    switch (nd.type) {
      case NodeType::Leaf:
        if (nd.child1 >= 0 || nd.child2 >= 0) bad.push_back("leaf with children");
        if (nd.bag.any()) bad.push_back("leaf bag not empty");
        break;
      case NodeType::Int: {
        if (nd.child1 < 0 || nd.child2 >= 0) bad.push_back("int node arity");
        else {
          const ArgSet& cb = td.nodes[nd.child1].bag;
          if (nd.arg < 0 || cb.test(nd.arg) || nd.bag != cb.plus(nd.arg))
            bad.push_back("int node " + std::to_string(v) + " bag mismatch");
        }
        break;
      }
      case NodeType::Rem: {
        if (nd.child1 < 0 || nd.child2 >= 0) bad.push_back("rem node arity");
        else {
          const ArgSet& cb = td.nodes[nd.child1].bag;
          if (nd.arg < 0 || !cb.test(nd.arg) || nd.bag != cb.minus(nd.arg))
            bad.push_back("rem node " + std::to_string(v) + " bag mismatch");
        }
        break;
      }
      case NodeType::Join: {
        if (nd.child1 < 0 || nd.child2 < 0) bad.push_back("join node arity");
        else if (td.nodes[nd.child1].bag != nd.bag || td.nodes[nd.child2].bag != nd.bag)
          bad.push_back("join node " + std::to_string(v) + " bags differ");
        else if (nd.bag.none())
          bad.push_back("join node " + std::to_string(v) + " has empty bag");
        break;
      }
    }
  }
  if (td.nodes[td.root].bag.any()) bad.push_back("root bag not empty");
  return bad;
}

void write_pace_td(std::ostream& os, const Td& td, int n_vertices) {
  os << "s td " << td.size() << " " << (td.width() + 1) << " " << n_vertices << "\n";
  for (int v = 0; v < td.size(); ++v) {
    os << "b " << (v + 1);
    td.nodes[v].bag.for_each([&](int x) { os << " " << (x + 1); });
    os << "\n";
  }
  for (int v = 0; v < td.size(); ++v)
    for (int c : td.nodes[v].children) os << (v + 1) << " " << (c + 1) << "\n";
}

Td read_pace_td(std::istream& is, int n_vertices) {
  std::string line;
  int nbags = -1;
  Td td;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok) || tok == "c") continue;
    if (tok == "s") {
      std::string td_word;
      int w, n;
      if (!(ss >> td_word >> nbags >> w >> n) || td_word != "td")
        throw parse_error("bad .td header at line " + std::to_string(lineno));
      if (n != n_vertices)
        throw parse_error(".td vertex count mismatch");
      td.nodes.resize(nbags);
      for (auto& nd : td.nodes) nd.bag = ArgSet(n_vertices);
    } else if (tok == "b") {
      int id, v;
      if (nbags < 0 || !(ss >> id) || id < 1 || id > nbags)
        throw parse_error("bad bag line at line " + std::to_string(lineno));
      while (ss >> v) {
        if (v < 1 || v > n_vertices)
          throw parse_error("bag vertex out of range at line " + std::to_string(lineno));
        td.nodes[id - 1].bag.set(v - 1);
      }
    } else {
      int a = 0, b = 0;
      try {
        a = std::stoi(tok);
      } catch (...) {
        throw parse_error("bad line " + std::to_string(lineno) + " in .td input");
      }
      if (!(ss >> b) || nbags < 0 || a < 1 || a > nbags || b < 1 || b > nbags)
        throw parse_error("bad edge line at line " + std::to_string(lineno));
      edges.emplace_back(a - 1, b - 1);
    }
  }
  if (nbags < 0) throw parse_error("missing .td header");
  // root at bag 0 and orient edges away from it
  std::vector<std::vector<int>> nbr(nbags);
  for (auto [a, b] : edges) {
    nbr[a].push_back(b);
    nbr[b].push_back(a);
  }
  std::vector<char> vis(nbags, 0);
  std::vector<int> stack{0};
  vis[0] = 1;
  td.root = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : nbr[v])
      if (!vis[u]) {
        vis[u] = 1;
        td.nodes[v].children.push_back(u);
        stack.push_back(u);
      }
  }
  for (char c : vis)
    if (!c) throw parse_error(".td tree not connected");
  return td;
}

}  // namespace afc
