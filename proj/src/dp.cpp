#include "afcount/dp.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <mutex>
#include <ostream>
#include <thread>

#include "afcount/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace afc {

namespace {

NodeCtx make_ctx(const NiceTd& ntd, int node, const Framework& f, int cred) {
  NodeCtx ctx;
  ctx.f = &f;
  ctx.bag = ntd.nodes[node].bag;
  ctx.type = ntd.nodes[node].type;
  ctx.arg = ntd.nodes[node].arg;
  ctx.cred = cred;
  return ctx;
}

bool key_equal(const Row& a, const Row& b, int key_len) {
  for (int k = 0; k < key_len; ++k)
    if (!(a.sets[k] == b.sets[k])) return false;
  return true;
}

bool key_less(const Row& a, const Row& b, int key_len) {
  for (int k = 0; k < key_len; ++k) {
    if (a.sets[k] < b.sets[k]) return true;
    if (b.sets[k] < a.sets[k]) return false;
  }
  return false;
}

// Remove `arg` from every component; counter-witnesses are filtered first.
Row rem_row(const LocalAlg& alg, const NodeCtx& ctx, const Row& row) {
  Row r;
  r.sets.reserve(row.sets.size());
  for (const auto& s : row.sets) r.sets.push_back(s.minus(ctx.arg));
  for (const auto& cw : row.cws) {
    if (!alg.cw_rem_ok(ctx, row, cw)) continue;
    CwEntry e;
    e.sets.reserve(cw.sets.size());
    for (const auto& s : cw.sets) e.sets.push_back(s.minus(ctx.arg));
    e.flag = cw.flag;
    r.cws.push_back(std::move(e));
  }
  r.canonicalize_cws();
  return r;
}

// Merge two counter-witness pools: pairs agreeing on the key prefix are
// combined (remaining sets united, flags or-ed).
void merge_cws(const std::vector<CwEntry>& a, const std::vector<CwEntry>& b, int key_len,
               int arity, std::vector<CwEntry>& out) {
  for (const auto& x : a)
    for (const auto& y : b) {
      bool match = true;
      for (int k = 0; k < key_len && match; ++k)
        if (!(x.sets[k] == y.sets[k])) match = false;
      if (!match) continue;
      CwEntry e;
      e.sets = x.sets;
      for (int k = key_len; k < arity; ++k) e.sets[k] |= y.sets[k];
      e.flag = x.flag || y.flag;
      out.push_back(std::move(e));
    }
}

Row join_rows(const LocalAlg& alg, const Row& u, const Row& v) {
  Row r;
  r.sets = u.sets;
  for (int k = alg.key_len(); k < alg.arity(); ++k) r.sets[k] |= v.sets[k];
  if (alg.has_cws()) {
    std::vector<CwEntry> pad_u{CwEntry{u.sets, false}};
    std::vector<CwEntry> pad_v{CwEntry{v.sets, false}};
    merge_cws(u.cws, v.cws, alg.key_len(), alg.arity(), r.cws);
    merge_cws(u.cws, pad_v, alg.key_len(), alg.arity(), r.cws);
    merge_cws(pad_u, v.cws, alg.key_len(), alg.arity(), r.cws);
    r.canonicalize_cws();
  }
  return r;
}

// Calls fn(u, v) for every key-matched pair across the two sorted tables.
template <typename F>
void for_each_join_pair(const Table& t1, const Table& t2, int key_len, F fn) {
  size_t i = 0, j = 0;
  while (i < t1.size() && j < t2.size()) {
    if (key_less(t1[i], t2[j], key_len)) {
      ++i;
    } else if (key_less(t2[j], t1[i], key_len)) {
      ++j;
    } else {
      size_t ie = i, je = j;
      while (ie < t1.size() && key_equal(t1[ie], t1[i], key_len)) ++ie;
      while (je < t2.size() && key_equal(t2[je], t2[j], key_len)) ++je;
      for (size_t x = i; x < ie; ++x)
        for (size_t y = j; y < je; ++y) fn(x, y);
      i = ie;
      j = je;
    }
  }
}

int find_row(const Table& t, const Row& r) {
  auto it = std::lower_bound(t.begin(), t.end(), r);
  if (it == t.end() || !(*it == r)) return -1;
  return int(it - t.begin());
}

}  // namespace

Table compute_node_table(const LocalAlg& alg, const NiceTd& ntd, int node, const Framework& f,
                         int cred, const Table* child1, const Table* child2) {
  NodeCtx ctx = make_ctx(ntd, node, f, cred);
  Table out;
  switch (ctx.type) {
    case NodeType::Leaf:
      out.push_back(alg.leaf_row(f.size()));
      break;
    case NodeType::Int: {
      std::vector<Row> rows;
      for (const Row& child : *child1) alg.intro(ctx, child, rows);
      out = std::move(rows);
      break;
    }
    case NodeType::Rem:
      for (const Row& child : *child1)
        if (alg.rem_ok(ctx, child)) out.push_back(rem_row(alg, ctx, child));
      break;
    case NodeType::Join:
      for_each_join_pair(*child1, *child2, alg.key_len(), [&](size_t x, size_t y) {
        out.push_back(join_rows(alg, (*child1)[x], (*child2)[y]));
      });
      break;
  }
  canonicalize(out);
  return out;
}

Ttd run_dp(const LocalAlg& alg, const NiceTd& ntd, const Framework& f, int cred, int threads) {
  Ttd ttd;
  ttd.tables.resize(ntd.size());
  auto compute = [&](int t) {
    const auto& nd = ntd.nodes[t];
    const Table* c1 = nd.child1 >= 0 ? &ttd.tables[nd.child1] : nullptr;
    const Table* c2 = nd.child2 >= 0 ? &ttd.tables[nd.child2] : nullptr;
    ttd.tables[t] = compute_node_table(alg, ntd, t, f, cred, c1, c2);
  };

#ifdef _OPENMP
  if (threads > 1) {
    const int n = ntd.size();
    std::vector<int> parent(n, -1);
    std::vector<std::atomic<int>> pending(n);
    for (int t = 0; t < n; ++t) {
      pending[t].store(0, std::memory_order_relaxed);
      for (int c : ntd.children(t)) parent[c] = t;
    }
    for (int t = 0; t < n; ++t)
      pending[t].store(int(ntd.children(t).size()), std::memory_order_relaxed);

    std::vector<int> ready;
    std::mutex mu;
    for (int t : ntd.post_order())
      if (pending[t].load(std::memory_order_relaxed) == 0) ready.push_back(t);
    std::atomic<int> done{0};

#pragma omp parallel num_threads(threads)
    {
      for (;;) {
        int t = -1;
        {
          std::lock_guard<std::mutex> lock(mu);
          if (!ready.empty()) {
            t = ready.back();
            ready.pop_back();
          }
        }
        if (t < 0) {
          if (done.load(std::memory_order_acquire) == n) break;
          std::this_thread::yield();
          continue;
        }
        compute(t);
        int p = parent[t];
        if (p >= 0 && pending[p].fetch_sub(1, std::memory_order_acq_rel) == 1) {
          std::lock_guard<std::mutex> lock(mu);
          ready.push_back(p);
        }
        done.fetch_add(1, std::memory_order_release);
      }
    }
    return ttd;
  }
#else
  (void)threads;
#endif

  for (int t : ntd.post_order()) compute(t);
  return ttd;
}

Origins compute_origins(const LocalAlg& alg, const NiceTd& ntd, const Framework& f, int cred,
                        const std::vector<Table>& tables) {
  Origins org(ntd.size());
  for (int t : ntd.post_order()) {
    const auto& nd = ntd.nodes[t];
    const Table& table = tables[t];
    org[t].assign(table.size(), {});
    NodeCtx ctx = make_ctx(ntd, t, f, cred);
    switch (nd.type) {
      case NodeType::Leaf:
        break;
      case NodeType::Int: {
        const Table& ct = tables[nd.child1];
        std::vector<Row> rows;
        for (size_t v = 0; v < ct.size(); ++v) {
          rows.clear();
          alg.intro(ctx, ct[v], rows);
          for (const Row& r : rows) {
            int u = find_row(table, r);
            if (u < 0) throw internal_error("origin row missing from table");
            org[t][u].emplace_back(int(v), -1);
          }
        }
        break;
      }
      case NodeType::Rem: {
        const Table& ct = tables[nd.child1];
        for (size_t v = 0; v < ct.size(); ++v) {
          if (!alg.rem_ok(ctx, ct[v])) continue;
          int u = find_row(table, rem_row(alg, ctx, ct[v]));
          if (u < 0) throw internal_error("origin row missing from table");
          org[t][u].emplace_back(int(v), -1);
        }
        break;
      }
      case NodeType::Join: {
        const Table& l = tables[nd.child1];
        const Table& r = tables[nd.child2];
        for_each_join_pair(l, r, alg.key_len(), [&](size_t x, size_t y) {
          int u = find_row(table, join_rows(alg, l[x], r[y]));
          if (u < 0) throw internal_error("origin row missing from table");
          org[t][u].emplace_back(int(x), int(y));
        });
        break;
      }
    }
    for (auto& tuples : org[t]) {
      std::sort(tuples.begin(), tuples.end());
      tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    }
  }
  return org;
}

std::vector<OriginTuple> origins_of(const LocalAlg& alg, const NiceTd& ntd, int node,
                                    const Framework& f, int cred,
                                    const std::vector<Table>& tables, const Row& row) {
  int idx = find_row(tables[node], row);
  if (idx < 0) throw internal_error("row not in table");
  Origins org = compute_origins(alg, ntd, f, cred, tables);
  return org[node][idx];
}

PurgedTtd purge(const LocalAlg& alg, const NiceTd& ntd, const Framework& f, int cred,
                const Ttd& ttd) {
  Origins org = compute_origins(alg, ntd, f, cred, ttd.tables);
  const int n = ntd.size();
  std::vector<std::vector<char>> kept(n);
  for (int t = 0; t < n; ++t) kept[t].assign(ttd.tables[t].size(), 0);

  for (size_t u = 0; u < ttd.tables[ntd.root].size(); ++u)
    kept[ntd.root][u] = alg.accepts(ttd.tables[ntd.root][u]);

  std::vector<int> order = ntd.post_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int t = *it;
    const auto& nd = ntd.nodes[t];
    if (nd.child1 < 0) continue;
    for (size_t u = 0; u < ttd.tables[t].size(); ++u) {
      if (!kept[t][u]) continue;
      for (auto [v1, v2] : org[t][u]) {
        kept[nd.child1][v1] = 1;
        if (v2 >= 0) kept[nd.child2][v2] = 1;
      }
    }
  }

  PurgedTtd p;
  p.tables.resize(n);
  p.origins.resize(n);
  std::vector<std::vector<int>> remap(n);
  for (int t = 0; t < n; ++t) {
    remap[t].assign(ttd.tables[t].size(), -1);
    for (size_t u = 0; u < ttd.tables[t].size(); ++u)
      if (kept[t][u]) {
        remap[t][u] = int(p.tables[t].size());
        p.tables[t].push_back(ttd.tables[t][u]);
      }
  }
  for (int t = 0; t < n; ++t) {
    const auto& nd = ntd.nodes[t];
    p.origins[t].resize(p.tables[t].size());
    for (size_t u = 0; u < ttd.tables[t].size(); ++u) {
      if (!kept[t][u]) continue;
      auto& out = p.origins[t][remap[t][u]];
      for (auto [v1, v2] : org[t][u]) {
        int w1 = nd.child1 >= 0 ? remap[nd.child1][v1] : -1;
        int w2 = v2 >= 0 ? remap[nd.child2][v2] : -1;
        if (nd.child1 >= 0 && w1 < 0) continue;
        if (v2 >= 0 && w2 < 0) continue;
        out.emplace_back(w1, w2);
      }
    }
  }
  return p;
}

mpz_class count_extensions(const NiceTd& ntd, const PurgedTtd& purged) {
  std::vector<std::vector<mpz_class>> cnt(ntd.size());
  for (int t : ntd.post_order()) {
    const auto& nd = ntd.nodes[t];
    cnt[t].assign(purged.tables[t].size(), 0);
    for (size_t u = 0; u < purged.tables[t].size(); ++u) {
      if (nd.type == NodeType::Leaf) {
        cnt[t][u] = 1;
        continue;
      }
      mpz_class total = 0;
      for (auto [v1, v2] : purged.origins[t][u]) {
        if (v2 >= 0)
          total += cnt[nd.child1][v1] * cnt[nd.child2][v2];
        else
          total += cnt[nd.child1][v1];
      }
      cnt[t][u] = total;
    }
  }
  mpz_class result = 0;
  for (const auto& c : cnt[ntd.root]) result += c;
  return result;
}

std::vector<ArgSet> reconstruct_extensions(const NiceTd& ntd, const Framework& f,
                                           const PurgedTtd& purged) {
  std::vector<std::vector<std::vector<ArgSet>>> exts(ntd.size());
  for (int t : ntd.post_order()) {
    const auto& nd = ntd.nodes[t];
    exts[t].resize(purged.tables[t].size());
    for (size_t u = 0; u < purged.tables[t].size(); ++u) {
      std::vector<ArgSet>& acc = exts[t][u];
      switch (nd.type) {
        case NodeType::Leaf:
          acc.push_back(ArgSet(f.size()));
          break;
        case NodeType::Int: {
          bool has_arg = purged.tables[t][u].sets[0].test(nd.arg);
          for (auto [v1, v2] : purged.origins[t][u])
            for (const ArgSet& e : exts[nd.child1][v1])
              acc.push_back(has_arg ? e.plus(nd.arg) : e);
          break;
        }
        case NodeType::Rem:
          for (auto [v1, v2] : purged.origins[t][u])
            for (const ArgSet& e : exts[nd.child1][v1]) acc.push_back(e);
          break;
        case NodeType::Join:
          for (auto [v1, v2] : purged.origins[t][u])
            for (const ArgSet& e1 : exts[nd.child1][v1])
              for (const ArgSet& e2 : exts[nd.child2][v2]) acc.push_back(e1 | e2);
          break;
      }
      std::sort(acc.begin(), acc.end());
      acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    }
  }
  std::vector<ArgSet> all;
  for (const auto& rows : exts[ntd.root])
    for (const ArgSet& e : rows) all.push_back(e);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

void dump_trace(std::ostream& os, const NiceTd& ntd, const Framework& f,
                const std::vector<Table>& tables) {
  for (int t : ntd.post_order()) {
    const auto& nd = ntd.nodes[t];
    os << "node " << t << " type=" << to_string(nd.type);
    if (nd.arg >= 0) os << "(" << f.name(nd.arg) << ")";
    os << " bag=" << f.format_set(nd.bag) << " rows=" << tables[t].size() << "\n";
    for (const Row& r : tables[t]) {
      os << "  ";
      for (size_t k = 0; k < r.sets.size(); ++k) {
        if (k) os << " ";
        os << f.format_set(r.sets[k]);
      }
      if (!r.cws.empty()) {
        os << " cws[";
        for (size_t c = 0; c < r.cws.size(); ++c) {
          if (c) os << " ";
          for (size_t k = 0; k < r.cws[c].sets.size(); ++k) {
            if (k) os << "/";
            os << f.format_set(r.cws[c].sets[k]);
          }
          os << (r.cws[c].flag ? "!" : "");
        }
        os << "]";
      }
      os << "\n";
    }
  }
}

}  // namespace afc
