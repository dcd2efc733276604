#include "afcount/proj.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "afcount/errors.hpp"

namespace afc {

std::vector<std::vector<int>> buckets(const ArgSet& p, const Table& table) {
  std::vector<std::vector<int>> out;
  std::map<ArgSet, int> index;
  for (size_t u = 0; u < table.size(); ++u) {
    ArgSet key = table[u].extension_part() & p;
    auto [it, fresh] = index.emplace(key, int(out.size()));
    if (fresh) out.emplace_back();
    out[it->second].push_back(int(u));
  }
  return out;
}

namespace {

int popcnt(uint64_t m) { return __builtin_popcountll(m); }

// pmc(σ) = Σ_{∅⊊φ⊆σ} (-1)^{|φ|-1} ipmc(φ); recover ipmc from a full pmc
// vector by subset Möbius inversion, taking the defining absolute value.
void ipmc_from_pmc(std::vector<mpz_class>& a, int n) {
  for (int b = 0; b < n; ++b)
    for (uint64_t m = 1; m < (uint64_t(1) << n); ++m)
      if (m >> b & 1) a[m] -= a[m ^ (uint64_t(1) << b)];
  for (uint64_t m = 1; m < (uint64_t(1) << n); ++m)
    if (a[m] < 0) a[m] = -a[m];
}

// Support-class weights: ipmc(σ) = Σ_{C ⊇ σ} w(C) inverted over supersets.
std::vector<std::pair<uint64_t, mpz_class>> weights_from_ipmc(const std::vector<mpz_class>& ipmc,
                                                              int n) {
  std::vector<mpz_class> b = ipmc;
  b[0] = 0;
  for (int bit = 0; bit < n; ++bit)
    for (uint64_t m = (uint64_t(1) << n); m-- > 0;)
      if (!(m >> bit & 1)) b[m] -= b[m | (uint64_t(1) << bit)];
  std::vector<std::pair<uint64_t, mpz_class>> w;
  for (uint64_t m = 1; m < (uint64_t(1) << n); ++m) {
    if (b[m] == 0) continue;
    if (b[m] < 0) throw internal_error("negative projection class weight");
    w.emplace_back(m, b[m]);
  }
  return w;
}

// Union counts over one child bucket: U(W) = |⋃_{v∈W} projections(v)|,
// obtained as the subset sum of signed ipmc values.
std::vector<mpz_class> union_counts(const ProjBucket& bucket) {
  const int n = int(bucket.rows.size());
  std::vector<mpz_class> u(size_t(1) << n);
  for (uint64_t m = 1; m < (uint64_t(1) << n); ++m)
    u[m] = (popcnt(m) & 1) ? bucket.ipmc[m] : -bucket.ipmc[m];
  for (int b = 0; b < n; ++b)
    for (uint64_t m = 1; m < (uint64_t(1) << n); ++m)
      if (m >> b & 1) u[m] += u[m ^ (uint64_t(1) << b)];
  return u;
}

struct NodeWork {
  const NiceTd& ntd;
  const PurgedTtd& purged;
  const ArgSet& p;
  const ProjOptions& opts;
  std::vector<ProjNode>& nodes;

  void check_cap(size_t rows, int t) const {
    if (int(rows) > opts.max_bucket_rows)
      throw internal_error("projection bucket at node " + std::to_string(t) + " has " +
                           std::to_string(rows) + " rows (cap " +
                           std::to_string(opts.max_bucket_rows) +
                           "); raise ProjOptions::max_bucket_rows");
  }

  // pmc vector for one bucket of a single-child node.
  std::vector<mpz_class> pmc_single(int t, const ProjBucket& bucket) {
    const int child = ntd.nodes[t].child1;
    const ProjNode& cn = nodes[child];
    const int n = int(bucket.rows.size());

    // per-row origin masks, grouped by the child bucket they fall into
    std::vector<int> touched;
    std::vector<std::vector<uint64_t>> rowmask;  // [touched-index][row]
    for (int i = 0; i < n; ++i) {
      for (auto [v1, v2] : purged.origins[t][bucket.rows[i]]) {
        int cb = cn.bucket_of[v1];
        size_t k = std::find(touched.begin(), touched.end(), cb) - touched.begin();
        if (k == touched.size()) {
          touched.push_back(cb);
          rowmask.emplace_back(n, 0);
        }
        rowmask[k][i] |= uint64_t(1) << cn.local_idx[v1];
      }
    }

    std::vector<mpz_class> pmc(size_t(1) << n);
    std::vector<std::vector<mpz_class>> u;
    std::vector<std::vector<uint64_t>> vmask(touched.size());
    for (size_t k = 0; k < touched.size(); ++k) {
      u.push_back(union_counts(cn.buckets[touched[k]]));
      vmask[k].assign(size_t(1) << n, 0);
    }
    for (uint64_t m = 1; m < (uint64_t(1) << n); ++m) {
      uint64_t low = m & -m;
      int lowidx = __builtin_ctzll(m);
      for (size_t k = 0; k < touched.size(); ++k) {
        vmask[k][m] = vmask[k][m ^ low] | rowmask[k][lowidx];
        pmc[m] += u[k][vmask[k][m]];
      }
    }
    return pmc;
  }

  // pmc vector for one bucket of a join node, evaluated over the support
  // classes of the two child buckets.
  std::vector<mpz_class> pmc_join(int t, const ProjBucket& bucket) {
    const int c1 = ntd.nodes[t].child1;
    const int c2 = ntd.nodes[t].child2;
    const ProjNode& n1 = nodes[c1];
    const ProjNode& n2 = nodes[c2];
    const int n = int(bucket.rows.size());

    int cb1 = -1, cb2 = -1;
    std::vector<std::vector<std::pair<int, int>>> pairs(n);
    for (int i = 0; i < n; ++i)
      for (auto [v1, v2] : purged.origins[t][bucket.rows[i]]) {
        if (cb1 < 0) cb1 = n1.bucket_of[v1];
        if (cb2 < 0) cb2 = n2.bucket_of[v2];
        if (n1.bucket_of[v1] != cb1 || n2.bucket_of[v2] != cb2)
          throw internal_error("join origins span projection buckets");
        pairs[i].emplace_back(n1.local_idx[v1], n2.local_idx[v2]);
      }

    const auto& w1 = n1.buckets[cb1].weights;
    const auto& w2 = n2.buckets[cb2].weights;
    const size_t nc1 = w1.size(), nc2 = w2.size();

    // classes of side 1 containing each left row
    size_t rows1 = n1.buckets[cb1].rows.size();
    std::vector<std::vector<int>> cls_of_left(rows1);
    for (size_t a = 0; a < nc1; ++a)
      for (size_t x = 0; x < rows1; ++x)
        if (w1[a].first >> x & 1) cls_of_left[x].push_back(int(a));

    std::vector<mpz_class> pmc(size_t(1) << n);
    std::vector<uint64_t> ymask(nc1);
    for (uint64_t m = 1; m < (uint64_t(1) << n); ++m) {
      std::fill(ymask.begin(), ymask.end(), 0);
      for (int i = 0; i < n; ++i) {
        if (!(m >> i & 1)) continue;
        for (auto [x, y] : pairs[i])
          for (int a : cls_of_left[x]) ymask[a] |= uint64_t(1) << y;
      }
      mpz_class total = 0;
      for (size_t a = 0; a < nc1; ++a) {
        if (!ymask[a]) continue;
        for (size_t b = 0; b < nc2; ++b)
          if (ymask[a] & w2[b].first) total += w1[a].second * w2[b].second;
      }
      pmc[m] = std::move(total);
    }
    return pmc;
  }

  void process(int t) {
    const Table& table = purged.tables[t];
    ProjNode& node = nodes[t];
    node.bucket_of.assign(table.size(), -1);
    node.local_idx.assign(table.size(), -1);
    auto groups = buckets(p, table);
    node.buckets.resize(groups.size());
    for (size_t b = 0; b < groups.size(); ++b) {
      node.buckets[b].rows = groups[b];
      for (size_t i = 0; i < groups[b].size(); ++i) {
        node.bucket_of[groups[b][i]] = int(b);
        node.local_idx[groups[b][i]] = int(i);
      }
    }
    for (auto& bucket : node.buckets) {
      check_cap(bucket.rows.size(), t);
      const int n = int(bucket.rows.size());
      if (ntd.nodes[t].type == NodeType::Leaf) {
        bucket.ipmc.assign(size_t(1) << n, 1);
        bucket.ipmc[0] = 0;
      } else {
        std::vector<mpz_class> pmc = ntd.nodes[t].type == NodeType::Join
                                         ? pmc_join(t, bucket)
                                         : pmc_single(t, bucket);
        bucket.pmc = pmc;
        ipmc_from_pmc(pmc, n);
        bucket.ipmc = std::move(pmc);
      }
      bucket.weights = weights_from_ipmc(bucket.ipmc, n);
    }
  }
};

}  // namespace

ProjResult run_proj(const NiceTd& ntd, const PurgedTtd& purged, const ArgSet& p,
                    const ProjOptions& opts) {
  ProjResult result;
  result.nodes.resize(ntd.size());
  NodeWork work{ntd, purged, p, opts, result.nodes};

  std::vector<int> order = ntd.post_order();
  for (int t : order) work.process(t);

  const Table& root = purged.tables[ntd.root];
  if (root.empty()) {
    result.count = 0;
  } else {
    // the root bag is empty, so the root table is a single bucket (and, with
    // purging done, a single row); its stored count is the final answer
    ProjNode& rn = result.nodes[ntd.root];
    if (rn.buckets.size() != 1)
      throw internal_error("root projection table is not a singleton bucket");
    const ProjBucket& b = rn.buckets[0];
    uint64_t full = (uint64_t(1) << b.rows.size()) - 1;
    result.count = b.pmc.empty() ? b.ipmc[full] : b.pmc[full];
  }

  if (!opts.keep_tables) result.nodes.clear();
  return result;
}

mpz_class sipmc(const ProjNode& node, const std::vector<int>& sigma) {
  if (sigma.empty()) return 0;
  int b = node.bucket_of[sigma[0]];
  uint64_t mask = 0;
  for (int v : sigma) {
    if (node.bucket_of[v] != b) return 0;  // spans buckets: nothing stored
    mask |= uint64_t(1) << node.local_idx[v];
  }
  return node.buckets[b].ipmc[mask];
}

namespace {

std::vector<int> mask_to_rows(const ProjBucket& bucket, uint64_t mask) {
  std::vector<int> rows;
  for (size_t i = 0; i < bucket.rows.size(); ++i)
    if (mask >> i & 1) rows.push_back(bucket.rows[i]);
  return rows;
}

mpz_class pmc_literal_masked(const NiceTd& ntd, const PurgedTtd& purged, const ProjResult& pr,
                             int node, const std::vector<int>& sigma, int max_origins) {
  // gather distinct origin tuples of σ
  std::vector<OriginTuple> tuples;
  for (int u : sigma)
    for (const auto& tp : purged.origins[node][u]) tuples.push_back(tp);
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  if (int(tuples.size()) > max_origins)
    throw internal_error("pmc: too many origin tuples for the literal sum");

  const auto& nd = ntd.nodes[node];
  mpz_class total = 0;
  for (uint64_t o = 1; o < (uint64_t(1) << tuples.size()); ++o) {
    std::vector<int> side1, side2;
    for (size_t i = 0; i < tuples.size(); ++i)
      if (o >> i & 1) {
        side1.push_back(tuples[i].first);
        if (tuples[i].second >= 0) side2.push_back(tuples[i].second);
      }
    auto dedup = [](std::vector<int>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedup(side1);
    dedup(side2);
    mpz_class term = sipmc(pr.nodes[nd.child1], side1);
    if (!side2.empty()) term *= sipmc(pr.nodes[nd.child2], side2);
    if (popcnt(o) & 1)
      total += term;
    else
      total -= term;
  }
  return total;
}

}  // namespace

mpz_class pmc_literal(const NiceTd& ntd, const PurgedTtd& purged, const ProjResult& pr, int node,
                      const std::vector<int>& sigma, int max_origins) {
  if (pr.nodes.empty()) throw internal_error("pmc_literal requires kept projection tables");
  return pmc_literal_masked(ntd, purged, pr, node, sigma, max_origins);
}

mpz_class ipmc_literal(const NiceTd& ntd, const PurgedTtd& purged, const ProjResult& pr, int node,
                       const std::vector<int>& sigma, int max_origins) {
  if (pr.nodes.empty()) throw internal_error("ipmc_literal requires kept projection tables");
  if (ntd.nodes[node].type == NodeType::Leaf) return 1;

  const ProjNode& pn = pr.nodes[node];
  int b = pn.bucket_of.at(sigma.at(0));
  uint64_t mask = 0;
  for (int v : sigma) {
    if (pn.bucket_of[v] != b) throw internal_error("ipmc: rows span buckets");
    mask |= uint64_t(1) << pn.local_idx[v];
  }
  const ProjBucket& bucket = pn.buckets[b];

  std::unordered_map<uint64_t, mpz_class> memo;
  auto rec = [&](auto&& self, uint64_t m) -> mpz_class {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    mpz_class v = pmc_literal_masked(ntd, purged, pr, node, mask_to_rows(bucket, m), max_origins);
    for (uint64_t phi = (m - 1) & m; phi; phi = (phi - 1) & m)
      if (phi != m) {
        if (popcnt(phi) & 1)
          v -= self(self, phi);
        else
          v += self(self, phi);
      }
    if (v < 0) v = -v;
    return memo.emplace(m, std::move(v)).first->second;
  };
  return rec(rec, mask);
}

}  // namespace afc
