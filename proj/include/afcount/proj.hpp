#ifndef AFCOUNT_PROJ_HPP
#define AFCOUNT_PROJ_HPP

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "afcount/dp.hpp"

namespace afc {

// Equivalence classes of rows with equal extension part restricted to P, in
// first-appearance order of the class.
std::vector<std::vector<int>> buckets(const ArgSet& p, const Table& table);

// Per-bucket projection table: the intersection projected count ipmc(σ) for
// every non-empty σ within the bucket, indexed by the bucket-local bit mask
// of σ. `weights` is the equivalent support-class form (how many projected
// extensions are shared by exactly the rows in `mask`); both carry the same
// information and the batch evaluator uses whichever is cheaper.
struct ProjBucket {
  std::vector<int> rows;  // ν-row indices, ascending
  std::vector<mpz_class> ipmc;  // size 1 << rows.size(); entry 0 unused
  std::vector<mpz_class> pmc;   // same indexing (empty at leaves)
  std::vector<std::pair<uint64_t, mpz_class>> weights;
};

struct ProjNode {
  std::vector<ProjBucket> buckets;
  std::vector<int> bucket_of;  // per ν-row
  std::vector<int> local_idx;  // per ν-row
};

struct ProjOptions {
  // Hard cap on rows per bucket: each bucket stores 2^rows entries.
  int max_bucket_rows = 20;
  // Keep all node tables (tests); otherwise only what parents need is held.
  bool keep_tables = false;
};

struct ProjResult {
  std::vector<ProjNode> nodes;  // populated when keep_tables
  mpz_class count = 0;
};

// Third traversal: computes π(t) bottom-up over the purged TTD and returns
// the projected credulous count read off the root.
ProjResult run_proj(const NiceTd& ntd, const PurgedTtd& purged, const ArgSet& p,
                    const ProjOptions& opts = {});

// Stored-ipmc lookup: the value recorded for exactly this row set, 0 when no
// entry matches (in particular when the rows span buckets).
mpz_class sipmc(const ProjNode& node, const std::vector<int>& sigma);

// Literal alternating-sign sum over non-empty subsets of the origins of σ,
// looking child values up via sipmc. Requires kept tables.
mpz_class pmc_literal(const NiceTd& ntd, const PurgedTtd& purged, const ProjResult& pr, int node,
                      const std::vector<int>& sigma, int max_origins = 22);

// Literal recursion: 1 at leaves, |pmc + alternating ipmc over proper
// subsets| elsewhere. Requires kept tables.
mpz_class ipmc_literal(const NiceTd& ntd, const PurgedTtd& purged, const ProjResult& pr, int node,
                       const std::vector<int>& sigma, int max_origins = 22);

}  // namespace afc

#endif
