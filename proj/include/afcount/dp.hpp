#ifndef AFCOUNT_DP_HPP
#define AFCOUNT_DP_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <utility>
#include <vector>

#include "afcount/local_alg.hpp"

namespace afc {

// Tabled tree decomposition: one table per nice-TD node, indexed by node id.
struct Ttd {
  std::vector<Table> tables;
};

// Origin tuples per node and row: the child-row combinations the handler maps
// onto this row. Second component is -1 for single-child nodes; leaf rows
// have the single empty tuple, represented by an empty tuple list.
using OriginTuple = std::pair<int, int>;
using Origins = std::vector<std::vector<std::vector<OriginTuple>>>;

// Purged TTD (the ν tables) together with origins remapped to ν indices.
struct PurgedTtd {
  std::vector<Table> tables;
  Origins origins;
};

// Table for one node from the child tables, per the local algorithm.
Table compute_node_table(const LocalAlg& alg, const NiceTd& ntd, int node, const Framework& f,
                         int cred, const Table* child1, const Table* child2);

// Post-order DP pass; `threads` > 1 processes independent subtrees
// concurrently (identical tables either way).
Ttd run_dp(const LocalAlg& alg, const NiceTd& ntd, const Framework& f, int cred = -1,
           int threads = 1);

// Origin tuples of every row of every node, by re-running the handler on the
// child rows.
Origins compute_origins(const LocalAlg& alg, const NiceTd& ntd, const Framework& f, int cred,
                        const std::vector<Table>& tables);

// Origins of a single row (spec-level operation; wraps compute on one node).
std::vector<OriginTuple> origins_of(const LocalAlg& alg, const NiceTd& ntd, int node,
                                    const Framework& f, int cred,
                                    const std::vector<Table>& tables, const Row& row);

// Keep root rows passing root acceptance and every row reachable from a kept
// row through origin tuples.
PurgedTtd purge(const LocalAlg& alg, const NiceTd& ntd, const Framework& f, int cred,
                const Ttd& ttd);

// Number of extensions traced by the purged TTD (with the credulous filter
// the DP ran under, if any): counter 1 at leaves, sums over origin tuples,
// products across join children.
mpz_class count_extensions(const NiceTd& ntd, const PurgedTtd& purged);

// All extensions traced by the purged TTD, reconstructed through origin
// chains. Exponential in the number of extensions; testing helper.
std::vector<ArgSet> reconstruct_extensions(const NiceTd& ntd, const Framework& f,
                                           const PurgedTtd& purged);

// One text block per node: type, bag, rows.
void dump_trace(std::ostream& os, const NiceTd& ntd, const Framework& f,
                const std::vector<Table>& tables);

}  // namespace afc

#endif
