#ifndef AFCOUNT_ORACLE_HPP
#define AFCOUNT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "afcount/af.hpp"

namespace afc {

// Brute-force enumeration used as ground truth for the DP engine. Everything
// here is exponential by design and guarded by `cap`.
namespace oracle {

struct OracleResult {
  std::vector<ArgSet> extensions;  // extensions containing the queried argument
  uint64_t count = 0;              // = extensions.size()
  std::optional<uint64_t> projected_count;  // distinct P-restrictions
};

// Bundled query: extensions of `kind` containing `arg` (all of them when
// arg = -1), optionally with the number of distinct restrictions to `p`.
OracleResult query(const Framework& f, SemanticsKind kind, int arg = -1,
                   const std::optional<ArgSet>& p = std::nullopt, int cap = 25);

// All extensions of the given semantics, in bit-mask order.
std::vector<ArgSet> enumerate(const Framework& f, SemanticsKind kind, int cap = 25);

uint64_t count_extensions(const Framework& f, SemanticsKind kind, int cap = 25);

// Number of extensions containing `arg`.
uint64_t count_credulous(const Framework& f, SemanticsKind kind, int arg, int cap = 25);

// Number of distinct sets S ∩ P over extensions S containing `arg`.
// Pass arg = -1 to drop the containment requirement.
uint64_t count_projected_credulous(const Framework& f, SemanticsKind kind, int arg,
                                   const ArgSet& p, int cap = 25);

// True iff every extension contains `arg` (vacuously true when none exist).
bool decide_skeptical(const Framework& f, SemanticsKind kind, int arg, int cap = 25);

}  // namespace oracle
}  // namespace afc

#endif
