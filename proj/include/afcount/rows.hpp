#ifndef AFCOUNT_ROWS_HPP
#define AFCOUNT_ROWS_HPP

#include <algorithm>
#include <vector>

#include "afcount/argset.hpp"

namespace afc {

// Counter-witness: a row core tracked alongside a witness row, plus a flag
// that records whether strict superiority has been observed. The flag only
// ever goes from false to true along a traversal.
struct CwEntry {
  std::vector<ArgSet> sets;
  bool flag = false;

  bool operator==(const CwEntry& o) const { return flag == o.flag && sets == o.sets; }
  bool operator<(const CwEntry& o) const {
    if (sets != o.sets) return std::lexicographical_compare(sets.begin(), sets.end(),
                                                            o.sets.begin(), o.sets.end());
    return flag < o.flag;
  }
};

// One DP table row: a fixed number of bag-local argument sets (layout is per
// semantics; position 0 is always the extension part E(u)) and, for the
// subset-maximizing semantics, a set of counter-witnesses.
struct Row {
  std::vector<ArgSet> sets;
  std::vector<CwEntry> cws;

  const ArgSet& extension_part() const { return sets[0]; }

  void canonicalize_cws() {
    std::sort(cws.begin(), cws.end());
    cws.erase(std::unique(cws.begin(), cws.end()), cws.end());
  }

  bool operator==(const Row& o) const { return sets == o.sets && cws == o.cws; }
  bool operator<(const Row& o) const {
    if (sets != o.sets) return std::lexicographical_compare(sets.begin(), sets.end(),
                                                            o.sets.begin(), o.sets.end());
    return std::lexicographical_compare(cws.begin(), cws.end(), o.cws.begin(), o.cws.end());
  }
};

// Tables are sets of rows, kept sorted and duplicate-free.
using Table = std::vector<Row>;

inline void canonicalize(Table& t) {
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
}

}  // namespace afc

#endif
