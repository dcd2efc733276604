#ifndef AFCOUNT_LOCAL_ALG_HPP
#define AFCOUNT_LOCAL_ALG_HPP

#include <memory>
#include <vector>

#include "afcount/af.hpp"
#include "afcount/rows.hpp"
#include "afcount/td.hpp"

namespace afc {

// Bag-local view handed to a local algorithm. Handlers may only look at the
// node type, the bag, the bag-framework and the child tables.
struct NodeCtx {
  const Framework* f = nullptr;
  ArgSet bag;    // bag of the current node
  NodeType type = NodeType::Leaf;
  int arg = -1;  // introduced/removed argument
  int cred = -1; // credulous argument, -1 when counting plain extensions

  // Bag arguments attacked by J (within the bag-framework).
  ArgSet att_by(const ArgSet& j) const {
    ArgSet r(f->size());
    j.for_each([&](int a) { r |= f->targets_of(a); });
    return r & bag;
  }
  // Bag arguments attacking some member of J.
  ArgSet att_into(const ArgSet& j) const {
    ArgSet r(f->size());
    j.for_each([&](int a) { r |= f->attackers_of(a); });
    return r & bag;
  }
  bool conflict_free(const ArgSet& j) const {
    bool ok = true;
    j.for_each([&](int a) {
      if (f->targets_of(a).intersects(j)) ok = false;
    });
    return ok;
  }
  // J ∩ {c} = bag ∩ {c}: rows must commit to the credulous argument.
  bool cred_ok(const ArgSet& j) const {
    if (cred < 0 || !bag.test(cred)) return true;
    return j.test(cred);
  }
};

// Per-semantics node handler. The generic engine drives leaf/int/rem/join;
// rem and join are shared (drop the removed argument everywhere; match rows
// on the key prefix and union the remaining components), so a semantics only
// supplies the introduce step, the removal guards and root acceptance.
class LocalAlg {
public:
  virtual ~LocalAlg() = default;

  SemanticsKind kind() const { return kind_; }
  int arity() const { return arity_; }      // number of sets per row
  int key_len() const { return key_len_; }  // leading components matched at joins
  bool has_cws() const { return has_cws_; }

  Row leaf_row(int universe) const {
    Row r;
    r.sets.assign(arity_, ArgSet(universe));
    return r;
  }

  // Emits all rows derived from `child` when `ctx.arg` is introduced.
  virtual void intro(const NodeCtx& ctx, const Row& child, std::vector<Row>& out) const = 0;

  // May the removed argument leave the bag for this row?
  virtual bool rem_ok(const NodeCtx& ctx, const Row& row) const = 0;

  // May this counter-witness survive the removal? (own consistency plus
  // dominance over the witness row it accompanies)
  virtual bool cw_rem_ok(const NodeCtx& ctx, const Row& witness, const CwEntry& cw) const {
    (void)ctx; (void)witness; (void)cw;
    return true;
  }

  // Root acceptance; counter-witness semantics reject rows with a flagged cw.
  virtual bool accepts(const Row& row) const {
    if (!has_cws_) return true;
    for (const auto& c : row.cws)
      if (c.flag) return false;
    return true;
  }

protected:
  LocalAlg(SemanticsKind k, int arity, int key_len, bool cws)
      : kind_(k), arity_(arity), key_len_(key_len), has_cws_(cws) {}

  SemanticsKind kind_;
  int arity_;
  int key_len_;
  bool has_cws_;
};

std::unique_ptr<LocalAlg> make_local_alg(SemanticsKind kind);

}  // namespace afc

#endif
