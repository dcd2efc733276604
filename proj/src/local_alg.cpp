#include "afcount/local_alg.hpp"

namespace afc {

namespace {

bool strictly_contains(const ArgSet& big, const ArgSet& small) {
  return small.subset_of(big) && small != big;
}

// ---- conflict-free ---------------------------------------------------------
// Row layout: [I]

class ConfAlg final : public LocalAlg {
public:
  ConfAlg() : LocalAlg(SemanticsKind::ConflictFree, 1, 1, false) {}

  void intro(const NodeCtx& ctx, const Row& child, std::vector<Row>& out) const override {
    const ArgSet& i = child.sets[0];
    for (ArgSet j : {i, i.plus(ctx.arg)}) {
      if (!ctx.conflict_free(j) || !ctx.cred_ok(j)) continue;
      out.push_back(Row{{j}, {}});
    }
  }

  bool rem_ok(const NodeCtx&, const Row&) const override { return true; }
};

// ---- stable -----------------------------------------------------------------
// Row layout: [I, D] with D the bag arguments defeated by the extension part.

class StabAlg final : public LocalAlg {
public:
  StabAlg() : LocalAlg(SemanticsKind::Stable, 2, 1, false) {}

  void intro(const NodeCtx& ctx, const Row& child, std::vector<Row>& out) const override {
    const ArgSet& i = child.sets[0];
    for (ArgSet j : {i, i.plus(ctx.arg)}) {
      if (!ctx.conflict_free(j) || !ctx.cred_ok(j)) continue;
      out.push_back(Row{{j, child.sets[1] | ctx.att_by(j)}, {}});
    }
  }

  // every argument must end up in the extension or defeated
  bool rem_ok(const NodeCtx& ctx, const Row& row) const override {
    return row.sets[0].test(ctx.arg) || row.sets[1].test(ctx.arg);
  }
};

// ---- admissible -------------------------------------------------------------
// Row layout: [I, O, D]; O holds bag attackers of I, D the defeated ones.

class AdmAlg final : public LocalAlg {
public:
  AdmAlg() : LocalAlg(SemanticsKind::Admissible, 3, 1, false) {}

  void intro(const NodeCtx& ctx, const Row& child, std::vector<Row>& out) const override {
    const ArgSet& i = child.sets[0];
    for (ArgSet j : {i, i.plus(ctx.arg)}) {
      if (!ctx.conflict_free(j) || !ctx.cred_ok(j)) continue;
      out.push_back(Row{{j, child.sets[1] | ctx.att_into(j), child.sets[2] | ctx.att_by(j)}, {}});
    }
  }

  // an attacker may only leave the bag once it has been defeated
  bool rem_ok(const NodeCtx& ctx, const Row& row) const override {
    return !(row.sets[1].test(ctx.arg) && !row.sets[2].test(ctx.arg));
  }
};

// ---- complete ---------------------------------------------------------------
// Row layout: [I, DC, OC, D, O]. Every bag argument is guessed into exactly
// one of I (extension), DC (to be defeated) or OC (out of the extension and
// unattacked by it); D/O hold the already proven members of DC/OC. A defeat
// is proven by an attack from I, out-ness by an attacker inside OC (such an
// attacker can never be countered, so the argument is not defended).

class CompAlg final : public LocalAlg {
public:
  CompAlg() : LocalAlg(SemanticsKind::Complete, 5, 3, false) {}

  void intro(const NodeCtx& ctx, const Row& child, std::vector<Row>& out) const override {
    for (int g = 0; g < 3; ++g) {
      ArgSet j = g == 0 ? child.sets[0].plus(ctx.arg) : child.sets[0];
      ArgSet dc = g == 1 ? child.sets[1].plus(ctx.arg) : child.sets[1];
      ArgSet oc = g == 2 ? child.sets[2].plus(ctx.arg) : child.sets[2];
      if (!ctx.conflict_free(j) || !ctx.cred_ok(j)) continue;
      ArgSet hit = ctx.att_by(j);
      if (hit.intersects(oc)) continue;           // J must not defeat an "out" argument
      if (ctx.att_into(j).intersects(oc)) continue;  // an "out" argument must not attack J
      ArgSet d = child.sets[3] | (dc & hit);
      ArgSet o = child.sets[4] | (oc & ctx.att_by(oc));
      out.push_back(Row{{j, dc, oc, d, o}, {}});
    }
  }

  // status of the removed argument must be resolved
  bool rem_ok(const NodeCtx& ctx, const Row& row) const override {
    return row.sets[0].test(ctx.arg) || row.sets[3].test(ctx.arg) || row.sets[4].test(ctx.arg);
  }
};

// ---- witness/counter-witness machinery --------------------------------------

// Guess outcome for semantics that track a guessed range: the new extension
// part and the new set of range candidates.
struct RangeGuess {
  ArgSet j, ac;
};

// a may join the extension or the range candidates (or neither); the
// extension stays conflict-free and everything it attacks must be a
// candidate.
template <typename F>
void range_guesses(const NodeCtx& ctx, const ArgSet& i, const ArgSet& ac, F f) {
  for (int take_j = 0; take_j < 2; ++take_j) {
    ArgSet j = take_j ? i.plus(ctx.arg) : i;
    if (!ctx.conflict_free(j)) continue;
    for (int take_ac = 0; take_ac < 2; ++take_ac) {
      if (take_j && take_ac) continue;  // J and AC stay disjoint
      ArgSet nac = take_ac ? ac.plus(ctx.arg) : ac;
      if (!ctx.att_by(j).subset_of(nac)) continue;
      f(RangeGuess{j, nac});
    }
  }
}

// ---- stage ------------------------------------------------------------------
// Row layout: [I, AC, A]. AC are the bag arguments guessed to be attacked by
// the final extension, A the ones already attacked. Counter-witnesses run the
// same bookkeeping over all conflict-free sets; their flag is raised when the
// guessed range I ∪ AC of the witness becomes a strict subset of theirs.

class StagAlg final : public LocalAlg {
public:
  StagAlg() : LocalAlg(SemanticsKind::Stage, 3, 2, true) {}

  void intro(const NodeCtx& ctx, const Row& child, std::vector<Row>& out) const override {
    range_guesses(ctx, child.sets[0], child.sets[1], [&](const RangeGuess& w) {
      if (!ctx.cred_ok(w.j)) return;
      Row r;
      r.sets = {w.j, w.ac, child.sets[2] | ctx.att_by(w.j)};
      ArgSet wrange = w.j | w.ac;
      auto extend_cw = [&](const std::vector<ArgSet>& cs, bool flag) {
        range_guesses(ctx, cs[0], cs[1], [&](const RangeGuess& c) {
          CwEntry e;
          e.sets = {c.j, c.ac, cs[2] | ctx.att_by(c.j)};
          e.flag = flag || strictly_contains(c.j | c.ac, wrange);
          r.cws.push_back(std::move(e));
        });
      };
      for (const auto& cw : child.cws) extend_cw(cw.sets, cw.flag);
      extend_cw(child.sets, false);  // the witness seeds its own pool
      r.canonicalize_cws();
      out.push_back(std::move(r));
    });
  }

  // a range candidate must have been attacked by the time it leaves
  bool rem_ok(const NodeCtx& ctx, const Row& row) const override {
    return !(row.sets[1].test(ctx.arg) && !row.sets[2].test(ctx.arg));
  }

  bool cw_rem_ok(const NodeCtx& ctx, const Row& witness, const CwEntry& cw) const override {
    int a = ctx.arg;
    if (cw.sets[1].test(a) && !cw.sets[2].test(a)) return false;
    bool in_witness_range = witness.sets[0].test(a) || witness.sets[1].test(a);
    if (in_witness_range && !(cw.sets[0].test(a) || cw.sets[1].test(a))) return false;
    return true;
  }
};

// ---- preferred --------------------------------------------------------------
// Row layout: [I, O, D] as for admissible; counter-witnesses track admissible
// supersets, flagged when their extension part strictly contains the
// witness's.

class PrefAlg final : public LocalAlg {
public:
  PrefAlg() : LocalAlg(SemanticsKind::Preferred, 3, 1, true) {}

  void intro(const NodeCtx& ctx, const Row& child, std::vector<Row>& out) const override {
    const ArgSet& i = child.sets[0];
    for (ArgSet j : {i, i.plus(ctx.arg)}) {
      if (!ctx.conflict_free(j) || !ctx.cred_ok(j)) continue;
      Row r;
      r.sets = {j, child.sets[1] | ctx.att_into(j), child.sets[2] | ctx.att_by(j)};
      auto extend_cw = [&](const std::vector<ArgSet>& cs, bool flag) {
        for (ArgSet jc : {cs[0], cs[0].plus(ctx.arg)}) {
          if (!ctx.conflict_free(jc)) continue;
          CwEntry e;
          e.sets = {jc, cs[1] | ctx.att_into(jc), cs[2] | ctx.att_by(jc)};
          e.flag = flag || strictly_contains(jc, j);
          r.cws.push_back(std::move(e));
        }
      };
      for (const auto& cw : child.cws) extend_cw(cw.sets, cw.flag);
      extend_cw(child.sets, false);
      r.canonicalize_cws();
      out.push_back(std::move(r));
    }
  }

  bool rem_ok(const NodeCtx& ctx, const Row& row) const override {
    return !(row.sets[1].test(ctx.arg) && !row.sets[2].test(ctx.arg));
  }

  bool cw_rem_ok(const NodeCtx& ctx, const Row& witness, const CwEntry& cw) const override {
    int a = ctx.arg;
    if (cw.sets[1].test(a) && !cw.sets[2].test(a)) return false;  // cw must stay admissible
    if (witness.sets[0].test(a) && !cw.sets[0].test(a)) return false;
    return true;
  }
};

// ---- semi-stable ------------------------------------------------------------
// Row layout: [I, AC, O, D]: the admissible core of ADM plus the guessed
// attacked part AC of the range; D doubles as the proof that an AC member was
// really attacked. Counter-witnesses range over admissible sets and are
// flagged on strict range supersets.

class SemiAlg final : public LocalAlg {
public:
  SemiAlg() : LocalAlg(SemanticsKind::SemiStable, 4, 2, true) {}

  void intro(const NodeCtx& ctx, const Row& child, std::vector<Row>& out) const override {
    range_guesses(ctx, child.sets[0], child.sets[1], [&](const RangeGuess& w) {
      if (!ctx.cred_ok(w.j)) return;
      Row r;
      r.sets = {w.j, w.ac, child.sets[2] | ctx.att_into(w.j), child.sets[3] | ctx.att_by(w.j)};
      ArgSet wrange = w.j | w.ac;
      auto extend_cw = [&](const std::vector<ArgSet>& cs, bool flag) {
        range_guesses(ctx, cs[0], cs[1], [&](const RangeGuess& c) {
          CwEntry e;
          e.sets = {c.j, c.ac, cs[2] | ctx.att_into(c.j), cs[3] | ctx.att_by(c.j)};
          e.flag = flag || strictly_contains(c.j | c.ac, wrange);
          r.cws.push_back(std::move(e));
        });
      };
      for (const auto& cw : child.cws) extend_cw(cw.sets, cw.flag);
      extend_cw(child.sets, false);
      r.canonicalize_cws();
      out.push_back(std::move(r));
    });
  }

  bool rem_ok(const NodeCtx& ctx, const Row& row) const override {
    int a = ctx.arg;
    if (row.sets[2].test(a) && !row.sets[3].test(a)) return false;  // undefeated attacker
    if (row.sets[1].test(a) && !row.sets[3].test(a)) return false;  // unproven range candidate
    return true;
  }

  bool cw_rem_ok(const NodeCtx& ctx, const Row& witness, const CwEntry& cw) const override {
    int a = ctx.arg;
    if (cw.sets[2].test(a) && !cw.sets[3].test(a)) return false;
    if (cw.sets[1].test(a) && !cw.sets[3].test(a)) return false;
    bool in_witness_range = witness.sets[0].test(a) || witness.sets[1].test(a);
    if (in_witness_range && !(cw.sets[0].test(a) || cw.sets[1].test(a))) return false;
    return true;
  }
};

}  // namespace

std::unique_ptr<LocalAlg> make_local_alg(SemanticsKind kind) {
  switch (kind) {
    case SemanticsKind::ConflictFree: return std::make_unique<ConfAlg>();
    case SemanticsKind::Admissible: return std::make_unique<AdmAlg>();
    case SemanticsKind::Complete: return std::make_unique<CompAlg>();
    case SemanticsKind::Preferred: return std::make_unique<PrefAlg>();
    case SemanticsKind::SemiStable: return std::make_unique<SemiAlg>();
    case SemanticsKind::Stable: return std::make_unique<StabAlg>();
    case SemanticsKind::Stage: return std::make_unique<StagAlg>();
  }
  return nullptr;
}

}  // namespace afc
