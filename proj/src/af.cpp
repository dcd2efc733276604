#include "afcount/af.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "afcount/errors.hpp"

namespace afc {

const char* to_string(SemanticsKind k) {
  switch (k) {
    case SemanticsKind::ConflictFree: return "conflict-free";
    case SemanticsKind::Admissible: return "admissible";
    case SemanticsKind::Complete: return "complete";
    case SemanticsKind::Preferred: return "preferred";
    case SemanticsKind::SemiStable: return "semi-stable";
    case SemanticsKind::Stable: return "stable";
    case SemanticsKind::Stage: return "stage";
  }
  return "?";
}

SemanticsKind semantics_from_string(const std::string& name) {
  for (SemanticsKind k : all_semantics())
    if (name == to_string(k)) return k;
  // a few common aliases
  if (name == "cf") return SemanticsKind::ConflictFree;
  if (name == "adm") return SemanticsKind::Admissible;
  if (name == "com" || name == "comp") return SemanticsKind::Complete;
  if (name == "prf" || name == "pref") return SemanticsKind::Preferred;
  if (name == "sst" || name == "semi") return SemanticsKind::SemiStable;
  if (name == "stb" || name == "stab") return SemanticsKind::Stable;
  if (name == "stg") return SemanticsKind::Stage;
  throw usage_error("unknown semantics: " + name);
}

const std::vector<SemanticsKind>& all_semantics() {
  static const std::vector<SemanticsKind> k = {
      SemanticsKind::ConflictFree, SemanticsKind::Admissible, SemanticsKind::Complete,
      SemanticsKind::Preferred,    SemanticsKind::SemiStable, SemanticsKind::Stable,
      SemanticsKind::Stage,
  };
  return k;
}

Framework::Framework(std::vector<std::string> names, std::vector<std::pair<int, int>> attacks)
    : names_(std::move(names)), attacks_(std::move(attacks)) {
  if (names_.empty()) throw internal_error("framework must have at least one argument");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw internal_error("empty argument name");
    if (!seen.insert(n).second) throw internal_error("duplicate argument name: " + n);
  }
  const int n = size();
  std::sort(attacks_.begin(), attacks_.end());
  attacks_.erase(std::unique(attacks_.begin(), attacks_.end()), attacks_.end());
  out_.assign(n, ArgSet(n));
  in_.assign(n, ArgSet(n));
  for (auto [a, b] : attacks_) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw internal_error("attack endpoint out of range");
    out_[a].set(b);
    in_[b].set(a);
  }
}

int Framework::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

ArgSet Framework::full_set() const {
  ArgSet s(size());
  for (int i = 0; i < size(); ++i) s.set(i);
  return s;
}

ArgSet Framework::set_of_names(const std::vector<std::string>& names) const {
  ArgSet s(size());
  for (const auto& n : names) {
    int i = index_of(n);
    if (i < 0) throw usage_error("unknown argument: " + n);
    s.set(i);
  }
  return s;
}

std::string Framework::format_set(const ArgSet& s) const {
  std::string r = "{";
  bool first = true;
  s.for_each([&](int i) {
    if (!first) r += ",";
    r += names_[i];
    first = false;
  });
  return r + "}";
}

ArgSet attackers_into(const Framework& f, const ArgSet& s, const ArgSet& t) {
  ArgSet r(f.size());
  s.for_each([&](int a) {
    if (f.targets_of(a).intersects(t)) r.set(a);
  });
  return r;
}

ArgSet attacked_from(const Framework& f, const ArgSet& s, const ArgSet& t) {
  ArgSet r(f.size());
  s.for_each([&](int a) {
    if (f.attackers_of(a).intersects(t)) r.set(a);
  });
  return r;
}

ArgSet range_of(const Framework& f, const ArgSet& s) {
  ArgSet r = s;
  s.for_each([&](int a) { r |= f.targets_of(a); });
  return r;
}

ArgSet defended_set(const Framework& f, const ArgSet& s) {
  ArgSet attacked(f.size());
  s.for_each([&](int a) { attacked |= f.targets_of(a); });
  ArgSet r(f.size());
  for (int a = 0; a < f.size(); ++a)
    if (f.attackers_of(a).subset_of(attacked)) r.set(a);
  return r;
}

bool is_conflict_free(const Framework& f, const ArgSet& s) {
  bool ok = true;
  s.for_each([&](int a) {
    if (f.targets_of(a).intersects(s)) ok = false;
  });
  return ok;
}

bool is_admissible(const Framework& f, const ArgSet& s) {
  return is_conflict_free(f, s) && s.subset_of(defended_set(f, s));
}

namespace {

// Enumerates all subsets of A; only usable at oracle scale.
template <typename Pred>
bool exists_subset(const Framework& f, Pred pred) {
  const int n = f.size();
  const uint64_t lim = uint64_t(1) << n;
  for (uint64_t m = 0; m < lim; ++m) {
    ArgSet s(n);
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1) s.set(i);
    if (pred(s)) return true;
  }
  return false;
}

void check_cap(const Framework& f, int cap) {
  if (f.size() > cap)
    throw internal_error("framework exceeds the quantified-semantics cap (" +
                         std::to_string(f.size()) + " > " + std::to_string(cap) + ")");
}

}  // namespace

bool is_extension(const Framework& f, const ArgSet& s, SemanticsKind kind, int cap) {
  switch (kind) {
    case SemanticsKind::ConflictFree:
      return is_conflict_free(f, s);
    case SemanticsKind::Admissible:
      return is_admissible(f, s);
    case SemanticsKind::Complete:
      return is_admissible(f, s) && defended_set(f, s) == s;
    case SemanticsKind::Stable: {
      if (!is_conflict_free(f, s)) return false;
      return range_of(f, s) == f.full_set();
    }
    case SemanticsKind::Preferred: {
      check_cap(f, cap);
      if (!is_admissible(f, s)) return false;
      return !exists_subset(f, [&](const ArgSet& t) {
        return s.subset_of(t) && t != s && is_admissible(f, t);
      });
    }
    case SemanticsKind::SemiStable: {
      check_cap(f, cap);
      if (!is_admissible(f, s)) return false;
      ArgSet rs = range_of(f, s);
      return !exists_subset(f, [&](const ArgSet& t) {
        if (!is_admissible(f, t)) return false;
        ArgSet rt = range_of(f, t);
        return rs.subset_of(rt) && rt != rs;
      });
    }
    case SemanticsKind::Stage: {
      check_cap(f, cap);
      if (!is_conflict_free(f, s)) return false;
      ArgSet rs = range_of(f, s);
      return !exists_subset(f, [&](const ArgSet& t) {
        if (!is_conflict_free(f, t)) return false;
        ArgSet rt = range_of(f, t);
        return rs.subset_of(rt) && rt != rs;
      });
    }
  }
  return false;
}

}  // namespace afc
