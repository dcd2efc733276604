#include "afcount/oracle.hpp"

#include <unordered_set>

#include "afcount/errors.hpp"

namespace afc {
namespace oracle {

namespace {

void check_cap(const Framework& f, int cap) {
  if (f.size() > cap)
    throw internal_error("oracle cap exceeded: " + std::to_string(f.size()) +
                         " arguments > " + std::to_string(cap));
}

std::vector<ArgSet> all_subsets_with(const Framework& f, bool (*pred)(const Framework&, const ArgSet&)) {
  const int n = f.size();
  std::vector<ArgSet> r;
  const uint64_t lim = uint64_t(1) << n;
  for (uint64_t m = 0; m < lim; ++m) {
    ArgSet s(n);
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1) s.set(i);
    if (pred(f, s)) r.push_back(s);
  }
  return r;
}

// Keeps the sets whose image under `measure` is subset-maximal within `sets`.
std::vector<ArgSet> maximal_by(const Framework& f, const std::vector<ArgSet>& sets,
                               ArgSet (*measure)(const Framework&, const ArgSet&)) {
  std::vector<ArgSet> images;
  images.reserve(sets.size());
  for (const auto& s : sets) images.push_back(measure(f, s));
  std::vector<ArgSet> r;
  for (size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < sets.size() && !dominated; ++j)
      if (j != i && images[i].subset_of(images[j]) && images[j] != images[i]) dominated = true;
    if (!dominated) r.push_back(sets[i]);
  }
  return r;
}

ArgSet identity_measure(const Framework&, const ArgSet& s) { return s; }

}  // namespace

OracleResult query(const Framework& f, SemanticsKind kind, int arg,
                   const std::optional<ArgSet>& p, int cap) {
  OracleResult r;
  for (const auto& s : enumerate(f, kind, cap))
    if (arg < 0 || s.test(arg)) r.extensions.push_back(s);
  r.count = r.extensions.size();
  if (p) {
    std::unordered_set<ArgSet> projections;
    for (const auto& s : r.extensions) projections.insert(s & *p);
    r.projected_count = projections.size();
  }
  return r;
}

std::vector<ArgSet> enumerate(const Framework& f, SemanticsKind kind, int cap) {
  check_cap(f, cap);
  switch (kind) {
    case SemanticsKind::ConflictFree:
      return all_subsets_with(f, &is_conflict_free);
    case SemanticsKind::Admissible:
      return all_subsets_with(f, &is_admissible);
    case SemanticsKind::Complete:
      return all_subsets_with(f, [](const Framework& g, const ArgSet& s) {
        return is_admissible(g, s) && defended_set(g, s) == s;
      });
    case SemanticsKind::Stable:
      return all_subsets_with(f, [](const Framework& g, const ArgSet& s) {
        return is_conflict_free(g, s) && range_of(g, s) == g.full_set();
      });
    case SemanticsKind::Preferred:
      return maximal_by(f, all_subsets_with(f, &is_admissible), &identity_measure);
    case SemanticsKind::SemiStable:
      return maximal_by(f, all_subsets_with(f, &is_admissible), &range_of);
    case SemanticsKind::Stage:
      return maximal_by(f, all_subsets_with(f, &is_conflict_free), &range_of);
  }
  return {};
}

uint64_t count_extensions(const Framework& f, SemanticsKind kind, int cap) {
  return enumerate(f, kind, cap).size();
}

uint64_t count_credulous(const Framework& f, SemanticsKind kind, int arg, int cap) {
  if (arg < 0 || arg >= f.size()) throw usage_error("unknown argument index");
  uint64_t c = 0;
  for (const auto& s : enumerate(f, kind, cap))
    if (s.test(arg)) ++c;
  return c;
}

uint64_t count_projected_credulous(const Framework& f, SemanticsKind kind, int arg,
                                   const ArgSet& p, int cap) {
  if (arg >= f.size()) throw usage_error("unknown argument index");
  std::unordered_set<ArgSet> projections;
  for (const auto& s : enumerate(f, kind, cap))
    if (arg < 0 || s.test(arg)) projections.insert(s & p);
  return projections.size();
}

bool decide_skeptical(const Framework& f, SemanticsKind kind, int arg, int cap) {
  if (arg < 0 || arg >= f.size()) throw usage_error("unknown argument index");
  for (const auto& s : enumerate(f, kind, cap))
    if (!s.test(arg)) return false;
  return true;
}

}  // namespace oracle
}  // namespace afc
