#ifndef AFCOUNT_AF_HPP
#define AFCOUNT_AF_HPP

#include <string>
#include <utility>
#include <vector>

#include "afcount/argset.hpp"

namespace afc {

enum class SemanticsKind {
  ConflictFree,
  Admissible,
  Complete,
  Preferred,
  SemiStable,
  Stable,
  Stage,
};

const char* to_string(SemanticsKind k);
// Throws a usage error for unknown names.
SemanticsKind semantics_from_string(const std::string& name);
// All seven kinds, in the order of the enum.
const std::vector<SemanticsKind>& all_semantics();

// Directed attack graph over named arguments. Arguments are canonicalized to
// indices in first-appearance order; self-attacks are permitted.
class Framework {
public:
  Framework(std::vector<std::string> names, std::vector<std::pair<int, int>> attacks);

  int size() const { return int(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  // Index of a named argument, or -1.
  int index_of(const std::string& name) const;

  const std::vector<std::pair<int, int>>& attacks() const { return attacks_; }
  bool attacks_pair(int a, int b) const { return out_[a].test(b); }

  // Arguments attacked by a / attacking a.
  const ArgSet& targets_of(int a) const { return out_[a]; }
  const ArgSet& attackers_of(int a) const { return in_[a]; }

  ArgSet empty_set() const { return ArgSet(size()); }
  ArgSet full_set() const;
  ArgSet set_of(std::initializer_list<int> bits) const { return ArgSet(size(), bits); }
  ArgSet set_of_names(const std::vector<std::string>& names) const;

  std::string format_set(const ArgSet& s) const;

private:
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> attacks_;
  std::vector<ArgSet> out_;  // out_[a] = targets of a
  std::vector<ArgSet> in_;   // in_[a] = attackers of a
};

// Members of S that attack some member of T.
ArgSet attackers_into(const Framework& f, const ArgSet& s, const ArgSet& t);
// Members of S attacked by some member of T.
ArgSet attacked_from(const Framework& f, const ArgSet& s, const ArgSet& t);

// S together with everything S attacks.
ArgSet range_of(const Framework& f, const ArgSet& s);

// Arguments whose every attacker is attacked by some member of S.
ArgSet defended_set(const Framework& f, const ArgSet& s);

bool is_conflict_free(const Framework& f, const ArgSet& s);
bool is_admissible(const Framework& f, const ArgSet& s);

// Definition-level check. The quantified semantics (preferred, semi-stable,
// stage) enumerate all subsets of A and reject frameworks above `cap`
// arguments; they are meant as ground truth at oracle scale only.
bool is_extension(const Framework& f, const ArgSet& s, SemanticsKind kind, int cap = 25);

}  // namespace afc

#endif
