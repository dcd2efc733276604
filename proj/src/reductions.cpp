#include "afcount/reductions.hpp"

#include <algorithm>
#include <sstream>

#include "afcount/errors.hpp"

namespace afc {

CnfFormula parse_dimacs(const std::string& text) {
  CnfFormula cnf;
  int declared_clauses = -1;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<int> clause;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "p") {
      std::string fmt;
      if (!(ss >> fmt >> cnf.num_vars >> declared_clauses) || fmt != "cnf")
        throw parse_error("line " + std::to_string(lineno) + ": bad problem line");
      continue;
    }
    ss.clear();
    ss.str(line);
    int lit;
    while (ss >> lit) {
      if (lit == 0) {
        if (clause.empty())
          throw parse_error("line " + std::to_string(lineno) + ": empty clause");
        cnf.clauses.push_back(clause);
        clause.clear();
      } else {
        int v = std::abs(lit);
        if (cnf.num_vars == 0)
          throw parse_error("line " + std::to_string(lineno) + ": clause before problem line");
        if (v > cnf.num_vars)
          throw parse_error("line " + std::to_string(lineno) + ": literal out of range");
        clause.push_back(lit);
      }
    }
  }
  if (!clause.empty()) cnf.clauses.push_back(clause);  // unterminated last clause
  if (declared_clauses >= 0 && int(cnf.clauses.size()) != declared_clauses)
    throw parse_error("clause count differs from problem line");
  return cnf;
}

namespace {

bool satisfies(const CnfFormula& cnf, uint64_t assignment) {
  for (const auto& clause : cnf.clauses) {
    bool sat = false;
    for (int lit : clause) {
      int v = std::abs(lit) - 1;
      bool val = (assignment >> v) & 1;
      if ((lit > 0) == val) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

void check_cap(const CnfFormula& cnf, int cap) {
  if (cnf.num_vars > cap)
    throw internal_error("model enumeration cap exceeded (" + std::to_string(cnf.num_vars) +
                         " vars)");
}

// deduplicated literals of one clause
std::vector<int> clause_lits(const std::vector<int>& clause) {
  std::vector<int> lits = clause;
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return lits;
}

}  // namespace

uint64_t count_models(const CnfFormula& cnf, int cap) {
  check_cap(cnf, cap);
  uint64_t count = 0;
  for (uint64_t a = 0; a < (uint64_t(1) << cnf.num_vars); ++a)
    if (satisfies(cnf, a)) ++count;
  return count;
}

uint64_t count_projected_models(const CnfFormula& cnf, int num_x, int cap) {
  check_cap(cnf, cap);
  if (num_x < 0 || num_x > cnf.num_vars) throw usage_error("bad X variable count");
  const int ny = cnf.num_vars - num_x;
  uint64_t count = 0;
  for (uint64_t ax = 0; ax < (uint64_t(1) << num_x); ++ax) {
    bool extendable = false;
    for (uint64_t ay = 0; ay < (uint64_t(1) << ny) && !extendable; ++ay)
      extendable = satisfies(cnf, ax | (ay << num_x));
    if (extendable) ++count;
  }
  return count;
}

namespace {

struct Builder {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> attacks;

  int arg(const std::string& n) {
    names.push_back(n);
    return int(names.size()) - 1;
  }
  void att(int a, int b) { attacks.emplace_back(a, b); }
};

}  // namespace

ReductionResult cnf_to_af_stable(const CnfFormula& cnf) {
  Builder b;
  const int n = cnf.num_vars;
  std::vector<int> pos(n), neg(n);
  for (int i = 0; i < n; ++i) {
    pos[i] = b.arg("x" + std::to_string(i + 1));
    neg[i] = b.arg("nx" + std::to_string(i + 1));
    b.att(pos[i], neg[i]);
    b.att(neg[i], pos[i]);
  }
  std::vector<int> cl(cnf.clauses.size());
  for (size_t j = 0; j < cnf.clauses.size(); ++j)
    cl[j] = b.arg("C" + std::to_string(j + 1));
  int t = b.arg("t");
  int nt = b.arg("nt");
  for (size_t j = 0; j < cnf.clauses.size(); ++j) {
    for (int lit : clause_lits(cnf.clauses[j]))
      b.att(lit > 0 ? pos[lit - 1] : neg[-lit - 1], cl[j]);
    b.att(cl[j], t);
  }
  b.att(t, nt);
  b.att(nt, t);
  int total = int(b.names.size());
  Framework f(std::move(b.names), std::move(b.attacks));
  return ReductionResult{std::move(f), t, ArgSet(total)};
}

ReductionResult cnf_to_af_admissible(const CnfFormula& cnf) {
  Builder b;
  const int n = cnf.num_vars;
  std::vector<int> pos(n), neg(n);
  for (int i = 0; i < n; ++i) {
    pos[i] = b.arg("x" + std::to_string(i + 1));
    neg[i] = b.arg("nx" + std::to_string(i + 1));
    b.att(pos[i], neg[i]);
    b.att(neg[i], pos[i]);
  }
  std::vector<int> cl(cnf.clauses.size());
  for (size_t j = 0; j < cnf.clauses.size(); ++j)
    cl[j] = b.arg("C" + std::to_string(j + 1));
  int t = b.arg("t");
  int nt = b.arg("nt");
  for (size_t j = 0; j < cnf.clauses.size(); ++j) {
    for (int lit : clause_lits(cnf.clauses[j]))
      b.att(lit > 0 ? pos[lit - 1] : neg[-lit - 1], cl[j]);
    b.att(cl[j], t);
  }
  b.att(t, nt);
  b.att(nt, t);
  for (int i = 0; i < n; ++i) {
    int s = b.arg("s" + std::to_string(i + 1));
    b.att(s, t);
    b.att(pos[i], s);
    b.att(neg[i], s);
  }
  int total = int(b.names.size());
  Framework f(std::move(b.names), std::move(b.attacks));
  return ReductionResult{std::move(f), t, ArgSet(total)};
}

ReductionResult sigma1_to_projected(const CnfFormula& cnf, int num_x) {
  if (num_x < 0 || num_x > cnf.num_vars) throw usage_error("bad X variable count");
  Builder b;
  const int n = cnf.num_vars;
  std::vector<int> pos(n), neg(n);
  for (int i = 0; i < n; ++i) {
    pos[i] = b.arg("x" + std::to_string(i + 1));
    neg[i] = b.arg("nx" + std::to_string(i + 1));
    b.att(pos[i], neg[i]);
    b.att(neg[i], pos[i]);
  }
  std::vector<int> cl(cnf.clauses.size());
  for (size_t j = 0; j < cnf.clauses.size(); ++j)
    cl[j] = b.arg("C" + std::to_string(j + 1));
  int t = b.arg("t");
  int nt = b.arg("nt");
  int bb = b.arg("b");
  b.att(bb, bb);
  b.att(t, nt);
  b.att(nt, t);
  b.att(t, bb);
  for (size_t j = 0; j < cnf.clauses.size(); ++j) {
    for (int lit : clause_lits(cnf.clauses[j]))
      b.att(lit > 0 ? pos[lit - 1] : neg[-lit - 1], cl[j]);
    b.att(cl[j], t);
  }
  for (int i = 0; i < n; ++i) {
    int s = b.arg("s" + std::to_string(i + 1));
    b.att(s, t);
    b.att(pos[i], s);
    b.att(neg[i], s);
  }
  int total = int(b.names.size());
  Framework f(std::move(b.names), std::move(b.attacks));
  ArgSet p(total);
  for (int i = 0; i < num_x; ++i) p.set(pos[i]);
  return ReductionResult{std::move(f), t, p};
}

}  // namespace afc
