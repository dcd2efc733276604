#ifndef AFCOUNT_REDUCTIONS_HPP
#define AFCOUNT_REDUCTIONS_HPP

#include <string>
#include <vector>

#include "afcount/af.hpp"

namespace afc {

// Propositional CNF; literals are +v / -v with 1-based variable indices.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

// DIMACS reader (`p cnf <vars> <clauses>`, 0-terminated clause lines).
CnfFormula parse_dimacs(const std::string& text);

// Number of satisfying assignments by enumeration (vars capped).
uint64_t count_models(const CnfFormula& cnf, int cap = 25);

// Number of assignments to the first `num_x` variables extendable to a model
// of the formula (the remaining variables are existential).
uint64_t count_projected_models(const CnfFormula& cnf, int num_x, int cap = 25);

struct ReductionResult {
  Framework framework;
  int target;             // argument t
  ArgSet projection;      // projection arguments (sigma1 only; empty otherwise)
};

// #models(φ) = number of stable extensions containing t.
// Arguments: x<i>/nx<i> per variable, C<j> per clause, t and nt.
ReductionResult cnf_to_af_stable(const CnfFormula& cnf);

// #models(φ) = number of admissible extensions containing t; adds guard
// arguments s<i> so that every variable is assigned.
ReductionResult cnf_to_af_admissible(const CnfFormula& cnf);

// φ(X) = ∃Y ψ(X,Y) with X = the first num_x variables: the number of
// X-assignments extendable to a model of ψ equals the projected credulous
// count of t on the returned framework under the returned projection, for
// the admissible, stable and complete semantics.
ReductionResult sigma1_to_projected(const CnfFormula& cnf, int num_x);

}  // namespace afc

#endif
