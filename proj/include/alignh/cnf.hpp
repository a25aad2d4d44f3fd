#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace alignh {

// CNF formulas with 1-based variables; a literal is +v or -v.  Clauses keep
// their given literal order (the canonical alignment satisfies each clause
// with its first true literal).
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  int num_clauses() const { return static_cast<int>(clauses.size()); }
  bool operator==(const CnfFormula&) const = default;
};

// value per variable, index 1..num_vars (index 0 unused)
using Assignment = std::vector<bool>;

bool evaluate(const CnfFormula& f, const Assignment& a);

// Occurrence counts (p_v, q_v) = positive/negative occurrences per variable.
struct PolarityProfile {
  std::vector<int> positive;  // index 1..n
  std::vector<int> negative;
};
PolarityProfile polarity_profile(const CnfFormula& f);

// First variable violating "occurs in both polarities", or nullopt.
std::optional<int> find_single_polarity_var(const CnfFormula& f);

// Brute-force satisfiability oracle (2^n assignments); returns the first
// satisfying assignment in lexicographic false-first order if any.
std::optional<Assignment> brute_force_satisfying(const CnfFormula& f);
bool brute_force_satisfiable(const CnfFormula& f);

// Removes satisfied clauses and false literals under a partial choice of one
// variable.  An emptied clause stays as an (unsatisfiable) empty clause.
CnfFormula simplify(const CnfFormula& f, int var, bool value);

// Search-to-decision driver: fixes variables in ascending index order,
// preferring true, re-querying the decision oracle on the simplified
// formula; at most n+1 oracle calls.  Returns nullopt when the oracle
// rejects the input formula.  Throws std::runtime_error when the final
// assignment fails verification (inconsistent oracle).
using SatOracle = std::function<bool(const CnfFormula&)>;
std::optional<Assignment> sat_search_via_decision(const CnfFormula& f,
                                                  const SatOracle& oracle);

// DIMACS CNF ("p cnf <vars> <clauses>", zero-terminated clauses, 'c'
// comments).  Parse errors carry 1-based line numbers.
CnfFormula parse_dimacs_cnf(std::istream& in);
CnfFormula parse_dimacs_cnf_string(const std::string& text);
std::string to_dimacs_cnf(const CnfFormula& f);

std::string format_clause(const std::vector<int>& clause);

}  // namespace alignh
