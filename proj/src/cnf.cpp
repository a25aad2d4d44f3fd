#include "alignh/cnf.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace alignh {

bool evaluate(const CnfFormula& f, const Assignment& a) {
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (int lit : clause) {
      int v = std::abs(lit);
      if (v < 1 || v >= static_cast<int>(a.size()))
        throw std::invalid_argument("assignment misses variable " +
                                    std::to_string(v));
      if ((lit > 0) == a[v]) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

PolarityProfile polarity_profile(const CnfFormula& f) {
  PolarityProfile prof;
  prof.positive.assign(f.num_vars + 1, 0);
  prof.negative.assign(f.num_vars + 1, 0);
  for (const auto& clause : f.clauses) {
    for (int lit : clause) {
      int v = std::abs(lit);
      if (v < 1 || v > f.num_vars)
        throw std::invalid_argument("literal " + std::to_string(lit) +
                                    " out of range (num_vars=" +
                                    std::to_string(f.num_vars) + ")");
      if (lit > 0)
        ++prof.positive[v];
      else
        ++prof.negative[v];
    }
  }
  return prof;
}

std::optional<int> find_single_polarity_var(const CnfFormula& f) {
  PolarityProfile prof = polarity_profile(f);
  for (int v = 1; v <= f.num_vars; ++v) {
    if (prof.positive[v] == 0 || prof.negative[v] == 0) return v;
  }
  return std::nullopt;
}

std::optional<Assignment> brute_force_satisfying(const CnfFormula& f) {
  if (f.num_vars > 30)
    throw std::invalid_argument("brute-force oracle capped at 30 variables");
  const uint64_t total = uint64_t(1) << f.num_vars;
  for (uint64_t mask = 0; mask < total; ++mask) {
    Assignment a(f.num_vars + 1, false);
    for (int v = 1; v <= f.num_vars; ++v) a[v] = (mask >> (f.num_vars - v)) & 1;
    if (evaluate(f, a)) return a;
  }
  return std::nullopt;
}

bool brute_force_satisfiable(const CnfFormula& f) {
  return brute_force_satisfying(f).has_value();
}

CnfFormula simplify(const CnfFormula& f, int var, bool value) {
  CnfFormula out;
  out.num_vars = f.num_vars;
  for (const auto& clause : f.clauses) {
    std::vector<int> kept;
    bool satisfied = false;
    for (int lit : clause) {
      if (std::abs(lit) == var) {
        if ((lit > 0) == value) {
          satisfied = true;
          break;
        }
        continue;  // false literal drops out
      }
      kept.push_back(lit);
    }
    if (!satisfied) out.clauses.push_back(std::move(kept));
  }
  return out;
}

std::optional<Assignment> sat_search_via_decision(const CnfFormula& f,
                                                  const SatOracle& oracle) {
  if (!oracle(f)) return std::nullopt;
  Assignment asg(f.num_vars + 1, false);
  CnfFormula current = f;
  for (int v = 1; v <= f.num_vars; ++v) {
    CnfFormula fixed_true = simplify(current, v, true);
    if (oracle(fixed_true)) {
      asg[v] = true;
      current = std::move(fixed_true);
    } else {
      asg[v] = false;
      current = simplify(current, v, false);
    }
  }
  if (!evaluate(f, asg))
    throw std::runtime_error("inconsistent oracle: final assignment fails");
  return asg;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

}  // namespace

CnfFormula parse_dimacs_cnf(std::istream& in) {
  CnfFormula f;
  bool seen_header = false;
  int declared_clauses = 0;
  std::vector<int> pending;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c" || first[0] == 'c') continue;
    if (first == "p") {
      std::string kind;
      if (seen_header) parse_fail(lineno, "duplicate header");
      if (!(ls >> kind >> f.num_vars >> declared_clauses) || kind != "cnf")
        parse_fail(lineno, "expected 'p cnf <vars> <clauses>'");
      if (f.num_vars < 0 || declared_clauses < 0)
        parse_fail(lineno, "negative counts in header");
      seen_header = true;
      continue;
    }
    if (!seen_header) parse_fail(lineno, "clause before 'p cnf' header");
    ls.clear();
    ls.str(line);
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        f.clauses.push_back(pending);
        pending.clear();
      } else {
        if (std::abs(lit) > f.num_vars)
          parse_fail(lineno, "literal " + std::to_string(lit) +
                                 " out of range");
        pending.push_back(lit);
      }
    }
    if (!ls.eof()) parse_fail(lineno, "junk token in clause");
  }
  if (!seen_header) parse_fail(lineno ? lineno : 1, "missing 'p cnf' header");
  if (!pending.empty())
    parse_fail(lineno, "unterminated clause (missing 0)");
  if (static_cast<int>(f.clauses.size()) != declared_clauses)
    parse_fail(lineno, "clause count " + std::to_string(f.clauses.size()) +
                           " != declared " + std::to_string(declared_clauses));
  return f;
}

CnfFormula parse_dimacs_cnf_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs_cnf(in);
}

std::string to_dimacs_cnf(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
  for (const auto& clause : f.clauses) {
    for (int lit : clause) out << lit << " ";
    out << "0\n";
  }
  return out.str();
}

std::string format_clause(const std::vector<int>& clause) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < clause.size(); ++i) {
    if (i) out << " v ";
    if (clause[i] < 0) out << "~";
    out << "x" << std::abs(clause[i]);
  }
  out << ")";
  return out.str();
}

}  // namespace alignh
