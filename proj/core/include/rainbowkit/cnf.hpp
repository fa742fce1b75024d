#pragma once

#include <vector>

namespace rainbow {

/// CNF formula with DIMACS-style literals: variable i is 1-based, a
/// positive literal is +i and a negated one is -i. Clauses hold 1 to 3
/// distinct variables; duplicate literals are dropped at construction and
/// a clause mentioning both polarities of a variable is rejected.
class CnfFormula {
 public:
  CnfFormula() = default;
  CnfFormula(int num_vars, std::vector<std::vector<int>> clauses);

  int num_vars() const { return num_vars_; }
  int num_clauses() const { return static_cast<int>(clauses_.size()); }
  const std::vector<std::vector<int>>& clauses() const { return clauses_; }

  /// True when clause `c` contains the literal (positive when sign > 0)
  /// of the 1-based variable `var`.
  bool clause_has_literal(int c, int var, bool positive) const;

 private:
  int num_vars_ = 0;
  std::vector<std::vector<int>> clauses_;
};

}  // namespace rainbow
