#include "rainbowkit/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace rainbow {

CnfFormula::CnfFormula(int num_vars, std::vector<std::vector<int>> clauses) {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
  num_vars_ = num_vars;
  for (auto& clause : clauses) {
    std::sort(clause.begin(), clause.end());
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
    if (clause.empty() || clause.size() > 3)
      throw std::invalid_argument("clause size must be 1..3 after deduplication");
    for (size_t i = 0; i < clause.size(); ++i) {
      int lit = clause[i];
      if (lit == 0 || std::abs(lit) > num_vars)
        throw std::invalid_argument("literal out of range: " + std::to_string(lit));
      for (size_t j = i + 1; j < clause.size(); ++j)
        if (std::abs(clause[j]) == std::abs(lit))
          throw std::invalid_argument("variable repeated within a clause: " +
                                      std::to_string(std::abs(lit)));
    }
  }
  clauses_ = std::move(clauses);
}

bool CnfFormula::clause_has_literal(int c, int var, bool positive) const {
  int want = positive ? var : -var;
  for (int lit : clauses_.at(c))
    if (lit == want) return true;
  return false;
}

}  // namespace rainbow
