#pragma once

#include <stdexcept>
#include <string>

namespace coverideal {

/// Size guard for the algebraic routines whose cost grows like (s+1)^n.
struct Budget {
  int max_n = 10;
  int max_s = 4;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coverideal
