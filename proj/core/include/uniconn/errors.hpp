#pragma once

#include <stdexcept>
#include <string>

namespace uniconn {

// Thrown when an exact algorithm is asked to run past its configured size
// budget.  Callers that can degrade (e.g. report writers) catch this and
// record the field as skipped instead of aborting.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace uniconn
