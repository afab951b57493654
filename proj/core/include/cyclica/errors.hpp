#pragma once
#include <stdexcept>

namespace cyclica {

// Raised when an operation would exceed its enumeration or time budget;
// callers distinguish this from invalid input (drivers map it to a
// dedicated process exit code).
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cyclica
