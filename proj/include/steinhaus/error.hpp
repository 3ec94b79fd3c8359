#pragma once

#include <stdexcept>
#include <string>

namespace steinhaus {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an enumeration would exceed the configured cell/element budget.
struct BudgetError : Error {
  explicit BudgetError(const std::string& what) : Error(what) {}
};

}  // namespace steinhaus
