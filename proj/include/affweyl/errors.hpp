#pragma once

#include <stdexcept>
#include <string>

namespace affweyl {

// Enumeration or series work exceeded its element budget. Never a silent
// truncation: callers either raise the budget or report the overflow.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical identity the construction is required to satisfy failed.
class VerificationError : public std::runtime_error {
public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace affweyl
