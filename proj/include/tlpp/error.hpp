#pragma once

#include <stdexcept>
#include <string>

namespace tlpp {

// Raised when an argument lies outside an operation's domain (p outside [0,1],
// q >= 1, n above an enumeration cap, ...). The CLI maps it to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a quantity that should be consistent is not, e.g. a negative
// variance radicand outside its error bound.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tlpp
