#pragma once

#include <stdexcept>
#include <string>

namespace analogy {

/// Raised when an argument lies outside the mathematical domain of an
/// operation (non-positive term, unsorted quadruple, invalid power, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace analogy
