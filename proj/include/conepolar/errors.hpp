#pragma once

#include <stdexcept>
#include <string>

namespace conepolar {

/// Dimension mismatch or other misuse of an API contract.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input violates an operation's mathematical precondition
/// (e.g. the base point of an exit parameter lies outside the cone).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Model data is inconsistent: duality violations, chamber gaps,
/// incomplete negative-curve catalogs, and so on.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace conepolar
