#ifndef FISCHER_ERRORS_HPP
#define FISCHER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fischer {

/// Incompatible kind / preset / dimension, or parameters out of range.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition on vectors or subspaces did not hold.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical guarantee was violated at runtime. Never expected.
class ContractFailure : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// The requested computation is not modeled (e.g. chain search in M(22)).
class Unsupported : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive search ran out of node budget; no answer is claimed.
class SearchIncomplete : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace fischer

#endif
