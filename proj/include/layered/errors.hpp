#pragma once

#include <stdexcept>
#include <string>

namespace layered {

/// Malformed or out-of-contract user input (bad ids, invalid chains, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input passed syntactic checks but contradicts a structural guarantee
/// (e.g. narrow cuts that do not nest, so x is not an LP solution).
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructive step could not be carried out because its preconditions
/// (tightness, membership in the polytope, chain-point conditions) fail.
class PreconditionViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A self-check inside the library failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace layered
