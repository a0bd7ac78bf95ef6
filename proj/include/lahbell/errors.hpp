#pragma once

#include <stdexcept>
#include <string>

namespace lahbell {

/// Raised when an operation is called outside its documented domain
/// (nonzero constant term, mismatched series orders, enumeration bound, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unknown triangle kind, family, catalog name or identity id.
class UnknownNameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A certified evaluation could not reach the requested precision within
/// its iteration cap. Never replaced by a silently looser answer.
class PrecisionNotReached : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lahbell
