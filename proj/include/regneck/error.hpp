#pragma once

#include <stdexcept>
#include <string>

namespace regneck {

// Caller passed parameters outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive search would exceed its configured size limit.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A proven property failed on a concrete instance. Never expected; raised
// instead of returning an uncertified result.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace regneck
