// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace triad {

// Caller-supplied data violated a documented precondition. Anything else
// escaping the library (std::logic_error and friends) is an internal
// invariant breach.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace triad
