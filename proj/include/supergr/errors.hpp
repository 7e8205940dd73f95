// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace supergr {

/// Raised when inputs violate a mathematical precondition (singular matrix,
/// degenerate parameters, unsupported family, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace supergr
