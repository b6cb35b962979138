// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nestlp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed program text. Line and column are 1-based.
struct SyntaxError : Error {
  SyntaxError(const std::string& origin, std::size_t line, std::size_t column, const std::string& msg);
  std::size_t line;
  std::size_t column;
};

/// A user atom uses one of the prefixes reserved for labels ("l_") or bar atoms ("n_").
struct ReservedAtomError : SyntaxError {
  using SyntaxError::SyntaxError;
};

/// An operation was handed a program outside the class it is defined on.
struct PreconditionError : Error {
  using Error::Error;
};

/// Enumeration cap or output-size guard exceeded.
struct ResourceError : Error {
  using Error::Error;
};

}  // namespace nestlp
