#pragma once

#include <stdexcept>
#include <string>

namespace algmatch {

// Caller violated a precondition: bad dimensions, mismatched moduli,
// malformed input files, out-of-range parameters.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// An algebraic identity that must hold for well-formed inputs failed, e.g. the
// determinant of a skew pencil turned out not to be a perfect square.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace algmatch
