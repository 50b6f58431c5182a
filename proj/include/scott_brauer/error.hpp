#pragma once

#include <stdexcept>
#include <string>

namespace sb {

/// Malformed input: bad permutation arrays, unparsable job documents.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (group order, module dimension, field size) was hit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

[[noreturn]] inline void fail_precondition(const std::string& what) { throw PreconditionError(what); }
[[noreturn]] inline void fail_internal(const std::string& what) { throw InternalError(what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail_precondition(what);
}

inline void check(bool cond, const std::string& what) {
  if (!cond) fail_internal(what);
}

}  // namespace detail
}  // namespace sb
