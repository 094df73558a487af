#pragma once

#include <stdexcept>
#include <string>

namespace fuchslab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed group spec or recipe string.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operation needs element enumeration but the group has C-infinity factors.
class InfiniteGroupError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or construction would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Precondition violated by otherwise well-formed input.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace fuchslab
