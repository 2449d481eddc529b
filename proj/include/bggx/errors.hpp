#pragma once

#include <stdexcept>
#include <string>

namespace bggx {

/// Violated precondition on an argument (partition outside the box, non-unit
/// series, mismatched contexts, singular basis change, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Malformed input data, e.g. a Hodge datum whose wedge action does not
/// anticommute.
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed.
class ComputationError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace bggx
