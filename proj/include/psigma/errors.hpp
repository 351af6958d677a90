#pragma once

#include <stdexcept>
#include <string>

namespace psigma {

/// Caller passed something outside an operation's domain.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap would be exceeded.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An exact identity that must hold did not (bad table, non-integral
/// multiplicity, ...). Never recoverable.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A wedge word whose index graph has a directed cycle; such a product is
/// zero in cohomology and has no forest.
class CyclicProductError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace psigma
