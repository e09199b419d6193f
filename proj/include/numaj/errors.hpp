#pragma once

#include <stdexcept>
#include <string>

namespace numaj {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape or size of an input does not fit the operation.
struct dimension_error : error {
  using error::error;
};

// A value fails an operation's precondition.
struct argument_error : error {
  using error::error;
};

// A scalar lies outside the mathematical domain of a function.
struct domain_error : error {
  using error::error;
};

// A constructed object violates one of its declared invariants.
struct invariant_error : error {
  using error::error;
};

// A structured input document could not be parsed; the message names the field.
struct parse_error : error {
  using error::error;
};

// A verified inequality failed; the message carries the counterexample.
struct property_violation : error {
  using error::error;
};

}  // namespace numaj
