#pragma once

// error taxonomy shared by the library and the cli.  every failure the
// library can diagnose maps onto one of these, so the cli exit-code
// contract (1 config, 2 invariant, 3 stream audit) is a plain switch.

#include <stdexcept>
#include <string>

namespace horolab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a word or ray literal that does not parse (bad letter, letter outside the
// declared rank, missing period part, ...)
struct MalformedWordError : Error {
  using Error::Error;
};

// group preset whose parameters fail a discreteness or well-formedness check
struct InvalidPresetError : Error {
  using Error::Error;
};

// float computation left its guaranteed-safe region (vanishing denominator,
// boundary point off the circle, ...)
struct NumericDegeneracyError : Error {
  using Error::Error;
};

// an enumeration hit its configured cap; callers decide whether the partial
// result is usable
struct CapacityError : Error {
  using Error::Error;
};

// bad run configuration (unknown key, missing field, wrong type)
struct ConfigError : Error {
  using Error::Error;
};

// a declared mathematical invariant failed at runtime; always a bug in the
// input model or in this library, never ignorable
struct InvariantViolation : Error {
  using Error::Error;
};

// the density/cocycle audit of a stream exceeded its defect bound
struct StreamAuditError : Error {
  using Error::Error;
};

}  // namespace horolab
