#pragma once

#include <stdexcept>
#include <string>

namespace poncelet {

/// Malformed input: bad sizes, out-of-range indices, unparsable values.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Shape mismatch in a matrix operation (e.g. determinant of a non-square matrix).
class DimensionError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Wrong number of sections for the requested construction.
class ArityError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Well-formed input whose geometry degenerates: dependent sections,
/// repeated roots, a singular change of coordinates.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace poncelet
