// Error taxonomy shared by all modules.
#pragma once

#include <stdexcept>
#include <string>

namespace primrose {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ill-formed value or mismatched operands: unknown label, width mismatch,
/// invalid query (e.g. a primal-based model invoked without a primal).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed a configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text: instance files, CSV, reference tables.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace primrose
