#ifndef LOGNASH_ERRORS_HPP
#define LOGNASH_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace lognash {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A preference constant violates the positivity requirement.
struct InvalidParameter : Error {
  explicit InvalidParameter(const std::string& name, const std::string& detail)
      : Error("invalid parameter '" + name + "': " + detail), parameter(name) {}
  std::string parameter;
};

/// Salary grid construction failed (bad endpoints, ordering, or count).
struct InvalidGrid : Error {
  using Error::Error;
};

/// An argument lies outside the mathematical domain of the operation.
struct DomainError : Error {
  using Error::Error;
};

/// An exponent left the representable range even after normalization.
struct OverflowError : Error {
  using Error::Error;
};

/// Exact-factorial potential requested at a non-integer occupancy.
struct NotIntegral : Error {
  using Error::Error;
};

/// Iterative maximizer hit its iteration cap; carries the last iterate.
struct NotConverged : Error {
  NotConverged(const std::string& what, std::vector<double> iterate)
      : Error(what), last_iterate(std::move(iterate)) {}
  std::vector<double> last_iterate;
};

/// A utility is not strictly above the zero disagreement point.
struct NonpositiveUtility : Error {
  NonpositiveUtility(const std::string& what, int level_index)
      : Error(what), level(level_index) {}
  int level;  // offending salary level, -1 if config-wide
};

/// Simulation placement counts do not match the population size.
struct InvalidPlacement : Error {
  using Error::Error;
};

/// Not enough recorded snapshots past the burn-in point.
struct InsufficientData : Error {
  using Error::Error;
};

/// Config document is not well-formed.
struct ParseError : Error {
  using Error::Error;
};

/// Config document is well-formed but a field fails validation.
struct ValidationError : Error {
  ValidationError(const std::string& field_name, const std::string& detail)
      : Error("invalid field '" + field_name + "': " + detail), field(field_name) {}
  std::string field;
};

/// Report destination could not be written.
struct IoError : Error {
  using Error::Error;
};

}  // namespace lognash

#endif  // LOGNASH_ERRORS_HPP
