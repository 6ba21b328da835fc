#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace charvar {

enum class ErrorKind {
  NotHermitian,
  NotPositive,
  Singular,
  NotInGroup,
  DimensionMismatch,
  BadParameter,
  NotDiagonal,
  IndexOutOfRange,
  OutOfRange,
  NotInImage,
  DegenerateUnhandled,
  DegenerateSpectrum,
  ComplexInput,
  DataIntegrity,
  NonPolynomial,
  UnknownRegion,
  Parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Default tolerance for every validity predicate.
inline constexpr double kDefaultTol = 1e-9;

}  // namespace charvar
