#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace logmink {

enum class ErrorKind {
  NotConvex,
  OriginOutside,
  DegeneratePolygon,
  NegativeDiscriminant,
  SolverFailure,
  Infeasible,
  DomainError,
  NotDilationPosition,
  InvalidArgument,
  ParseError,
};

std::string_view error_name(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above; the CLI
// maps kinds onto exit codes.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const { return kind_; }
  std::string_view name() const { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace logmink
