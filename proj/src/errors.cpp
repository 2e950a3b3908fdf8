#include "logmink/errors.hpp"

namespace logmink {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::OriginOutside: return "OriginOutside";
    case ErrorKind::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorKind::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorKind::SolverFailure: return "SolverFailure";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotDilationPosition: return "NotDilationPosition";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

GeometryError::GeometryError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

}  // namespace logmink
