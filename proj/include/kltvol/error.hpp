#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kltvol {

enum class ErrorKind {
  Parse,
  InvalidArgument,
  EmptyTruncation,
  NotPrimary,
  NotKlt,
  NonMonomialBoundary,
  NonPositiveDiscrepancy,
  NotPlt,
  NotLogFano,
  NotKss,
  NotKltOnMonomialRays,
  NotInvariant,
  InternalInconsistency,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EmptyTruncation: return "EmptyTruncation";
    case ErrorKind::NotPrimary: return "NotPrimary";
    case ErrorKind::NotKlt: return "NotKlt";
    case ErrorKind::NonMonomialBoundary: return "NonMonomialBoundary";
    case ErrorKind::NonPositiveDiscrepancy: return "NonPositiveDiscrepancy";
    case ErrorKind::NotPlt: return "NotPlt";
    case ErrorKind::NotLogFano: return "NotLogFano";
    case ErrorKind::NotKss: return "NotKss";
    case ErrorKind::NotKltOnMonomialRays: return "NotKltOnMonomialRays";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace kltvol
