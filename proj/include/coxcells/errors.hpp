#pragma once

#include <stdexcept>
#include <string>

namespace coxcells {

// Typed computation errors. The CLI maps each kind to exit status 3 and
// prints the kind name, so the kind strings are part of the interface.
enum class ErrorKind {
  BallExceeded,
  ResourceLimit,
  NotExpressible,
  NotAQPolynomial,
  NotInOmega,
  NoSuchParabolic,
  UnknownSuite,
  MissingPrerequisite,
  InvalidMatrix,
  CacheMismatch,
  Overflow,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::BallExceeded: return "BallExceeded";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::NotExpressible: return "NotExpressible";
    case ErrorKind::NotAQPolynomial: return "NotAQPolynomial";
    case ErrorKind::NotInOmega: return "NotInOmega";
    case ErrorKind::NoSuchParabolic: return "NoSuchParabolic";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::MissingPrerequisite: return "MissingPrerequisite";
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::CacheMismatch: return "CacheMismatch";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace coxcells
