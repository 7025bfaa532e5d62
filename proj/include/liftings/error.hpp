#pragma once

#include <stdexcept>
#include <string>

namespace liftings {

/// Error families. The CLI maps each family to a process exit code.
enum class ErrorKind {
  Parse,
  Dimension,
  ZeroPolynomial,
  Ring,
  Monicity,
  Homogeneity,
  Grading,
  NotAGroebnerBasis,
  Argument,
  Membership,
  Overflow,
  Genericity,
  FieldSize,
  Minimality,
  WeightSearch,
  SpecializationFailure,
  TheoremViolation,
  InternalConsistency,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::ZeroPolynomial: return "zero-polynomial";
    case ErrorKind::Ring: return "ring";
    case ErrorKind::Monicity: return "monicity";
    case ErrorKind::Homogeneity: return "homogeneity";
    case ErrorKind::Grading: return "grading";
    case ErrorKind::NotAGroebnerBasis: return "not-a-groebner-basis";
    case ErrorKind::Argument: return "argument";
    case ErrorKind::Membership: return "membership";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Genericity: return "genericity";
    case ErrorKind::FieldSize: return "field-size";
    case ErrorKind::Minimality: return "minimality";
    case ErrorKind::WeightSearch: return "weight-search";
    case ErrorKind::SpecializationFailure: return "specialization-failure";
    case ErrorKind::TheoremViolation: return "theorem-violation";
    case ErrorKind::InternalConsistency: return "internal-consistency";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace liftings
