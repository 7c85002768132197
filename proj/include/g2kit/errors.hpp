#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace g2kit {

enum class ErrorKind {
  ContextMismatch,
  DivisionByZero,
  SingularMatrix,
  SolverFailure,
  NotComposition,
  NotOrthogonal,
  NormZero,
  NormNotOne,
  DimensionOverflow,
  NotInSubalgebra,
  NotAutomorphism,
  CertificationFailure,
  DegenerateForm,
  BadBasisPosition,
  NotInComplement,
  NotFixingL,
  NotSpecialUnitary,
  AmbiguousSpectrum,
  NormNotRepresented,
  InvalidIso,
  NotIsomorphic,
  Disagreement,
  InvalidInput,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::SolverFailure: return "SolverFailure";
    case ErrorKind::NotComposition: return "NotComposition";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::NormZero: return "NormZero";
    case ErrorKind::NormNotOne: return "NormNotOne";
    case ErrorKind::DimensionOverflow: return "DimensionOverflow";
    case ErrorKind::NotInSubalgebra: return "NotInSubalgebra";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::CertificationFailure: return "CertificationFailure";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::BadBasisPosition: return "BadBasisPosition";
    case ErrorKind::NotInComplement: return "NotInComplement";
    case ErrorKind::NotFixingL: return "NotFixingL";
    case ErrorKind::NotSpecialUnitary: return "NotSpecialUnitary";
    case ErrorKind::AmbiguousSpectrum: return "AmbiguousSpectrum";
    case ErrorKind::NormNotRepresented: return "NormNotRepresented";
    case ErrorKind::InvalidIso: return "InvalidIso";
    case ErrorKind::NotIsomorphic: return "NotIsomorphic";
    case ErrorKind::Disagreement: return "Disagreement";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Certification failure carrying the first basis pair (i, j) with t(e_i e_j) != t(e_i) t(e_j).
/// A failure of the unit condition is reported as the pair (0, 0).
class NotAutomorphismError : public Error {
 public:
  NotAutomorphismError(int i, int j, double residual)
      : Error(ErrorKind::NotAutomorphism,
              "multiplicativity fails on basis pair (" + std::to_string(i) + ", " +
                  std::to_string(j) + "), residual " + std::to_string(residual)),
        i_(i), j_(j), residual_(residual) {}

  int first() const noexcept { return i_; }
  int second() const noexcept { return j_; }
  double residual() const noexcept { return residual_; }

 private:
  int i_;
  int j_;
  double residual_;
};

}  // namespace g2kit
