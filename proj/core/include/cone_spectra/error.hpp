#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cone_spectra {

enum class ErrorKind {
  InvalidInput,
  NonRegularCurve,
  NonInjectiveCurve,
  FrameIdentityViolated,
  OrientationAmbiguous,
  WindowOverlap,
  ConvergenceFailure,
  Unconverged,
  NearZeroEigenvalue,
  NoNegativeRoot,
  StiffIntegration,
  WallTooClose,
  OracleDisagreement,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NonRegularCurve: return "NonRegularCurve";
    case ErrorKind::NonInjectiveCurve: return "NonInjectiveCurve";
    case ErrorKind::FrameIdentityViolated: return "FrameIdentityViolated";
    case ErrorKind::OrientationAmbiguous: return "OrientationAmbiguous";
    case ErrorKind::WindowOverlap: return "WindowOverlap";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::Unconverged: return "Unconverged";
    case ErrorKind::NearZeroEigenvalue: return "NearZeroEigenvalue";
    case ErrorKind::NoNegativeRoot: return "NoNegativeRoot";
    case ErrorKind::StiffIntegration: return "StiffIntegration";
    case ErrorKind::WallTooClose: return "WallTooClose";
    case ErrorKind::OracleDisagreement: return "OracleDisagreement";
  }
  return "Unknown";
}

}  // namespace cone_spectra
