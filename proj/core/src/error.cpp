#include "evanescent/error.hpp"

namespace evanescent {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::domain: return "domain";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::singularity: return "singularity";
    case ErrorKind::branch_cut: return "branch-cut";
    case ErrorKind::no_transition: return "no-transition";
    case ErrorKind::path_degenerate: return "path-degenerate";
    case ErrorKind::quadrature_failure: return "quadrature-failure";
    case ErrorKind::undefined_phase: return "undefined-phase";
    case ErrorKind::computation: return "computation";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

QuadratureFailure::QuadratureFailure(const std::string& what, std::complex<double> partial,
                                     double err_estimate)
    : Error(ErrorKind::quadrature_failure, what), partial_(partial), err_(err_estimate) {}

}  // namespace evanescent
