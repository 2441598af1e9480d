#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace evanescent {

enum class ErrorKind {
  invalid_parameter,
  domain,
  overflow,
  singularity,
  branch_cut,
  no_transition,
  path_degenerate,
  quadrature_failure,
  undefined_phase,
  computation,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Thrown when adaptive quadrature runs out of subdivisions; carries what it had.
class QuadratureFailure : public Error {
 public:
  QuadratureFailure(const std::string& what, std::complex<double> partial, double err_estimate);
  std::complex<double> partial() const noexcept { return partial_; }
  double error_estimate() const noexcept { return err_; }

 private:
  std::complex<double> partial_;
  double err_;
};

}  // namespace evanescent
