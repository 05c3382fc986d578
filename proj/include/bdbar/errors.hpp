#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace bdbar {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  OutsideDomain,
  NearSingularity,
  NonFiniteIntegrand,
  IncommensurableScale,
  DegreeOverflow,
  ConsistencyFailure,
  Parse,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// A quadrature or Monte Carlo sample evaluated to NaN or infinity.
class IntegrandError : public Error {
 public:
  IntegrandError(std::vector<std::complex<double>> point, const std::string& what)
      : Error(ErrorCode::NonFiniteIntegrand, what), point_(std::move(point)) {}
  const std::vector<std::complex<double>>& point() const noexcept { return point_; }

 private:
  std::vector<std::complex<double>> point_;
};

}  // namespace bdbar
