#include "bdbar/kernels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace bdbar {

namespace {

constexpr double kPi = std::numbers::pi;

Complex near_singular_checked(Complex d) {
  if (std::abs(d) < kKernelSingularityThreshold) {
    std::ostringstream os;
    os << "Bergman kernel is numerically singular: |1 - <z,w>| = " << std::abs(d);
    throw Error(ErrorCode::NearSingularity, os.str());
  }
  return d;
}

}  // namespace

Complex bergman_kernel_unchecked(const DomainSpec& domain, std::span<const Complex> z, std::span<const Complex> w) {
  switch (domain.kind()) {
    case DomainKind::Disc: {
      const Complex d = near_singular_checked(1.0 - z[0] * std::conj(w[0]));
      return 1.0 / (kPi * d * d);
    }
    case DomainKind::Polydisc2: {
      const Complex d1 = near_singular_checked(1.0 - z[0] * std::conj(w[0]));
      const Complex d2 = near_singular_checked(1.0 - z[1] * std::conj(w[1]));
      return 1.0 / (kPi * kPi * d1 * d1 * d2 * d2);
    }
    case DomainKind::Ball2: {
      const Complex d = near_singular_checked(1.0 - z[0] * std::conj(w[0]) - z[1] * std::conj(w[1]));
      return 2.0 / (kPi * kPi * d * d * d);
    }
  }
  return 0.0;
}

Complex bergman_kernel(const DomainSpec& domain, std::span<const Complex> z, std::span<const Complex> w) {
  domain.require_interior(z, "kernel argument z");
  domain.require_interior(w, "kernel argument w");
  return bergman_kernel_unchecked(domain, z, w);
}

void require_quadrature_point(const DomainSpec& domain, std::span<const Complex> z) {
  domain.require_interior(z, "evaluation point");
  if (DomainSpec::max_modulus(z) > kMaxQuadraturePointModulus) {
    throw Error(ErrorCode::InvalidArgument, "quadrature evaluation needs max |z_j| <= 0.9");
  }
}

Complex reproducing_check(const DomainSpec& domain, const HoloPoly& f, std::span<const Complex> z,
                          const QuadratureSpec& quad) {
  if (f.dim() != domain.dim()) throw Error(ErrorCode::DimensionMismatch, "polynomial does not match domain");
  if (f.degree() > kMaxReproducingDegree) {
    throw Error(ErrorCode::InvalidArgument, "reproducing check supports degree <= " +
                                                std::to_string(kMaxReproducingDegree));
  }
  require_quadrature_point(domain, z);
  const CompiledPoly fw(f);
  const auto estimate = integrate(
      domain, [&](std::span<const Complex> w) { return bergman_kernel_unchecked(domain, z, w) * fw(w); }, quad);
  return estimate.value - fw(z);
}

}  // namespace bdbar
