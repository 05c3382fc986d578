#pragma once

#include <span>

#include "bdbar/domain_spec.hpp"
#include "bdbar/poly.hpp"
#include "bdbar/quadrature.hpp"

namespace bdbar {

// |1 - <z, w>| below this is reported as a near-singularity.
inline constexpr double kKernelSingularityThreshold = 1e-14;

// Highest degree accepted by reproducing_check.
inline constexpr unsigned kMaxReproducingDegree = 24;

// Interior points for quadrature-based evaluation must satisfy max_j |z_j| <= this.
inline constexpr double kMaxQuadraturePointModulus = 0.9;

// Bergman kernel B(z, w) of the model domain:
//   disc      1 / (pi (1 - z conj(w))^2)
//   polydisc  product of two disc kernels
//   ball      2 / (pi^2 (1 - <z, w>)^3),  <z, w> = z1 conj(w1) + z2 conj(w2)
// Throws OutsideDomain for points not strictly inside and NearSingularity when
// |1 - <z, w>| (per factor for the polydisc) drops below the threshold.
Complex bergman_kernel(const DomainSpec& domain, std::span<const Complex> z, std::span<const Complex> w);

// Kernel without the domain-membership check, for quadrature inner loops
// whose nodes are interior by construction.
Complex bergman_kernel_unchecked(const DomainSpec& domain, std::span<const Complex> z, std::span<const Complex> w);

// int B(z, w) f(w) dlambda(w) - f(z).
Complex reproducing_check(const DomainSpec& domain, const HoloPoly& f, std::span<const Complex> z,
                          const QuadratureSpec& quad);

// Throws unless z is interior with max_j |z_j| <= kMaxQuadraturePointModulus.
void require_quadrature_point(const DomainSpec& domain, std::span<const Complex> z);

}  // namespace bdbar
