#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "bdbar/domain_spec.hpp"

namespace bdbar {

enum class QuadratureMethod { PolarTensor, MonteCarlo };

// Integration rule over the rho-dilated model domain.
//
// PolarTensor: each complex coordinate is written as r e^{i theta}; theta uses
// the uniform trapezoid rule with `angular_nodes` points, radii use
// Gauss-Legendre with `radial_nodes` points. The disc and bidisc use (r, theta)
// per coordinate. The ball uses (r1, r2) = (t cos phi, t sin phi) with
// Gauss-Legendre in t in [0, rho] and phi in [0, pi/2], which is spectrally
// accurate for integrands that are smooth on the closed ball.
//
// MonteCarlo: uniform rejection sampling, one counter-based random stream per
// sample index, so results do not depend on thread count.
struct QuadratureSpec {
  QuadratureMethod method = QuadratureMethod::PolarTensor;
  unsigned radial_nodes = 64;
  unsigned angular_nodes = 128;
  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t seed = 42;
  double radius_cutoff = 1.0;

  static QuadratureSpec polar(unsigned radial, unsigned angular, double rho = 1.0);
  static QuadratureSpec monte_carlo(std::uint64_t samples, std::uint64_t seed, double rho = 1.0);

  // Throws InvalidArgument when the node counts, sample count or cutoff are out of range.
  // A boundary-singular integrand additionally needs radius_cutoff < 1.
  void validate(bool boundary_singular = false) const;
  std::string describe() const;
};

struct IntegralEstimate {
  Complex value{};
  double std_error = 0.0;  // Monte Carlo only
  QuadratureSpec spec_used;
};

using PointIntegrand = std::function<Complex(std::span<const Complex>)>;
using PairIntegrand = std::function<Complex(std::span<const Complex>, std::span<const Complex>)>;

// int_{rho Omega} f dlambda.
IntegralEstimate integrate(const DomainSpec& domain, const PointIntegrand& f, const QuadratureSpec& spec,
                           bool boundary_singular = false);

// int_{rho Omega} int_{rho Omega} g(z, w) dlambda(z) dlambda(w), Monte Carlo only.
IntegralEstimate integrate_product_domain(const DomainSpec& domain, const PairIntegrand& g,
                                          const QuadratureSpec& spec, bool boundary_singular = false);

// Gauss-Legendre nodes and weights on [a, b].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(unsigned n, double a, double b);

// Counter-based generator: draw k of stream (seed, index) is a pure function
// of (seed, index, k).
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t index);
  std::uint64_t next_u64();
  // Uniform in [0, 1).
  double next_uniform() { return static_cast<double>(next_u64() >> 11U) * 0x1.0p-53; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Uniform point in the rho-dilated domain, drawn from `rng`.
void sample_uniform(const DomainSpec& domain, double rho, CounterRng& rng, std::span<Complex> out);

// Pairwise (cascade) summation, fixed order.
Complex pairwise_sum(std::span<const Complex> values);
double pairwise_sum(std::span<const double> values);

}  // namespace bdbar
