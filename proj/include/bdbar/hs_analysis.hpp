#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bdbar/domain_spec.hpp"
#include "bdbar/exact.hpp"
#include "bdbar/poly.hpp"
#include "bdbar/quadrature.hpp"

namespace bdbar {

// Diagnostic thresholds.
inline constexpr double kDivergenceRatioThreshold = 1.5;  // kernel L2 growth per rho step
// A non-telescoping partial sum is reported as divergent when S(N) > N / 2.
inline const Rational kDivergenceSlope{1, 2};
inline constexpr double kPoissonTolerance = 1e-8;
inline constexpr unsigned kPoissonDefaultNodes = 4096;

enum class HSVerdict { ConvergentWithLimit, DivergentTrend };

const char* to_string(HSVerdict verdict);

struct HSIndexNorm {
  MultiIndex alpha;
  std::size_t coordinate;  // j in dconj(z_j), from 0
  ExactScalar norm_sq;
};

struct HSReport {
  DomainSpec domain{DomainKind::Disc};
  unsigned max_degree = 0;
  std::vector<HSIndexNorm> per_index_norms;  // graded-lex in alpha, then coordinate
  ExactScalar partial_sum;
  HSVerdict verdict = HSVerdict::DivergentTrend;
  std::optional<ExactScalar> limit;  // set iff verdict == ConvergentWithLimit
  std::vector<std::pair<unsigned, double>> trend_samples;
};

// ||S1(e_alpha dconj(z_j))||^2 from the exact inner product of the solution
// polynomial; cross-checked against the closed form (ConsistencyFailure if they differ).
ExactScalar s1_image_norm_sq(const DomainSpec& domain, const MultiIndex& alpha, std::size_t j);

// Closed forms:
//   disc      1 / ((n+1)(n+2))
//   polydisc  1 / ((n_j+1)(n_j+2))
//   ball      (n_other + 2) / ((n1+n2+2)(n1+n2+3))
ExactScalar s1_image_norm_sq_closed_form(const DomainSpec& domain, const MultiIndex& alpha, std::size_t j);

// Sum of ||S1(e_alpha dconj(z_j))||^2 over alpha in the box {0..N}^dim and every j.
// The disc sum telescopes to 1 - 1/(N+2) with limit 1; the polydisc and ball
// sums grow linearly and are reported as divergent trends sampled at N/4, N/2, N.
HSReport hs_partial_sum(const DomainSpec& domain, unsigned max_degree);

struct KernelL2Sample {
  double rho;
  IntegralEstimate estimate;
};

// Monte Carlo estimates over the rho-truncated product domain of the squared
// modulus of the S1 integral kernel (up to the pi^2 normalization of B):
//   disc      |z - w|^2 / |1 - z conj(w)|^4
//   polydisc  (|z1 - w1|^2 + |z2 - w2|^2) / (|1 - z1 conj(w1)|^4 |1 - z2 conj(w2)|^4)
//   ball      (|z1 - w1|^2 + |z2 - w2|^2) / |1 - z1 conj(w1) - z2 conj(w2)|^6
// The sweep needs at least three strictly increasing cutoffs in (0, 1).
std::vector<KernelL2Sample> kernel_l2_integral(const DomainSpec& domain, const std::vector<double>& rho_sweep,
                                               std::uint64_t samples, std::uint64_t seed);

Complex kernel_l2_integrand(const DomainSpec& domain, std::span<const Complex> z, std::span<const Complex> w);

// Upper bound pi^4 / 6 for the disc integral.
ExactScalar disc_kernel_l2_bound();

// Ratios estimate[k+1] / estimate[k] along the sweep.
std::vector<double> kernel_l2_growth_ratios(const std::vector<KernelL2Sample>& sweep);
// Every ratio >= kDivergenceRatioThreshold.
bool kernel_l2_diverging(const std::vector<KernelL2Sample>& sweep);
// Increasing and every estimate <= pi^4 / 6.
bool kernel_l2_bounded(const std::vector<KernelL2Sample>& sweep);

// Trapezoid rule for int_0^{2 pi} (1 - rho^2) / (1 - 2 rho cos(theta - phi) + rho^2) dtheta.
double poisson_check(double rho, double phi, unsigned nodes = kPoissonDefaultNodes);

// Gram matrix <S1(u_m dconj z), S1(u_n dconj z)> on the disc, m, n = 0..max_n.
std::vector<std::vector<ExactComplex>> pairwise_orthogonality(const DomainSpec& domain, unsigned max_n);

// Hankel operator with symbol conj(z_j): (I - P)(conj(z_j) g). Checked against
// the canonical solution of g dconj(z_j).
MixedPoly hankel_apply(const DomainSpec& domain, std::size_t j, const HoloPoly& g);

}  // namespace bdbar
