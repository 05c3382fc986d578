#include "bdbar/hs_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bdbar/dbar_solver.hpp"
#include "bdbar/domains.hpp"
#include "bdbar/projection.hpp"

namespace bdbar {

const char* to_string(HSVerdict verdict) {
  return verdict == HSVerdict::ConvergentWithLimit ? "ConvergentWithLimit" : "DivergentTrend";
}

ExactScalar s1_image_norm_sq_closed_form(const DomainSpec& domain, const MultiIndex& alpha, std::size_t j) {
  require_dim(domain, alpha);
  if (j >= domain.dim()) throw Error(ErrorCode::DimensionMismatch, "coordinate index out of range");
  switch (domain.kind()) {
    case DomainKind::Disc:
    case DomainKind::Polydisc2: {
      const long n = alpha[j];
      return ExactScalar(make_rational(1, (n + 1) * (n + 2)));
    }
    case DomainKind::Ball2: {
      const long s = alpha.degree();
      const long other = alpha[1 - j];
      return ExactScalar(make_rational(other + 2, (s + 2) * (s + 3)));
    }
  }
  return {};
}

ExactScalar s1_image_norm_sq(const DomainSpec& domain, const MultiIndex& alpha, std::size_t j) {
  const MixedPoly u = multiplier_solution(domain, Form01::single(orthonormal_basis_element(domain, alpha), j));
  ExactScalar value = norm_sq(domain, u);
  const ExactScalar expected = s1_image_norm_sq_closed_form(domain, alpha, j);
  if (!(value == expected)) {
    throw Error(ErrorCode::ConsistencyFailure, "||S1(e" + alpha.to_string() + " dzbar_" + std::to_string(j + 1) +
                                                   ")||^2 = " + value.to_string() + " but the closed form gives " +
                                                   expected.to_string());
  }
  return value;
}

HSReport hs_partial_sum(const DomainSpec& domain, unsigned max_degree) {
  if (max_degree < 1) throw Error(ErrorCode::InvalidArgument, "max degree must be >= 1");
  HSReport report;
  report.domain = domain;
  report.max_degree = max_degree;

  const unsigned n = max_degree;
  const std::size_t dim = domain.dim();
  for (const auto& alpha : indices_up_to_degree(dim, static_cast<unsigned>(dim) * n)) {
    if (std::any_of(alpha.entries().begin(), alpha.entries().end(), [n](unsigned a) { return a > n; })) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      ExactScalar value = s1_image_norm_sq(domain, alpha, j);
      report.partial_sum += value;
      report.per_index_norms.push_back({alpha, j, std::move(value)});
    }
  }

  std::vector<unsigned> degrees{n / 4, n / 2, n};
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  for (unsigned m : degrees) {
    ExactScalar s;
    for (const auto& entry : report.per_index_norms) {
      const auto& e = entry.alpha.entries();
      if (std::all_of(e.begin(), e.end(), [m](unsigned a) { return a <= m; })) s += entry.norm_sq;
    }
    report.trend_samples.emplace_back(m, s.to_double());
  }

  if (domain.kind() == DomainKind::Disc) {
    // sum_{k<=N} 1/((k+1)(k+2)) = 1 - 1/(N+2)
    const ExactScalar telescoped = ExactScalar(1) - ExactScalar(make_rational(1, static_cast<long>(n) + 2));
    if (!(report.partial_sum == telescoped)) {
      throw Error(ErrorCode::ConsistencyFailure, "disc partial sum " + report.partial_sum.to_string() +
                                                     " does not telescope to " + telescoped.to_string());
    }
    report.verdict = HSVerdict::ConvergentWithLimit;
    report.limit = ExactScalar(1);
    return report;
  }

  const bool increasing =
      std::adjacent_find(report.trend_samples.begin(), report.trend_samples.end(),
                         [](const auto& a, const auto& b) { return a.second >= b.second; }) == report.trend_samples.end();
  const bool exceeds = report.partial_sum > ExactScalar(kDivergenceSlope * n);
  if (!increasing || !exceeds) {
    throw Error(ErrorCode::ConsistencyFailure, "partial sums on " + domain.name() + " show no divergent trend");
  }
  report.verdict = HSVerdict::DivergentTrend;
  return report;
}

Complex kernel_l2_integrand(const DomainSpec& domain, std::span<const Complex> z, std::span<const Complex> w) {
  switch (domain.kind()) {
    case DomainKind::Disc: {
      const double d = std::abs(1.0 - z[0] * std::conj(w[0]));
      return std::norm(z[0] - w[0]) / (d * d * d * d);
    }
    case DomainKind::Polydisc2: {
      const double d1 = std::norm(1.0 - z[0] * std::conj(w[0]));
      const double d2 = std::norm(1.0 - z[1] * std::conj(w[1]));
      return (std::norm(z[0] - w[0]) + std::norm(z[1] - w[1])) / (d1 * d1 * d2 * d2);
    }
    case DomainKind::Ball2: {
      const double d = std::norm(1.0 - z[0] * std::conj(w[0]) - z[1] * std::conj(w[1]));
      return (std::norm(z[0] - w[0]) + std::norm(z[1] - w[1])) / (d * d * d);
    }
  }
  return 0.0;
}

std::vector<KernelL2Sample> kernel_l2_integral(const DomainSpec& domain, const std::vector<double>& rho_sweep,
                                               std::uint64_t samples, std::uint64_t seed) {
  if (rho_sweep.size() < 3) throw Error(ErrorCode::InvalidArgument, "rho sweep needs at least three cutoffs");
  for (std::size_t k = 0; k < rho_sweep.size(); ++k) {
    if (!(rho_sweep[k] > 0.0 && rho_sweep[k] < 1.0) || (k > 0 && rho_sweep[k] <= rho_sweep[k - 1])) {
      throw Error(ErrorCode::InvalidArgument, "rho sweep must be strictly increasing in (0, 1)");
    }
  }
  std::vector<KernelL2Sample> out;
  for (double rho : rho_sweep) {
    const auto spec = QuadratureSpec::monte_carlo(samples, seed, rho);
    out.push_back({rho, integrate_product_domain(
                            domain,
                            [&domain](std::span<const Complex> z, std::span<const Complex> w) {
                              return kernel_l2_integrand(domain, z, w);
                            },
                            spec, true)});
  }
  return out;
}

ExactScalar disc_kernel_l2_bound() { return ExactScalar(make_rational(1, 6), 4); }

std::vector<double> kernel_l2_growth_ratios(const std::vector<KernelL2Sample>& sweep) {
  std::vector<double> ratios;
  for (std::size_t k = 1; k < sweep.size(); ++k) {
    ratios.push_back(sweep[k].estimate.value.real() / sweep[k - 1].estimate.value.real());
  }
  return ratios;
}

bool kernel_l2_diverging(const std::vector<KernelL2Sample>& sweep) {
  const auto ratios = kernel_l2_growth_ratios(sweep);
  return !ratios.empty() &&
         std::all_of(ratios.begin(), ratios.end(), [](double r) { return r >= kDivergenceRatioThreshold; });
}

bool kernel_l2_bounded(const std::vector<KernelL2Sample>& sweep) {
  const double bound = disc_kernel_l2_bound().to_double();
  for (std::size_t k = 0; k < sweep.size(); ++k) {
    const double v = sweep[k].estimate.value.real();
    if (v > bound) return false;
    if (k > 0 && v < sweep[k - 1].estimate.value.real()) return false;
  }
  return true;
}

double poisson_check(double rho, double phi, unsigned nodes) {
  if (!(rho > 0.0 && rho < 1.0)) throw Error(ErrorCode::InvalidArgument, "Poisson check needs 0 < rho < 1");
  if (nodes < 8) throw Error(ErrorCode::InvalidArgument, "Poisson check needs >= 8 nodes");
  std::vector<double> values(nodes);
  const double h = 2.0 * std::numbers::pi / nodes;
  for (unsigned k = 0; k < nodes; ++k) {
    values[k] = (1.0 - rho * rho) / (1.0 - 2.0 * rho * std::cos(k * h - phi) + rho * rho);
  }
  return h * pairwise_sum(values);
}

std::vector<std::vector<ExactComplex>> pairwise_orthogonality(const DomainSpec& domain, unsigned max_n) {
  if (domain.kind() != DomainKind::Disc) {
    throw Error(ErrorCode::InvalidArgument, "pairwise orthogonality is defined for the disc");
  }
  std::vector<MixedPoly> images;
  for (unsigned n = 0; n <= max_n; ++n) {
    images.push_back(multiplier_solution(domain, Form01::single(orthonormal_basis_element(domain, MultiIndex{n}), 0)));
  }
  std::vector<std::vector<ExactComplex>> gram(images.size());
  for (std::size_t m = 0; m < images.size(); ++m) {
    for (std::size_t n = 0; n < images.size(); ++n) gram[m].push_back(inner_product_mixed(domain, images[m], images[n]));
  }
  return gram;
}

MixedPoly hankel_apply(const DomainSpec& domain, std::size_t j, const HoloPoly& g) {
  if (g.dim() != domain.dim()) throw Error(ErrorCode::DimensionMismatch, "symbol does not match domain");
  const MixedPoly v = times_zbar(g, j);
  MixedPoly h = v - to_mixed(bergman_project_exact(domain, v));
  if (!(h == multiplier_solution(domain, Form01::single(g, j)))) {
    throw Error(ErrorCode::ConsistencyFailure, "Hankel operator differs from the canonical solution operator");
  }
  return h;
}

}  // namespace bdbar
