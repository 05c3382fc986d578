#include "bdbar/projection.hpp"

#include "bdbar/domains.hpp"
#include "bdbar/kernels.hpp"

namespace bdbar {

HoloPoly bergman_project_exact(const DomainSpec& domain, const MixedPoly& f) {
  if (f.dim() != domain.dim()) throw Error(ErrorCode::DimensionMismatch, "polynomial does not match domain");
  HoloPoly::TermMap out;
  for (const auto& [key, c] : f.terms()) {
    if (!key.alpha.dominates(key.beta)) continue;
    const MultiIndex gamma = key.alpha - key.beta;
    // <z^alpha conj(z)^beta, z^gamma> = int z^alpha conj(z)^(beta + gamma)
    const ExactScalar ratio = mixed_moment(domain, key.alpha, key.beta + gamma) / monomial_norm_sq(domain, gamma);
    if (ratio.pi_power() != 0) throw Error(ErrorCode::ConsistencyFailure, "projection ratio is not rational");
    auto [it, inserted] = out.try_emplace(gamma, c * GaussianRational(ratio.rational()));
    if (!inserted) it->second += c * GaussianRational(ratio.rational());
  }
  return HoloPoly(domain.dim(), std::move(out), f.scale_sq());
}

HoloPoly project_zbar_monomial(const DomainSpec& domain, std::size_t j, const MultiIndex& alpha) {
  require_dim(domain, alpha);
  if (j >= domain.dim()) throw Error(ErrorCode::DimensionMismatch, "coordinate index out of range");
  if (alpha[j] == 0) return HoloPoly(domain.dim());
  const MultiIndex lowered = alpha - MultiIndex::unit(domain.dim(), j);
  const long nj = alpha[j];
  switch (domain.kind()) {
    case DomainKind::Disc: {
      const long n = alpha[0];
      return HoloPoly::monomial(lowered).times_sqrt(ExactScalar(make_rational(n * n, n + 1), -1));
    }
    case DomainKind::Polydisc2: {
      const long n1 = alpha[0], n2 = alpha[1];
      return HoloPoly::monomial(lowered, GaussianRational(make_rational(nj, nj + 1)))
          .times_sqrt(ExactScalar(Rational((n1 + 1) * (n2 + 1)), -2));
    }
    case DomainKind::Ball2: {
      const unsigned n1 = alpha[0], n2 = alpha[1];
      const Rational scale = make_rational(factorial(n1 + n2 + 2), factorial(n1) * factorial(n2));
      return HoloPoly::monomial(lowered, GaussianRational(make_rational(nj, static_cast<long>(n1 + n2 + 2))))
          .times_sqrt(ExactScalar(scale, -2));
    }
  }
  return HoloPoly(domain.dim());
}

Complex bergman_project_quadrature(const DomainSpec& domain, const PointIntegrand& f, std::span<const Complex> z,
                                   const QuadratureSpec& spec) {
  require_quadrature_point(domain, z);
  return integrate(
             domain, [&](std::span<const Complex> w) { return bergman_kernel_unchecked(domain, z, w) * f(w); }, spec)
      .value;
}

}  // namespace bdbar
