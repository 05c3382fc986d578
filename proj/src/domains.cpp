#include "bdbar/domains.hpp"

namespace bdbar {

ExactScalar monomial_norm_sq(const DomainSpec& domain, const MultiIndex& alpha) {
  require_dim(domain, alpha);
  const auto n = static_cast<int>(domain.dim());
  switch (domain.kind()) {
    case DomainKind::Disc:
    case DomainKind::Polydisc2: {
      Integer den(1);
      for (std::size_t j = 0; j < alpha.size(); ++j) den *= alpha[j] + 1;
      return {make_rational(Integer(1), den), n};
    }
    case DomainKind::Ball2: {
      Integer num(1);
      for (std::size_t j = 0; j < alpha.size(); ++j) num *= factorial(alpha[j]);
      return {make_rational(num, factorial(alpha.degree() + domain.dim())), n};
    }
  }
  return {};
}

HoloPoly orthonormal_basis_element(const DomainSpec& domain, const MultiIndex& alpha) {
  return HoloPoly::monomial(alpha).times_sqrt(ExactScalar(1) / monomial_norm_sq(domain, alpha));
}

ExactScalar mixed_moment(const DomainSpec& domain, const MultiIndex& alpha, const MultiIndex& beta) {
  require_dim(domain, alpha);
  require_dim(domain, beta);
  if (!(alpha == beta)) return {};
  return monomial_norm_sq(domain, alpha);
}

ExactComplex inner_product_mixed(const DomainSpec& domain, const MixedPoly& f, const MixedPoly& g) {
  if (f.dim() != domain.dim() || g.dim() != domain.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "inner product operands do not match " + domain.name());
  }
  // z^a conj(z)^b * conj(z^c conj(z)^d) = z^(a+d) conj(z)^(b+c)
  ExactComplex raw;
  for (const auto& [fk, fc] : f.terms()) {
    for (const auto& [gk, gc] : g.terms()) {
      const MultiIndex holo = fk.alpha + gk.beta;
      const MultiIndex anti = fk.beta + gk.alpha;
      if (!(holo == anti)) continue;
      raw += ExactComplex(fc * gc.conj()) * ExactComplex(monomial_norm_sq(domain, holo));
    }
  }
  if (raw.is_zero()) return raw;
  ExactScalar scale;
  if (!(f.scale_sq() * g.scale_sq()).sqrt(scale)) {
    throw Error(ErrorCode::IncommensurableScale,
                "inner product sqrt(" + f.scale_sq().to_string() + " * " + g.scale_sq().to_string() +
                    ") * " + raw.to_string() + " has no exact representation");
  }
  return raw * ExactComplex(scale);
}

ExactComplex inner_product_mixed(const DomainSpec& domain, const HoloPoly& f, const HoloPoly& g) {
  return inner_product_mixed(domain, to_mixed(f), to_mixed(g));
}

ExactScalar norm_sq(const DomainSpec& domain, const MixedPoly& f) {
  const ExactComplex v = inner_product_mixed(domain, f, f);
  if (!v.is_real() || v.real().sign() < 0) {
    throw Error(ErrorCode::ConsistencyFailure, "squared norm is not a nonnegative real: " + v.to_string());
  }
  return v.real();
}

}  // namespace bdbar
