#pragma once

#include "bdbar/domain_spec.hpp"
#include "bdbar/exact.hpp"
#include "bdbar/poly.hpp"

namespace bdbar {

// ||z^alpha||^2 = int_Omega |z^alpha|^2 dlambda, exactly.
//   disc:      pi / (n + 1)
//   polydisc:  prod_j pi / (alpha_j + 1)
//   ball:      pi^n alpha! / (|alpha| + n)!
ExactScalar monomial_norm_sq(const DomainSpec& domain, const MultiIndex& alpha);

// z^alpha / ||z^alpha||, carried exactly as coefficient 1 with scale_sq = 1 / ||z^alpha||^2.
HoloPoly orthonormal_basis_element(const DomainSpec& domain, const MultiIndex& alpha);

// int_Omega z^alpha conj(z)^beta dlambda. All three domains are invariant under
// the torus action z_j -> e^{i t_j} z_j, so off-diagonal moments vanish.
ExactScalar mixed_moment(const DomainSpec& domain, const MultiIndex& alpha, const MultiIndex& beta);

// <f, g> = int_Omega f conj(g) dlambda. The result is exact whenever the
// product of the two polynomial scales is a perfect square (always the case
// for <f, f>); otherwise a nonzero result throws IncommensurableScale.
ExactComplex inner_product_mixed(const DomainSpec& domain, const MixedPoly& f, const MixedPoly& g);
ExactComplex inner_product_mixed(const DomainSpec& domain, const HoloPoly& f, const HoloPoly& g);

// ||f||^2 as an exact scalar.
ExactScalar norm_sq(const DomainSpec& domain, const MixedPoly& f);

}  // namespace bdbar
