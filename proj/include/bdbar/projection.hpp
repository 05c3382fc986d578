#pragma once

#include <span>

#include "bdbar/domain_spec.hpp"
#include "bdbar/poly.hpp"
#include "bdbar/quadrature.hpp"

namespace bdbar {

// Bergman projection of a polynomial in z and conj(z), by finite moment sums:
//   P(f) = sum_gamma <f, z^gamma> / ||z^gamma||^2 z^gamma,
// where only gamma = alpha - beta over the terms z^alpha conj(z)^beta of f with
// alpha >= beta contribute. Exact; the result keeps the scale of f.
HoloPoly bergman_project_exact(const DomainSpec& domain, const MixedPoly& f);

// Closed form of P(conj(z_j) e_alpha) for the orthonormal basis element e_alpha
// (coordinate j counted from 0):
//   disc      sqrt(n^2 / ((n+1) pi)) z^(n-1)
//   polydisc  sqrt((n1+1)(n2+1)) / pi * n_j / (n_j + 1) * z^(alpha - e_j)
//   ball      sqrt((n1+n2+2)!) / (pi sqrt(n1! n2!)) * n_j / (n1+n2+2) * z^(alpha - e_j)
// Zero when alpha_j = 0.
HoloPoly project_zbar_monomial(const DomainSpec& domain, std::size_t j, const MultiIndex& alpha);

// int B(z, w) f(w) dlambda(w) by quadrature; max_j |z_j| <= 0.9.
Complex bergman_project_quadrature(const DomainSpec& domain, const PointIntegrand& f, std::span<const Complex> z,
                                   const QuadratureSpec& spec);

}  // namespace bdbar
