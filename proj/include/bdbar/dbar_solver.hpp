#pragma once

#include <span>
#include <vector>

#include "bdbar/domain_spec.hpp"
#include "bdbar/poly.hpp"
#include "bdbar/quadrature.hpp"

namespace bdbar {

// g = sum_j g_j dconj(z_j) with holomorphic polynomial coefficients.
class Form01 {
 public:
  explicit Form01(std::vector<HoloPoly> coefficients);
  static Form01 zero(std::size_t dim);
  // g dconj(z_j), all other coefficients zero.
  static Form01 single(const HoloPoly& g, std::size_t j);

  std::size_t dim() const { return coefficients_.size(); }
  const std::vector<HoloPoly>& coefficients() const { return coefficients_; }
  const HoloPoly& operator[](std::size_t j) const { return coefficients_[j]; }
  unsigned degree() const;

 private:
  std::vector<HoloPoly> coefficients_;
};

// omega = density dz_1 ^ ... ^ dz_n ^ dconj(z_1) ^ ... ^ dconj(z_n).
struct NNForm {
  HoloPoly density;
};

// v = sum_j conj(z_j) g_j.
MixedPoly multiplier_symbol(const Form01& g);

// Canonical solution u = v - P(v) of dbar u = g, u orthogonal to A^2. Exact.
// Verifies dbar u = g and <u, z^alpha> = 0 for every relevant alpha before
// returning; a violation throws ConsistencyFailure.
MixedPoly multiplier_solution(const DomainSpec& domain, const Form01& g);

// S1(g)(z) = int B(z, w) sum_j g_j(w) (conj(z_j) - conj(w_j)) dlambda(w), by quadrature.
Complex integral_solution_eval(const DomainSpec& domain, const Form01& g, std::span<const Complex> z,
                               const QuadratureSpec& spec);

// Coefficients of dbar u: entry j is du/dconj(z_j).
std::vector<MixedPoly> dbar_apply(const MixedPoly& u);

// Components u_j of the (n, n-1)-form solving dbar u = omega:
//   u_j = ((-1)^(n+j-1) / n) (conj(z_j) density - P(conj(w_j) density)),  j = 1..n.
// Verifies u_j orthogonal to A^2 and that the wedge reassembly gives back the density.
std::vector<MixedPoly> nn_form_solution(const DomainSpec& domain, const NNForm& omega);

// Coefficient of dz_1 ^ ... ^ dz_n ^ dconj(z_1) ^ ... ^ dconj(z_n) in dbar u for
// u = sum_j u_j dz_1 ^ ... ^ dz_n ^ dconj(z_1) ^ ... [dconj(z_j)] ... ^ dconj(z_n),
// with each wedge product sorted into canonical order by its permutation sign.
MixedPoly nn_wedge_reassembly(std::span<const MixedPoly> components);

// Coefficients of F^* g: entry j is sum_l (g_l o F) conj(dF_l / dz_j).
std::vector<MixedPoly> pullback_01(std::span<const HoloPoly> map, const Form01& g);

}  // namespace bdbar
