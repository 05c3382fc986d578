#include "bdbar/dbar_solver.hpp"

#include <algorithm>
#include <set>

#include "bdbar/domains.hpp"
#include "bdbar/kernels.hpp"
#include "bdbar/projection.hpp"

namespace bdbar {

namespace {

void require_form(const DomainSpec& domain, const Form01& g) {
  if (g.dim() != domain.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "form has " + std::to_string(g.dim()) + " coefficients, " +
                                                  domain.name() + " needs " + std::to_string(domain.dim()));
  }
}

// <u, z^gamma> == 0 for all gamma up to max_degree. Only gamma = alpha - beta
// over the terms of u can pair to something nonzero.
void require_orthogonal(const DomainSpec& domain, const MixedPoly& u, unsigned max_degree, const char* what) {
  std::set<MultiIndex> candidates;
  for (const auto& [key, c] : u.terms()) {
    if (key.alpha.dominates(key.beta)) {
      MultiIndex gamma = key.alpha - key.beta;
      if (gamma.degree() <= max_degree) candidates.insert(std::move(gamma));
    }
  }
  for (const auto& gamma : candidates) {
    if (!inner_product_mixed(domain, u, to_mixed(HoloPoly::monomial(gamma))).is_zero()) {
      throw Error(ErrorCode::ConsistencyFailure,
                  std::string(what) + " is not orthogonal to z^" + gamma.to_string());
    }
  }
}

// Sign of the permutation sorting `slots` ascending; 0 if a slot repeats.
int permutation_sign(std::vector<int> slots) {
  int sign = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    for (std::size_t k = i + 1; k < slots.size(); ++k) {
      if (slots[i] == slots[k]) return 0;
      if (slots[i] > slots[k]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace

Form01::Form01(std::vector<HoloPoly> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw Error(ErrorCode::InvalidArgument, "a (0,1)-form needs at least one coefficient");
  for (const auto& c : coefficients_) {
    if (c.dim() != coefficients_.size()) {
      throw Error(ErrorCode::DimensionMismatch, "form coefficient dimension differs from the number of coefficients");
    }
  }
}

Form01 Form01::zero(std::size_t dim) { return Form01(std::vector<HoloPoly>(dim, HoloPoly(dim))); }

Form01 Form01::single(const HoloPoly& g, std::size_t j) {
  std::vector<HoloPoly> coeffs(g.dim(), HoloPoly(g.dim()));
  if (j >= g.dim()) throw Error(ErrorCode::DimensionMismatch, "coordinate index out of range");
  coeffs[j] = g;
  return Form01(std::move(coeffs));
}

unsigned Form01::degree() const {
  unsigned d = 0;
  for (const auto& c : coefficients_) d = std::max(d, c.degree());
  return d;
}

MixedPoly multiplier_symbol(const Form01& g) {
  MixedPoly v(g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) v += times_zbar(g[j], j);
  return v;
}

MixedPoly multiplier_solution(const DomainSpec& domain, const Form01& g) {
  require_form(domain, g);
  const MixedPoly v = multiplier_symbol(g);
  MixedPoly u = v - to_mixed(bergman_project_exact(domain, v));

  const auto d = dbar_apply(u);
  for (std::size_t j = 0; j < g.dim(); ++j) {
    if (!(d[j] == to_mixed(g[j]))) {
      throw Error(ErrorCode::ConsistencyFailure, "dbar of the solution differs from coefficient " + std::to_string(j));
    }
  }
  require_orthogonal(domain, u, g.degree() + 2, "canonical solution");
  return u;
}

Complex integral_solution_eval(const DomainSpec& domain, const Form01& g, std::span<const Complex> z,
                               const QuadratureSpec& spec) {
  require_form(domain, g);
  require_quadrature_point(domain, z);
  std::vector<CompiledPoly> coeffs;
  bool all_zero = true;
  for (const auto& c : g.coefficients()) {
    coeffs.emplace_back(c);
    all_zero = all_zero && c.is_zero();
  }
  if (all_zero) return 0.0;
  const std::size_t n = domain.dim();
  const auto estimate = integrate(
      domain,
      [&](std::span<const Complex> w) {
        Complex pairing = 0.0;
        for (std::size_t j = 0; j < n; ++j) pairing += coeffs[j](w) * (std::conj(z[j]) - std::conj(w[j]));
        return bergman_kernel_unchecked(domain, z, w) * pairing;
      },
      spec);
  return estimate.value;
}

std::vector<MixedPoly> dbar_apply(const MixedPoly& u) {
  std::vector<MixedPoly> out;
  out.reserve(u.dim());
  for (std::size_t j = 0; j < u.dim(); ++j) out.push_back(d_dzbar(u, j));
  return out;
}

std::vector<MixedPoly> nn_form_solution(const DomainSpec& domain, const NNForm& omega) {
  const std::size_t n = domain.dim();
  if (omega.density.dim() != n) throw Error(ErrorCode::DimensionMismatch, "density does not match domain");
  std::vector<MixedPoly> u;
  for (std::size_t j = 0; j < n; ++j) {
    // (-1)^(n+j-1) with j counted from 1
    const long sign = ((n + (j + 1) - 1) % 2 == 0) ? 1 : -1;
    const GaussianRational factor(make_rational(sign, static_cast<long>(n)));
    const MixedPoly w = times_zbar(omega.density, j);
    MixedPoly uj = (w - to_mixed(bergman_project_exact(domain, w))) * factor;
    require_orthogonal(domain, uj, omega.density.degree() + 2, "(n,n-1)-form component");
    u.push_back(std::move(uj));
  }
  if (!(nn_wedge_reassembly(u) == to_mixed(omega.density))) {
    throw Error(ErrorCode::ConsistencyFailure, "dbar of the (n,n-1)-form does not reproduce the density");
  }
  return u;
}

MixedPoly nn_wedge_reassembly(std::span<const MixedPoly> components) {
  const std::size_t n = components.size();
  // Slots 0..n-1 hold dz_1..dz_n, slots n..2n-1 hold dconj(z_1)..dconj(z_n).
  MixedPoly total(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<int> slots;
      slots.push_back(static_cast<int>(n + k));  // the new dconj(z_k) in front
      for (std::size_t s = 0; s < n; ++s) slots.push_back(static_cast<int>(s));
      for (std::size_t s = 0; s < n; ++s) {
        if (s != j) slots.push_back(static_cast<int>(n + s));
      }
      const int sign = permutation_sign(slots);
      if (sign == 0) continue;
      total += d_dzbar(components[j], k) * GaussianRational(sign);
    }
  }
  return total;
}

std::vector<MixedPoly> pullback_01(std::span<const HoloPoly> map, const Form01& g) {
  const std::size_t n = g.dim();
  if (map.size() != n) throw Error(ErrorCode::DimensionMismatch, "map and form dimensions differ");
  std::vector<MixedPoly> composed;
  for (std::size_t l = 0; l < n; ++l) composed.push_back(to_mixed(compose(g[l], map)));
  std::vector<MixedPoly> out;
  for (std::size_t j = 0; j < n; ++j) {
    MixedPoly coeff(n);
    for (std::size_t l = 0; l < n; ++l) coeff += composed[l] * conj(d_dz(map[l], j));
    out.push_back(std::move(coeff));
  }
  return out;
}

}  // namespace bdbar
