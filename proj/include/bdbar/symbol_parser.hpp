#pragma once

#include <string>
#include <vector>

#include "bdbar/dbar_solver.hpp"
#include "bdbar/domain_spec.hpp"
#include "bdbar/poly.hpp"

namespace bdbar {

// Expression syntax for polynomial symbols:
//   numbers      2, 0.25, 1/3 (via '/'), 1e-2, i
//   variables    z (disc), z1 z2 (two dimensions)
//   operators    + - * ^ and '/' by a nonzero constant, parentheses
//   conj(expr)   complex conjugate
//   u(n), u(n1,n2), U(n1,n2), e(...)
//                orthonormal basis elements (u: disc and polydisc, U: ball, e: any)
// Decimals are converted exactly, so every coefficient stays rational.
MixedPoly parse_mixed(const DomainSpec& domain, const std::string& text);

// As parse_mixed, but the result must be holomorphic.
HoloPoly parse_holo(const DomainSpec& domain, const std::string& text);

// Coefficients g_1; ...; g_n of a (0,1)-form, separated by ';'.
Form01 parse_form(const DomainSpec& domain, const std::string& text);

// Components F_1; ...; F_n of a holomorphic polynomial map.
std::vector<HoloPoly> parse_map(const DomainSpec& domain, const std::string& text);

// "0.3", "0.3+0.1i", "-0.5i", "i".
Complex parse_complex(const std::string& text);

// Comma-separated complex coordinates; the count must match the domain.
std::vector<Complex> parse_point(const DomainSpec& domain, const std::string& text);

// Comma-separated reals.
std::vector<double> parse_real_list(const std::string& text);

}  // namespace bdbar
