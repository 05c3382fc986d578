#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "bdbar/exact.hpp"
#include "bdbar/hs_analysis.hpp"
#include "bdbar/poly.hpp"
#include "bdbar/quadrature.hpp"

namespace bdbar {

using Json = nlohmann::ordered_json;

inline constexpr const char* kJsonSchema = "bergman-dbar/1";

// Exact values carry their exact form plus a "float" convenience field.
Json to_json(const Rational& q);
Json to_json(const ExactScalar& s);
Json to_json(const ExactComplex& c);
Json to_json(Complex z);
Json to_json(const HoloPoly& h);
Json to_json(const MixedPoly& f);
Json to_json(const QuadratureSpec& spec);
Json to_json(const IntegralEstimate& estimate);
Json to_json(const HSReport& report);
Json to_json(const std::vector<KernelL2Sample>& sweep);

}  // namespace bdbar
