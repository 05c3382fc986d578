#include "bdbar/json_io.hpp"

namespace bdbar {

namespace {

Json exact_pair(const GaussianRational& c) { return Json{{"re", to_string(c.re)}, {"im", to_string(c.im)}}; }

template <class Key>
Json terms_json(const Poly<Key>& p, bool mixed) {
  Json terms = Json::array();
  const auto floats = p.materialize();
  std::size_t k = 0;
  for (const auto& [key, c] : p.terms()) {
    Json t;
    if constexpr (std::is_same_v<Key, MixedKey>) {
      t["alpha"] = key.alpha.entries();
      if (mixed) t["beta"] = key.beta.entries();
    } else {
      t["alpha"] = key.entries();
    }
    t["coeff"] = exact_pair(c);
    t["float"] = to_json(floats[k++].second);
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace

Json to_json(const Rational& q) { return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

Json to_json(const ExactScalar& s) {
  return Json{{"num", s.rational().get_num().get_str()},
              {"den", s.rational().get_den().get_str()},
              {"pi_pow", s.pi_power()},
              {"exact", s.to_string()},
              {"float", s.to_double()}};
}

Json to_json(const ExactComplex& c) {
  return Json{{"re", to_string(c.value().re)},
              {"im", to_string(c.value().im)},
              {"pi_pow", c.pi_power()},
              {"exact", c.to_string()},
              {"float", to_json(c.to_complex())}};
}

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const HoloPoly& h) {
  return Json{{"kind", "holomorphic"}, {"dim", h.dim()}, {"scale_sq", to_json(h.scale_sq())},
              {"terms", terms_json(h, false)}};
}

Json to_json(const MixedPoly& f) {
  return Json{{"kind", "mixed"}, {"dim", f.dim()}, {"scale_sq", to_json(f.scale_sq())},
              {"terms", terms_json(f, true)}};
}

Json to_json(const QuadratureSpec& spec) {
  Json j;
  if (spec.method == QuadratureMethod::PolarTensor) {
    j["method"] = "polar";
    j["radial_nodes"] = spec.radial_nodes;
    j["angular_nodes"] = spec.angular_nodes;
  } else {
    j["method"] = "mc";
    j["samples"] = spec.mc_samples;
    j["seed"] = spec.seed;
  }
  j["rho"] = spec.radius_cutoff;
  return j;
}

Json to_json(const IntegralEstimate& estimate) {
  return Json{{"value", to_json(estimate.value)}, {"std_error", estimate.std_error},
              {"quadrature", to_json(estimate.spec_used)}};
}

Json to_json(const HSReport& report) {
  Json j;
  j["domain"] = report.domain.name();
  j["max_degree"] = report.max_degree;
  j["index_count"] = report.per_index_norms.size();
  j["partial_sum"] = to_json(report.partial_sum);
  j["verdict"] = to_string(report.verdict);
  j["limit"] = report.limit ? to_json(*report.limit) : Json(nullptr);
  Json trend = Json::array();
  for (const auto& [degree, value] : report.trend_samples) trend.push_back({{"degree", degree}, {"partial_sum", value}});
  j["trend_samples"] = std::move(trend);
  Json norms = Json::array();
  for (const auto& e : report.per_index_norms) {
    norms.push_back({{"alpha", e.alpha.entries()}, {"j", e.coordinate}, {"norm_sq", e.norm_sq.to_string()}});
  }
  j["per_index_norms"] = std::move(norms);
  return j;
}

Json to_json(const std::vector<KernelL2Sample>& sweep) {
  Json samples = Json::array();
  for (const auto& s : sweep) {
    samples.push_back({{"rho", s.rho},
                       {"estimate", s.estimate.value.real()},
                       {"std_error", s.estimate.std_error},
                       {"quadrature", to_json(s.estimate.spec_used)}});
  }
  return samples;
}

}  // namespace bdbar
