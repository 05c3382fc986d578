#include "bdbar/bdbar.h"

#include <cmath>
#include <string>
#include <vector>

#include "bdbar/dbar_solver.hpp"
#include "bdbar/domains.hpp"
#include "bdbar/hs_analysis.hpp"
#include "bdbar/json_io.hpp"
#include "bdbar/kernels.hpp"
#include "bdbar/projection.hpp"
#include "bdbar/symbol_parser.hpp"
#include "bdbar/verify.hpp"

struct bdbar_context {
  bdbar::DomainSpec domain;
  std::string last_error;
  std::string json;
};

struct bdbar_poly {
  bdbar::MixedPoly value;
};

namespace {

using bdbar::Complex;
using bdbar::ErrorCode;
using bdbar::Json;

bdbar_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return BDBAR_E_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return BDBAR_E_DIMENSION_MISMATCH;
    case ErrorCode::OutsideDomain: return BDBAR_E_OUTSIDE_DOMAIN;
    case ErrorCode::NearSingularity: return BDBAR_E_NEAR_SINGULARITY;
    case ErrorCode::NonFiniteIntegrand: return BDBAR_E_NON_FINITE_INTEGRAND;
    case ErrorCode::IncommensurableScale: return BDBAR_E_INCOMMENSURABLE_SCALE;
    case ErrorCode::DegreeOverflow: return BDBAR_E_DEGREE_OVERFLOW;
    case ErrorCode::ConsistencyFailure: return BDBAR_E_CONSISTENCY_FAILURE;
    case ErrorCode::Parse: return BDBAR_E_PARSE;
  }
  return BDBAR_E_INTERNAL;
}

template <class F>
bdbar_status guard(bdbar_context* ctx, F&& body) {
  if (ctx == nullptr) return BDBAR_E_INVALID_ARGUMENT;
  try {
    ctx->last_error.clear();
    body();
    return BDBAR_OK;
  } catch (const bdbar::IntegrandError& e) {
    std::string where;
    for (const auto& z : e.point()) where += " (" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
    ctx->last_error = std::string(e.what()) + " at" + where;
    return BDBAR_E_NON_FINITE_INTEGRAND;
  } catch (const bdbar::Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    ctx->last_error = std::string("internal error: ") + e.what();
    return BDBAR_E_INTERNAL;
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw bdbar::Error(ErrorCode::InvalidArgument, what);
}

std::vector<Complex> point(const bdbar_context* ctx, const double* z) {
  require(z != nullptr, "point is NULL");
  std::vector<Complex> out;
  for (std::size_t j = 0; j < ctx->domain.dim(); ++j) out.emplace_back(z[2 * j], z[2 * j + 1]);
  return out;
}

bdbar::QuadratureSpec quad_spec(const bdbar_quad* q) {
  require(q != nullptr, "quadrature settings are NULL");
  bdbar::QuadratureSpec spec;
  spec.method = q->method == BDBAR_QUAD_MONTE_CARLO ? bdbar::QuadratureMethod::MonteCarlo
                                                     : bdbar::QuadratureMethod::PolarTensor;
  spec.radial_nodes = q->radial_nodes;
  spec.angular_nodes = q->angular_nodes;
  spec.mc_samples = q->samples;
  spec.seed = q->seed;
  spec.radius_cutoff = q->rho;
  return spec;
}

void store(Complex value, double* re, double* im) {
  require(re != nullptr && im != nullptr, "output pointer is NULL");
  *re = value.real();
  *im = value.imag();
}

void emit(bdbar_context* ctx, const Json& j, const char** out) {
  require(out != nullptr, "output pointer is NULL");
  ctx->json = j.dump();
  *out = ctx->json.c_str();
}

const bdbar::MixedPoly& poly_of(const bdbar_context* ctx, const bdbar_poly* p) {
  require(p != nullptr, "polynomial is NULL");
  if (p->value.dim() != ctx->domain.dim()) {
    throw bdbar::Error(ErrorCode::DimensionMismatch, "polynomial dimension differs from the context domain");
  }
  return p->value;
}

bdbar::HoloPoly holo_of(const bdbar_context* ctx, const bdbar_poly* p) {
  auto h = bdbar::to_holo(poly_of(ctx, p));
  if (!h) throw bdbar::Error(ErrorCode::InvalidArgument, "polynomial is not holomorphic");
  return *h;
}

bdbar::MultiIndex index_of(const bdbar_context* ctx, const unsigned* alpha) {
  require(alpha != nullptr, "multi-index is NULL");
  return bdbar::MultiIndex(std::vector<unsigned>(alpha, alpha + ctx->domain.dim()));
}

Json poly_list(const std::vector<bdbar::MixedPoly>& polys) {
  Json arr = Json::array();
  for (const auto& p : polys) arr.push_back(bdbar::to_json(p));
  return arr;
}

void give(bdbar::MixedPoly p, bdbar_poly** out) {
  require(out != nullptr, "output pointer is NULL");
  *out = new bdbar_poly{std::move(p)};
}

}  // namespace

extern "C" {

const char* bdbar_version(void) { return "1.0.0"; }

const char* bdbar_status_string(bdbar_status status) {
  switch (status) {
    case BDBAR_OK: return "ok";
    case BDBAR_E_INVALID_ARGUMENT: return "invalid argument";
    case BDBAR_E_DIMENSION_MISMATCH: return "dimension mismatch";
    case BDBAR_E_OUTSIDE_DOMAIN: return "point outside domain";
    case BDBAR_E_NEAR_SINGULARITY: return "near singularity";
    case BDBAR_E_NON_FINITE_INTEGRAND: return "non-finite integrand";
    case BDBAR_E_INCOMMENSURABLE_SCALE: return "incommensurable scale";
    case BDBAR_E_DEGREE_OVERFLOW: return "degree overflow";
    case BDBAR_E_CONSISTENCY_FAILURE: return "consistency failure";
    case BDBAR_E_PARSE: return "parse error";
    case BDBAR_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

bdbar_status bdbar_context_create(const char* domain, bdbar_context** out) {
  if (domain == nullptr || out == nullptr) return BDBAR_E_INVALID_ARGUMENT;
  try {
    *out = new bdbar_context{bdbar::DomainSpec::parse(domain), {}, {}};
    return BDBAR_OK;
  } catch (const bdbar::Error& e) {
    *out = nullptr;
    return status_of(e.code());
  } catch (const std::exception&) {
    *out = nullptr;
    return BDBAR_E_INTERNAL;
  }
}

void bdbar_context_destroy(bdbar_context* ctx) { delete ctx; }

size_t bdbar_context_dim(const bdbar_context* ctx) { return ctx == nullptr ? 0 : ctx->domain.dim(); }

const char* bdbar_last_error(const bdbar_context* ctx) { return ctx == nullptr ? "" : ctx->last_error.c_str(); }

void bdbar_quad_default(bdbar_quad* quad) {
  if (quad == nullptr) return;
  const bdbar::QuadratureSpec spec;
  *quad = {BDBAR_QUAD_POLAR, spec.radial_nodes, spec.angular_nodes, spec.mc_samples, spec.seed, spec.radius_cutoff};
}

bdbar_status bdbar_poly_parse(bdbar_context* ctx, const char* text, bdbar_poly** out) {
  return guard(ctx, [&] {
    require(text != nullptr, "symbol text is NULL");
    give(bdbar::parse_mixed(ctx->domain, text), out);
  });
}

void bdbar_poly_destroy(bdbar_poly* poly) { delete poly; }

bdbar_status bdbar_poly_is_holomorphic(bdbar_context* ctx, const bdbar_poly* poly, int* out) {
  return guard(ctx, [&] {
    require(out != nullptr, "output pointer is NULL");
    *out = bdbar::is_holomorphic(poly_of(ctx, poly)) ? 1 : 0;
  });
}

bdbar_status bdbar_poly_evaluate(bdbar_context* ctx, const bdbar_poly* poly, const double* z, double* re,
                                 double* im) {
  return guard(ctx, [&] { store(bdbar::evaluate(poly_of(ctx, poly), point(ctx, z)), re, im); });
}

bdbar_status bdbar_poly_json(bdbar_context* ctx, const bdbar_poly* poly, const char** json) {
  return guard(ctx, [&] {
    const auto& p = poly_of(ctx, poly);
    auto h = bdbar::to_holo(p);
    emit(ctx, h ? bdbar::to_json(*h) : bdbar::to_json(p), json);
  });
}

bdbar_status bdbar_parse_point(bdbar_context* ctx, const char* text, double* z) {
  return guard(ctx, [&] {
    require(text != nullptr && z != nullptr, "point text or output is NULL");
    const auto p = bdbar::parse_point(ctx->domain, text);
    for (std::size_t j = 0; j < p.size(); ++j) {
      z[2 * j] = p[j].real();
      z[2 * j + 1] = p[j].imag();
    }
  });
}

bdbar_status bdbar_parse_reals(bdbar_context* ctx, const char* text, double* values, size_t capacity,
                               size_t* count) {
  return guard(ctx, [&] {
    require(text != nullptr && values != nullptr && count != nullptr, "argument is NULL");
    const auto v = bdbar::parse_real_list(text);
    require(v.size() <= capacity, "too many values");
    for (std::size_t k = 0; k < v.size(); ++k) values[k] = v[k];
    *count = v.size();
  });
}

bdbar_status bdbar_kernel(bdbar_context* ctx, const double* z, const double* w, double* re, double* im) {
  return guard(ctx, [&] { store(bdbar::bergman_kernel(ctx->domain, point(ctx, z), point(ctx, w)), re, im); });
}

bdbar_status bdbar_reproducing_check(bdbar_context* ctx, const bdbar_poly* f, const double* z,
                                     const bdbar_quad* quad, double* re, double* im) {
  return guard(ctx, [&] {
    store(bdbar::reproducing_check(ctx->domain, holo_of(ctx, f), point(ctx, z), quad_spec(quad)), re, im);
  });
}

bdbar_status bdbar_project_exact(bdbar_context* ctx, const bdbar_poly* f, bdbar_poly** out) {
  return guard(ctx, [&] {
    give(bdbar::to_mixed(bdbar::bergman_project_exact(ctx->domain, poly_of(ctx, f))), out);
  });
}

bdbar_status bdbar_project_zbar_monomial(bdbar_context* ctx, size_t j, const unsigned* alpha, bdbar_poly** out) {
  return guard(ctx, [&] {
    give(bdbar::to_mixed(bdbar::project_zbar_monomial(ctx->domain, j, index_of(ctx, alpha))), out);
  });
}

bdbar_status bdbar_project_quadrature(bdbar_context* ctx, const bdbar_poly* f, const double* z,
                                      const bdbar_quad* quad, double* re, double* im) {
  return guard(ctx, [&] {
    const bdbar::CompiledPoly compiled(poly_of(ctx, f));
    const auto value = bdbar::bergman_project_quadrature(
        ctx->domain, [&compiled](std::span<const Complex> w) { return compiled(w); }, point(ctx, z),
        quad_spec(quad));
    store(value, re, im);
  });
}

bdbar_status bdbar_solve_exact(bdbar_context* ctx, const char* form, bdbar_poly** out) {
  return guard(ctx, [&] {
    require(form != nullptr, "form text is NULL");
    give(bdbar::multiplier_solution(ctx->domain, bdbar::parse_form(ctx->domain, form)), out);
  });
}

bdbar_status bdbar_solve_integral(bdbar_context* ctx, const char* form, const double* z, const bdbar_quad* quad,
                                  double* re, double* im) {
  return guard(ctx, [&] {
    require(form != nullptr, "form text is NULL");
    const auto g = bdbar::parse_form(ctx->domain, form);
    store(bdbar::integral_solution_eval(ctx->domain, g, point(ctx, z), quad_spec(quad)), re, im);
  });
}

bdbar_status bdbar_dbar(bdbar_context* ctx, const bdbar_poly* u, const char** json) {
  return guard(ctx, [&] { emit(ctx, poly_list(bdbar::dbar_apply(poly_of(ctx, u))), json); });
}

bdbar_status bdbar_pullback(bdbar_context* ctx, const char* map, const char* form, const char** json) {
  return guard(ctx, [&] {
    require(map != nullptr && form != nullptr, "map or form text is NULL");
    const auto f = bdbar::parse_map(ctx->domain, map);
    const auto g = bdbar::parse_form(ctx->domain, form);
    const auto pulled = bdbar::pullback_01(f, g);
    const auto u = bdbar::multiplier_solution(ctx->domain, g);
    const auto lhs = bdbar::dbar_apply(bdbar::compose(u, f));
    bool identity = true;
    for (std::size_t j = 0; j < pulled.size(); ++j) identity = identity && lhs[j] == pulled[j];
    bool holomorphic = true;
    for (const auto& c : pulled) holomorphic = holomorphic && bdbar::is_holomorphic(c);
    emit(ctx,
         Json{{"coefficients", poly_list(pulled)},
              {"holomorphic", holomorphic},
              {"dbar_of_composed_solution_matches", identity}},
         json);
  });
}

bdbar_status bdbar_nn_form(bdbar_context* ctx, const char* density, const char** json) {
  return guard(ctx, [&] {
    require(density != nullptr, "density text is NULL");
    const bdbar::NNForm omega{bdbar::parse_holo(ctx->domain, density)};
    const auto u = bdbar::nn_form_solution(ctx->domain, omega);
    emit(ctx, Json{{"components", poly_list(u)}, {"reassembly", bdbar::to_json(bdbar::nn_wedge_reassembly(u))}},
         json);
  });
}

bdbar_status bdbar_hankel(bdbar_context* ctx, size_t j, const bdbar_poly* g, bdbar_poly** out) {
  return guard(ctx, [&] { give(bdbar::hankel_apply(ctx->domain, j, holo_of(ctx, g)), out); });
}

bdbar_status bdbar_s1_norm(bdbar_context* ctx, const unsigned* alpha, size_t j, const char** json) {
  return guard(ctx, [&] {
    emit(ctx, bdbar::to_json(bdbar::s1_image_norm_sq(ctx->domain, index_of(ctx, alpha), j)), json);
  });
}

bdbar_status bdbar_hs_sum(bdbar_context* ctx, unsigned max_degree, const char** json) {
  return guard(ctx, [&] { emit(ctx, bdbar::to_json(bdbar::hs_partial_sum(ctx->domain, max_degree)), json); });
}

bdbar_status bdbar_kernel_l2(bdbar_context* ctx, const double* rho, size_t count, uint64_t samples, uint64_t seed,
                             const char** json) {
  return guard(ctx, [&] {
    require(rho != nullptr, "rho sweep is NULL");
    const auto sweep = bdbar::kernel_l2_integral(ctx->domain, std::vector<double>(rho, rho + count), samples, seed);
    Json j{{"samples", bdbar::to_json(sweep)}, {"growth_ratios", bdbar::kernel_l2_growth_ratios(sweep)}};
    if (ctx->domain.kind() == bdbar::DomainKind::Disc) {
      j["bound"] = bdbar::to_json(bdbar::disc_kernel_l2_bound());
      j["bounded"] = bdbar::kernel_l2_bounded(sweep);
    } else {
      j["ratio_threshold"] = bdbar::kDivergenceRatioThreshold;
      j["diverging"] = bdbar::kernel_l2_diverging(sweep);
    }
    emit(ctx, j, json);
  });
}

bdbar_status bdbar_poisson(bdbar_context* ctx, double rho, double phi, unsigned nodes, double* out) {
  return guard(ctx, [&] {
    require(out != nullptr, "output pointer is NULL");
    *out = bdbar::poisson_check(rho, phi, nodes);
  });
}

bdbar_status bdbar_orthogonality(bdbar_context* ctx, unsigned max_n, const char** json) {
  return guard(ctx, [&] {
    const auto gram = bdbar::pairwise_orthogonality(ctx->domain, max_n);
    Json rows = Json::array();
    bool diagonal = true;
    for (std::size_t m = 0; m < gram.size(); ++m) {
      Json row = Json::array();
      for (std::size_t n = 0; n < gram.size(); ++n) {
        row.push_back(gram[m][n].to_string());
        diagonal = diagonal && (m == n || gram[m][n].is_zero());
      }
      rows.push_back(std::move(row));
    }
    emit(ctx, Json{{"max_n", max_n}, {"gram", std::move(rows)}, {"diagonal", diagonal}}, json);
  });
}

bdbar_status bdbar_verify(bdbar_context* ctx, int criterion, bdbar_progress_fn progress, void* user,
                          const char** json, int* all_passed) {
  return guard(ctx, [&] {
    require(all_passed != nullptr, "output pointer is NULL");
    require(criterion >= 0 && criterion <= bdbar::kCriterionCount, "criterion must be 0..12");
    auto report = [&](const bdbar::CriterionResult& r) {
      if (progress != nullptr) progress(r.id, r.passed ? 1 : 0, r.title.c_str(), r.seconds, user);
    };
    std::vector<bdbar::CriterionResult> results;
    if (criterion == 0) {
      results = bdbar::run_paper_suite({}, report);
    } else {
      results.push_back(bdbar::run_criterion(criterion));
      report(results.back());
    }
    Json arr = Json::array();
    int passed = 0;
    for (const auto& r : results) {
      passed += r.passed ? 1 : 0;
      arr.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    }
    *all_passed = passed == static_cast<int>(results.size()) ? 1 : 0;
    emit(ctx, Json{{"criteria", std::move(arr)}, {"passed", passed}, {"total", results.size()}}, json);
  });
}

}  // extern "C"
