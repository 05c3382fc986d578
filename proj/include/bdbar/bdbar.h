/* C interface to the bergman-dbar library.
 *
 * All state lives in an opaque context bound to one model domain. Functions
 * return a status code; on failure bdbar_last_error() describes the problem.
 * Points are passed as interleaved (re, im) doubles, 2 * dim values.
 * JSON strings returned through `const char**` are owned by the context and
 * stay valid until the next call on the same context. */
#ifndef BDBAR_BDBAR_H
#define BDBAR_BDBAR_H

#include <stddef.h>
#include <stdint.h>

#if defined(BDBAR_BUILDING_LIBRARY)
#define BDBAR_API __attribute__((visibility("default")))
#else
#define BDBAR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bdbar_status {
  BDBAR_OK = 0,
  BDBAR_E_INVALID_ARGUMENT = 1,
  BDBAR_E_DIMENSION_MISMATCH = 2,
  BDBAR_E_OUTSIDE_DOMAIN = 3,
  BDBAR_E_NEAR_SINGULARITY = 4,
  BDBAR_E_NON_FINITE_INTEGRAND = 5,
  BDBAR_E_INCOMMENSURABLE_SCALE = 6,
  BDBAR_E_DEGREE_OVERFLOW = 7,
  BDBAR_E_CONSISTENCY_FAILURE = 8,
  BDBAR_E_PARSE = 9,
  BDBAR_E_INTERNAL = 10
} bdbar_status;

typedef enum bdbar_quad_method { BDBAR_QUAD_POLAR = 0, BDBAR_QUAD_MONTE_CARLO = 1 } bdbar_quad_method;

typedef struct bdbar_quad {
  bdbar_quad_method method;
  unsigned radial_nodes;
  unsigned angular_nodes;
  uint64_t samples;
  uint64_t seed;
  double rho;
} bdbar_quad;

typedef struct bdbar_context bdbar_context;
typedef struct bdbar_poly bdbar_poly;

typedef void (*bdbar_progress_fn)(int criterion, int passed, const char* title, double seconds, void* user);

BDBAR_API const char* bdbar_version(void);
BDBAR_API const char* bdbar_status_string(bdbar_status status);

/* domain: "disc", "polydisc2" (or "bidisc"), "ball2". */
BDBAR_API bdbar_status bdbar_context_create(const char* domain, bdbar_context** out);
BDBAR_API void bdbar_context_destroy(bdbar_context* ctx);
BDBAR_API size_t bdbar_context_dim(const bdbar_context* ctx);
BDBAR_API const char* bdbar_last_error(const bdbar_context* ctx);

/* Polar 64x128, rho 1; Monte Carlo fields 10^6 samples, seed 42. */
BDBAR_API void bdbar_quad_default(bdbar_quad* quad);

/* Symbols: polynomials in z, conj(z) with basis elements u(..), U(..), e(..). */
BDBAR_API bdbar_status bdbar_poly_parse(bdbar_context* ctx, const char* text, bdbar_poly** out);
BDBAR_API void bdbar_poly_destroy(bdbar_poly* poly);
BDBAR_API bdbar_status bdbar_poly_is_holomorphic(bdbar_context* ctx, const bdbar_poly* poly, int* out);
BDBAR_API bdbar_status bdbar_poly_evaluate(bdbar_context* ctx, const bdbar_poly* poly, const double* z, double* re,
                                           double* im);
BDBAR_API bdbar_status bdbar_poly_json(bdbar_context* ctx, const bdbar_poly* poly, const char** json);

/* Comma-separated complex coordinates such as "0.3+0.1i,-0.2i"; writes 2 * dim doubles. */
BDBAR_API bdbar_status bdbar_parse_point(bdbar_context* ctx, const char* text, double* z);
/* Comma-separated reals; writes at most `capacity` values and stores the count. */
BDBAR_API bdbar_status bdbar_parse_reals(bdbar_context* ctx, const char* text, double* values, size_t capacity,
                                         size_t* count);

/* Kernels. */
BDBAR_API bdbar_status bdbar_kernel(bdbar_context* ctx, const double* z, const double* w, double* re, double* im);
BDBAR_API bdbar_status bdbar_reproducing_check(bdbar_context* ctx, const bdbar_poly* f, const double* z,
                                               const bdbar_quad* quad, double* re, double* im);

/* Projection. */
BDBAR_API bdbar_status bdbar_project_exact(bdbar_context* ctx, const bdbar_poly* f, bdbar_poly** out);
BDBAR_API bdbar_status bdbar_project_zbar_monomial(bdbar_context* ctx, size_t j, const unsigned* alpha,
                                                   bdbar_poly** out);
BDBAR_API bdbar_status bdbar_project_quadrature(bdbar_context* ctx, const bdbar_poly* f, const double* z,
                                                const bdbar_quad* quad, double* re, double* im);

/* dbar solver. Forms are ';'-separated holomorphic coefficients g_1; ...; g_n. */
BDBAR_API bdbar_status bdbar_solve_exact(bdbar_context* ctx, const char* form, bdbar_poly** out);
BDBAR_API bdbar_status bdbar_solve_integral(bdbar_context* ctx, const char* form, const double* z,
                                            const bdbar_quad* quad, double* re, double* im);
/* JSON array of the coefficients du/dconj(z_j). */
BDBAR_API bdbar_status bdbar_dbar(bdbar_context* ctx, const bdbar_poly* u, const char** json);
/* JSON of the pullback F^* g; `map` is ';'-separated components of F. */
BDBAR_API bdbar_status bdbar_pullback(bdbar_context* ctx, const char* map, const char* form, const char** json);
/* JSON of the components u_j solving dbar u = density dz ^ dconj(z). */
BDBAR_API bdbar_status bdbar_nn_form(bdbar_context* ctx, const char* density, const char** json);
/* (I - P)(conj(z_j) g). */
BDBAR_API bdbar_status bdbar_hankel(bdbar_context* ctx, size_t j, const bdbar_poly* g, bdbar_poly** out);

/* Hilbert-Schmidt diagnostics; results as JSON. */
BDBAR_API bdbar_status bdbar_s1_norm(bdbar_context* ctx, const unsigned* alpha, size_t j, const char** json);
BDBAR_API bdbar_status bdbar_hs_sum(bdbar_context* ctx, unsigned max_degree, const char** json);
BDBAR_API bdbar_status bdbar_kernel_l2(bdbar_context* ctx, const double* rho, size_t count, uint64_t samples,
                                       uint64_t seed, const char** json);
BDBAR_API bdbar_status bdbar_poisson(bdbar_context* ctx, double rho, double phi, unsigned nodes, double* out);
BDBAR_API bdbar_status bdbar_orthogonality(bdbar_context* ctx, unsigned max_n, const char** json);

/* Acceptance suite: criterion 1..12, or 0 for all. `progress` may be NULL. */
BDBAR_API bdbar_status bdbar_verify(bdbar_context* ctx, int criterion, bdbar_progress_fn progress, void* user,
                                    const char** json, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* BDBAR_BDBAR_H */
